// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "damu/node_class.hpp"

namespace damu::aero {

/// Fixed-wing airframe parameters. C_L is the lift coefficient at the
/// operating angle of attack; it is a direct input because no airfoil polar
/// is modeled.
struct Airframe {
    double wing_area_m2 = 0.0;
    double lift_coefficient = 0.0;
    double empty_mass_kg = 0.0;
    double payload_mass_kg = 0.0;
};

/// Throws std::domain_error if the airframe violates its invariants
/// (area > 0, 0 < C_L <= 3, masses >= 0).
void validate(const Airframe& airframe);

/// Lift L = C_L * rho * V^2 * A / 2, in newtons.
/// Negative inputs throw std::domain_error.
double lift_force(double lift_coefficient, double density_kg_m3, double speed_mps,
                  double wing_area_m2);

/// Slowest speed at which lift carries the airframe's total weight.
/// Zero area or zero C_L is infeasible and throws std::domain_error.
double min_sustaining_speed(const Airframe& airframe, double density_kg_m3);

/// Payload bound per UAV class: rotary-wing < 100 kg, fixed-wing < 1000 kg,
/// balloon and ground unconstrained.
bool payload_feasible(NodeClass node_class, double payload_kg);

} // namespace damu::aero
