// SPDX-License-Identifier: Apache-2.0

#include "damu/aero.hpp"

#include "damu/atmosphere.hpp"

#include <cmath>
#include <stdexcept>

namespace damu::aero {

void validate(const Airframe& airframe)
{
    if (!(airframe.wing_area_m2 > 0.0)) {
        throw std::domain_error("airframe: wing area must be > 0");
    }
    if (!(airframe.lift_coefficient > 0.0) || !(airframe.lift_coefficient <= 3.0)) {
        throw std::domain_error("airframe: lift coefficient must be in (0, 3]");
    }
    if (!(airframe.empty_mass_kg >= 0.0) || !(airframe.payload_mass_kg >= 0.0)) {
        throw std::domain_error("airframe: masses must be >= 0");
    }
}

double lift_force(double lift_coefficient, double density_kg_m3, double speed_mps,
                  double wing_area_m2)
{
    if (!(lift_coefficient >= 0.0) || !(density_kg_m3 >= 0.0) || !(speed_mps >= 0.0) ||
        !(wing_area_m2 >= 0.0)) {
        throw std::domain_error("lift_force: all inputs must be >= 0");
    }
    return lift_coefficient * density_kg_m3 * speed_mps * speed_mps * wing_area_m2 / 2.0;
}

double min_sustaining_speed(const Airframe& airframe, double density_kg_m3)
{
    if (!(airframe.wing_area_m2 > 0.0) || !(airframe.lift_coefficient > 0.0)) {
        throw std::domain_error("min_sustaining_speed: zero wing area or lift coefficient");
    }
    if (!(density_kg_m3 > 0.0)) {
        throw std::domain_error("min_sustaining_speed: density must be > 0");
    }
    validate(airframe);
    const double weight_n =
        (airframe.empty_mass_kg + airframe.payload_mass_kg) * atmosphere::kGravity;
    return std::sqrt(2.0 * weight_n /
                     (airframe.lift_coefficient * density_kg_m3 * airframe.wing_area_m2));
}

bool payload_feasible(NodeClass node_class, double payload_kg)
{
    if (!(payload_kg >= 0.0)) {
        throw std::domain_error("payload_feasible: payload must be >= 0");
    }
    switch (node_class) {
    case NodeClass::rotary_wing: return payload_kg < 100.0;
    case NodeClass::fixed_wing: return payload_kg < 1000.0;
    case NodeClass::balloon:
    case NodeClass::ground: return true;
    }
    return false;
}

} // namespace damu::aero
