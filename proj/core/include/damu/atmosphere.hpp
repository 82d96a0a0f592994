// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace damu::atmosphere {

/// Ambient conditions at one altitude.
struct AtmosphereSample {
    double altitude_m = 0.0;
    double temperature_K = 0.0;
    double pressure_Pa = 0.0;
    double density_kg_m3 = 0.0;
    double water_vapor_density_g_m3 = 0.0;
};

inline constexpr double kGravity = 9.80665;         // m/s^2
inline constexpr double kDryAirGasConstant = 287.05; // J/(kg K)
inline constexpr double kMaxModelAltitudeM = 32000.0;

/// International Standard Atmosphere sample at `altitude_m` (treated as
/// geopotential height). Water vapor decays exponentially from the surface
/// value with a 2 km scale height. Valid for 0..32 km; throws
/// std::out_of_range outside that band and std::domain_error for a negative
/// surface vapor density.
AtmosphereSample isa_sample(double altitude_m, double surface_water_vapor_g_m3 = 7.5);

} // namespace damu::atmosphere
