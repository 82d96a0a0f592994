// SPDX-License-Identifier: Apache-2.0

#include "damu/atmosphere.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace damu::atmosphere {

namespace {

// Standard ISA lapse-rate table (base geopotential altitude, lapse rate).
// The model is cut off at 32 km: no node class operates above that.
struct Layer {
    double base_m;
    double lapse_K_per_m;
};

constexpr std::array<Layer, 7> kLayers{{
    {0.0, -0.0065},
    {11000.0, 0.0},
    {20000.0, 0.001},
    {32000.0, 0.0028},
    {47000.0, 0.0},
    {51000.0, -0.0028},
    {71000.0, -0.002},
}};

constexpr double kSeaLevelTemperatureK = 288.15;
constexpr double kSeaLevelPressurePa = 101325.0;
constexpr double kVaporScaleHeightM = 2000.0;

} // namespace

AtmosphereSample isa_sample(double altitude_m, double surface_water_vapor_g_m3)
{
    if (!(altitude_m >= 0.0) || !(altitude_m <= kMaxModelAltitudeM)) {
        throw std::out_of_range("isa_sample: altitude " + std::to_string(altitude_m) +
                                " m outside modeled range 0..32000 m");
    }
    if (!(surface_water_vapor_g_m3 >= 0.0)) {
        throw std::domain_error("isa_sample: surface water vapor density must be >= 0");
    }

    double temperature = kSeaLevelTemperatureK;
    double pressure = kSeaLevelPressurePa;
    for (std::size_t i = 0; i < kLayers.size(); ++i) {
        const Layer& layer = kLayers[i];
        const double top = (i + 1 < kLayers.size()) ? kLayers[i + 1].base_m : 86000.0;
        const double dh = std::min(altitude_m, top) - layer.base_m;
        const bool final_layer = altitude_m <= top;
        double next_temperature = temperature;
        double next_pressure = pressure;
        if (layer.lapse_K_per_m == 0.0) {
            next_pressure = pressure * std::exp(-kGravity * dh / (kDryAirGasConstant * temperature));
        } else {
            next_temperature = temperature + layer.lapse_K_per_m * dh;
            next_pressure = pressure * std::pow(next_temperature / temperature,
                                                -kGravity / (kDryAirGasConstant * layer.lapse_K_per_m));
        }
        if (final_layer) {
            temperature = next_temperature;
            pressure = next_pressure;
            break;
        }
        temperature = next_temperature;
        pressure = next_pressure;
    }

    AtmosphereSample sample;
    sample.altitude_m = altitude_m;
    sample.temperature_K = temperature;
    sample.pressure_Pa = pressure;
    sample.density_kg_m3 = pressure / (kDryAirGasConstant * temperature);
    sample.water_vapor_density_g_m3 =
        surface_water_vapor_g_m3 * std::exp(-altitude_m / kVaporScaleHeightM);
    return sample;
}

} // namespace damu::atmosphere
