// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "damu/attenuation.hpp"
#include "damu/geometry.hpp"

namespace damu::linkbudget {

/// Scalar radio parameters; beam pointing is assumed ideal, so antenna
/// gains are plain dBi inputs.
struct RadioConfig {
    double tx_power_dBm = 0.0;
    double tx_gain_dBi = 0.0;
    double rx_gain_dBi = 0.0;
    double frequency_GHz = 28.0;
    double rx_sensitivity_dBm = -90.0;
};

/// Throws std::domain_error when frequency is outside [1, 100] GHz or a
/// gain is outside [-10, 60] dBi.
void validate(const RadioConfig& radio);

/// Per-link budget decomposition. rx_power_dBm always satisfies
/// tx_power + gains - fspl - (gaseous + rain + cloud + fog) exactly, and
/// viable <=> margin_dB >= 0.
struct LinkReport {
    double distance_m = 0.0;
    double elevation_deg = 0.0;
    double fspl_dB = 0.0;
    double gaseous_dB = 0.0;
    double rain_dB = 0.0;
    double cloud_dB = 0.0;
    double fog_dB = 0.0;
    double rx_power_dBm = 0.0;
    double margin_dB = 0.0;
    bool viable = false;
};

/// Free-space path loss 20*log10(4*pi*d*f/c) in dB.
/// Throws std::domain_error for d <= 0.
double fspl(double distance_m, double frequency_GHz);

/// Full RF budget for the path a -> b: slant distance, signed elevation
/// seen from a, FSPL and the weather attenuation breakdown. Propagates the
/// geometry and attenuation validity errors (coincident points, grazing
/// paths below 5 degrees).
LinkReport rf_link(const geometry::Position3D& a, const geometry::Position3D& b,
                   const RadioConfig& radio, const attenuation::WeatherProfile& profile,
                   const attenuation::Tables& tables = attenuation::default_tables());

/// Delivered optical power in watts:
/// tx_power * 10^(-gamma * d_km / 10) * rx_efficiency, with gamma the
/// visibility-class laser loss. Efficiency must be in (0, 1].
double laser_delivery(double tx_power_W, double distance_m,
                      attenuation::VisibilityClass visibility, double rx_efficiency);

} // namespace damu::linkbudget
