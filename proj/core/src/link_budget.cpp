// SPDX-License-Identifier: Apache-2.0

#include "damu/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace damu::linkbudget {

namespace {
constexpr double kSpeedOfLightMps = 299792458.0;
} // namespace

void validate(const RadioConfig& radio)
{
    if (!(radio.frequency_GHz >= 1.0) || !(radio.frequency_GHz <= 100.0)) {
        throw std::domain_error("radio config: frequency must be within 1..100 GHz");
    }
    if (!(radio.tx_gain_dBi >= -10.0) || !(radio.tx_gain_dBi <= 60.0) ||
        !(radio.rx_gain_dBi >= -10.0) || !(radio.rx_gain_dBi <= 60.0)) {
        throw std::domain_error("radio config: gains must be within -10..60 dBi");
    }
}

double fspl(double distance_m, double frequency_GHz)
{
    if (!(distance_m > 0.0)) {
        throw std::domain_error("fspl: distance must be > 0");
    }
    const double f_hz = frequency_GHz * 1e9;
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * f_hz / kSpeedOfLightMps);
}

LinkReport rf_link(const geometry::Position3D& a, const geometry::Position3D& b,
                   const RadioConfig& radio, const attenuation::WeatherProfile& profile,
                   const attenuation::Tables& tables)
{
    validate(radio);
    const attenuation::AttenuationBreakdown breakdown =
        attenuation::path_attenuation(profile, a, b, radio.frequency_GHz, 100.0, tables);

    LinkReport report;
    report.distance_m = geometry::slant_distance(a, b);
    report.elevation_deg = geometry::elevation_angle(a, b);
    report.fspl_dB = fspl(report.distance_m, radio.frequency_GHz);
    report.gaseous_dB = breakdown.gaseous_dB;
    report.rain_dB = breakdown.rain_dB;
    report.cloud_dB = breakdown.cloud_dB;
    report.fog_dB = breakdown.fog_dB;
    report.rx_power_dBm = radio.tx_power_dBm + radio.tx_gain_dBi + radio.rx_gain_dBi -
                          report.fspl_dB - breakdown.total_dB;
    report.margin_dB = report.rx_power_dBm - radio.rx_sensitivity_dBm;
    report.viable = report.margin_dB >= 0.0;
    return report;
}

double laser_delivery(double tx_power_W, double distance_m,
                      attenuation::VisibilityClass visibility, double rx_efficiency)
{
    if (!(tx_power_W >= 0.0)) {
        throw std::domain_error("laser_delivery: power must be >= 0");
    }
    if (!(distance_m >= 0.0)) {
        throw std::domain_error("laser_delivery: distance must be >= 0");
    }
    if (!(rx_efficiency > 0.0) || !(rx_efficiency <= 1.0)) {
        throw std::domain_error("laser_delivery: efficiency must be in (0, 1]");
    }
    const double loss_dB = attenuation::laser_specific_loss(visibility) * distance_m / 1000.0;
    return tx_power_W * std::pow(10.0, -loss_dB / 10.0) * rx_efficiency;
}

} // namespace damu::linkbudget
