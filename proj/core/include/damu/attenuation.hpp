// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "damu/atmosphere.hpp"
#include "damu/geometry.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace damu::attenuation {

enum class VisibilityClass { clear, haze, heavy_fog };
enum class Polarization { horizontal, vertical, circular };

VisibilityClass visibility_class_from_string(std::string_view s);
std::string_view to_string(VisibilityClass v);

/// Vertically layered weather along a propagation path. Rain fills
/// [0, rain_top_m), fog fills [0, fog_top_m), cloud fills
/// [cloud_base_m, cloud_top_m). The liquid water temperature feeds the
/// dielectric model for both fog and cloud; 273.15 K is the conventional
/// reference. surface_water_vapor_g_m3 anchors the humidity profile used
/// for gaseous attenuation.
struct WeatherProfile {
    double rain_rate_mm_h = 0.0;
    double rain_top_m = 1700.0;
    double fog_lwd_g_m3 = 0.0;
    double fog_top_m = 0.0;
    double cloud_lwd_g_m3 = 0.0;
    double cloud_base_m = 0.0;
    double cloud_top_m = 0.0;
    double liquid_water_temp_K = 273.15;
    double surface_water_vapor_g_m3 = 7.5;
    VisibilityClass visibility_class = VisibilityClass::clear;
};

/// Throws std::domain_error when a profile breaks its sanity bounds
/// (densities/rates >= 0, fog LWD <= 1 g/m^3, cloud LWD <= 5 g/m^3,
/// cloud_top > cloud_base whenever cloud LWD > 0).
void validate(const WeatherProfile& profile);

/// One spectroscopic line of the ITU-R P.676 Annex 1 tables. The six
/// coefficients are the strength (a1, a2), width (a3, a4) and interference
/// (a5, a6) parameters; water-vapor lines use the same layout with b5, b6
/// as extra width terms and no interference correction.
struct SpectroscopicLine {
    double center_frequency_GHz = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0, a5 = 0.0, a6 = 0.0;
};

/// Rain power-law coefficients at one frequency: gamma = k * R^alpha.
struct RainCoefficients {
    double frequency_GHz = 0.0;
    double k = 0.0;
    double alpha = 0.0;
};

/// Immutable coefficient tables (P.676 oxygen/water lines, P.838 rain rows).
/// Loaded once, shareable across threads read-only.
class Tables {
  public:
    /// Loads p676_oxygen_lines.csv, p676_water_lines.csv and
    /// p838_rain_coeffs.csv from `dir`. Malformed rows, unsorted
    /// frequencies or missing files throw std::runtime_error with the
    /// offending file and line.
    static Tables load(const std::filesystem::path& dir);

    const std::vector<SpectroscopicLine>& oxygen_lines() const { return oxygen_lines_; }
    const std::vector<SpectroscopicLine>& water_lines() const { return water_lines_; }

    struct RainRow {
        double frequency_GHz;
        double k_h, alpha_h, k_v, alpha_v;
    };
    const std::vector<RainRow>& rain_rows() const { return rain_rows_; }

  private:
    std::vector<SpectroscopicLine> oxygen_lines_;
    std::vector<SpectroscopicLine> water_lines_;
    std::vector<RainRow> rain_rows_;
};

/// Directory the default tables are loaded from, resolved in order:
/// $DAMU_DATA_DIR, ./data, the source-tree data directory baked in at
/// configure time, the install data directory.
std::filesystem::path default_data_dir();

/// Process-wide tables, loaded on first use from default_data_dir().
const Tables& default_tables();

/// Total gaseous specific attenuation (oxygen + water vapor), dB/km, by
/// ITU-R P.676 Annex 1 line-by-line summation at the sample's pressure,
/// temperature and vapor density. Valid for 1..100 GHz; outside that range
/// throws std::out_of_range.
double gaseous_specific_attenuation(double frequency_GHz,
                                    const atmosphere::AtmosphereSample& sample,
                                    const Tables& tables = default_tables());

/// P.838 power-law coefficients at `frequency_GHz`, log-interpolated
/// between table rows (k in log-log, alpha linear in log-frequency).
/// Circular polarization combines the linear coefficients.
RainCoefficients rain_coefficients(double frequency_GHz, Polarization polarization,
                                   const Tables& tables = default_tables());

/// Rain specific attenuation gamma = k * R^alpha, dB/km.
double rain_specific_attenuation(double frequency_GHz, double rain_rate_mm_h,
                                 Polarization polarization,
                                 const Tables& tables = default_tables());

/// Liquid-water specific attenuation coefficient K_l in (dB/km)/(g/m^3)
/// from the Rayleigh single-Debye model of ITU-R P.840 with double-Debye
/// water permittivity. Valid for 1..100 GHz and 233..313 K.
double liquid_water_coefficient(double frequency_GHz, double liquid_temp_K);

/// Cloud/fog specific attenuation gamma_c = K_l * M, dB/km, where M is the
/// liquid water density in g/m^3.
double cloud_fog_specific_attenuation(double frequency_GHz, double lwd_g_m3,
                                      double liquid_temp_K);

/// Statistical slant attenuation A = L * K_l / sin(elevation) in dB through
/// a total columnar liquid water content L (kg/m^2). The elevation must be
/// within the model's 5..90 degree validity; below 5 degrees is a hard
/// error, not a clamp.
double columnar_cloud_attenuation(double columnar_liquid_kg_m2, double frequency_GHz,
                                  double elevation_deg, double liquid_temp_K);

/// Per-component slant-path attenuation. total_dB is the exact sum
/// gaseous + rain + cloud + fog, evaluated in that order.
struct AttenuationBreakdown {
    double gaseous_dB = 0.0;
    double rain_dB = 0.0;
    double cloud_dB = 0.0;
    double fog_dB = 0.0;
    double total_dB = 0.0;
};

/// Integrates the weather profile along the straight path a->b, slicing it
/// into altitude segments no thicker than `max_segment_m` (layer boundaries
/// are always segment boundaries). Each segment contributes the local
/// specific attenuations times its slant length. Grazing paths with
/// |elevation| < 5 degrees are outside the model's validity and throw
/// std::domain_error; endpoints must lie within 0..32 km altitude.
AttenuationBreakdown path_attenuation(const WeatherProfile& profile,
                                      const geometry::Position3D& a,
                                      const geometry::Position3D& b, double frequency_GHz,
                                      double max_segment_m = 100.0,
                                      const Tables& tables = default_tables());

/// 1550 nm laser specific loss per visibility class:
/// clear (23 km visibility) 0.2 dB/km, haze 4 dB/km, heavy fog
/// (0.05 km visibility) 272 dB/km.
double laser_specific_loss(VisibilityClass visibility);

inline constexpr double kMinPathElevationDeg = 5.0;

} // namespace damu::attenuation
