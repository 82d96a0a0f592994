// SPDX-License-Identifier: Apache-2.0
//
// Attenuation models for RF and optical propagation:
//  - gaseous: ITU-R P.676 Annex 1 line-by-line summation (oxygen + water
//    vapor) over the spectroscopic line tables shipped in data/
//  - rain: ITU-R P.838 power law, coefficients log-interpolated from the
//    shipped table
//  - cloud/fog: ITU-R P.840 Rayleigh single-Debye model with double-Debye
//    water permittivity
//  - laser: per-visibility-class lookup for 1550 nm

#include "damu/attenuation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <string>

namespace damu::attenuation {

namespace {

constexpr double kMinFrequencyGHz = 1.0;
constexpr double kMaxFrequencyGHz = 100.0;

void check_frequency(double frequency_GHz)
{
    if (!(frequency_GHz >= kMinFrequencyGHz) || !(frequency_GHz <= kMaxFrequencyGHz)) {
        throw std::out_of_range("frequency " + std::to_string(frequency_GHz) +
                                " GHz outside validated range 1..100 GHz");
    }
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& field, const std::filesystem::path& file, int line_no)
{
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\r')) --last;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                                 ": malformed numeric field '" + field + "'");
    }
    return value;
}

// Reads a CSV coefficient file: '#' comment lines, one header line, then
// rows of exactly `columns` numeric fields with strictly increasing first
// column.
std::vector<std::vector<double>> load_csv(const std::filesystem::path& file, std::size_t columns)
{
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open coefficient table " + file.string());
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != columns) {
            throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                                     ": expected " + std::to_string(columns) +
                                     " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(columns);
        for (const auto& f : fields) {
            row.push_back(parse_double(f, file, line_no));
        }
        if (!rows.empty() && row[0] <= rows.back()[0]) {
            throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                                     ": frequencies must be strictly increasing");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("coefficient table " + file.string() + " has no data rows");
    }
    return rows;
}

std::vector<SpectroscopicLine> to_lines(const std::vector<std::vector<double>>& rows)
{
    std::vector<SpectroscopicLine> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows) {
        lines.push_back({r[0], r[1], r[2], r[3], r[4], r[5], r[6]});
    }
    return lines;
}

} // namespace

Tables Tables::load(const std::filesystem::path& dir)
{
    Tables t;
    t.oxygen_lines_ = to_lines(load_csv(dir / "p676_oxygen_lines.csv", 7));
    t.water_lines_ = to_lines(load_csv(dir / "p676_water_lines.csv", 7));
    for (const auto& r : load_csv(dir / "p838_rain_coeffs.csv", 5)) {
        if (!(r[1] > 0.0) || !(r[3] > 0.0)) {
            throw std::runtime_error("p838_rain_coeffs.csv: k coefficients must be > 0");
        }
        t.rain_rows_.push_back({r[0], r[1], r[2], r[3], r[4]});
    }
    return t;
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("DAMU_DATA_DIR")) {
        return env;
    }
    std::error_code ec;
    if (std::filesystem::exists("data/p676_oxygen_lines.csv", ec)) {
        return "data";
    }
#ifdef DAMU_SOURCE_DATA_DIR
    if (std::filesystem::exists(std::filesystem::path(DAMU_SOURCE_DATA_DIR) /
                                    "p676_oxygen_lines.csv",
                                ec)) {
        return DAMU_SOURCE_DATA_DIR;
    }
#endif
#ifdef DAMU_INSTALL_DATA_DIR
    return DAMU_INSTALL_DATA_DIR;
#else
    return "data";
#endif
}

const Tables& default_tables()
{
    static const Tables tables = Tables::load(default_data_dir());
    return tables;
}

VisibilityClass visibility_class_from_string(std::string_view s)
{
    if (s == "clear") return VisibilityClass::clear;
    if (s == "haze") return VisibilityClass::haze;
    if (s == "heavy_fog") return VisibilityClass::heavy_fog;
    throw std::invalid_argument("unknown visibility class '" + std::string(s) + "'");
}

std::string_view to_string(VisibilityClass v)
{
    switch (v) {
    case VisibilityClass::clear: return "clear";
    case VisibilityClass::haze: return "haze";
    case VisibilityClass::heavy_fog: return "heavy_fog";
    }
    throw std::invalid_argument("bad VisibilityClass");
}

void validate(const WeatherProfile& profile)
{
    if (!(profile.rain_rate_mm_h >= 0.0) || !(profile.rain_top_m >= 0.0) ||
        !(profile.fog_lwd_g_m3 >= 0.0) || !(profile.fog_top_m >= 0.0) ||
        !(profile.cloud_lwd_g_m3 >= 0.0) || !(profile.cloud_base_m >= 0.0) ||
        !(profile.cloud_top_m >= 0.0) || !(profile.surface_water_vapor_g_m3 >= 0.0)) {
        throw std::domain_error("weather profile: densities and rates must be >= 0");
    }
    if (profile.fog_lwd_g_m3 > 1.0) {
        throw std::domain_error("weather profile: fog LWD above 1 g/m^3 sanity bound");
    }
    if (profile.cloud_lwd_g_m3 > 5.0) {
        throw std::domain_error("weather profile: cloud LWD above 5 g/m^3 sanity bound");
    }
    if (profile.cloud_lwd_g_m3 > 0.0 && !(profile.cloud_top_m > profile.cloud_base_m)) {
        throw std::domain_error("weather profile: cloud top must lie above cloud base");
    }
    if (!(profile.liquid_water_temp_K >= 233.0) || !(profile.liquid_water_temp_K <= 313.0)) {
        throw std::domain_error("weather profile: liquid water temperature outside 233..313 K");
    }
}

double gaseous_specific_attenuation(double frequency_GHz,
                                    const atmosphere::AtmosphereSample& sample,
                                    const Tables& tables)
{
    check_frequency(frequency_GHz);
    const double f = frequency_GHz;
    const double T = sample.temperature_K;
    const double theta = 300.0 / T;
    const double e = sample.water_vapor_density_g_m3 * T / 216.7; // vapor pressure, hPa
    const double p = sample.pressure_Pa / 100.0 - e;              // dry-air pressure, hPa
    if (!(p > 0.0)) {
        throw std::domain_error("gaseous attenuation: vapor pressure exceeds total pressure");
    }

    const double theta3 = theta * theta * theta;
    const double theta35 = theta3 * std::sqrt(theta);

    double sum_sf = 0.0;
    for (const SpectroscopicLine& line : tables.oxygen_lines()) {
        const double f0 = line.center_frequency_GHz;
        const double strength = line.a1 * 1e-7 * p * theta3 * std::exp(line.a2 * (1.0 - theta));
        double width = line.a3 * 1e-4 *
                       (p * std::pow(theta, 0.8 - line.a4) + 1.1 * e * theta);
        width = std::sqrt(width * width + 2.25e-6);
        const double interference =
            (line.a5 + line.a6 * theta) * 1e-4 * (p + e) * std::pow(theta, 0.8);
        const double shape =
            (f / f0) * ((width - interference * (f0 - f)) / ((f0 - f) * (f0 - f) + width * width) +
                        (width - interference * (f0 + f)) / ((f0 + f) * (f0 + f) + width * width));
        sum_sf += strength * shape;
    }
    for (const SpectroscopicLine& line : tables.water_lines()) {
        const double f0 = line.center_frequency_GHz;
        const double strength = line.a1 * 1e-1 * e * theta35 * std::exp(line.a2 * (1.0 - theta));
        double width = line.a3 * 1e-4 *
                       (p * std::pow(theta, line.a4) + line.a5 * e * std::pow(theta, line.a6));
        width = 0.535 * width +
                std::sqrt(0.217 * width * width + 2.1316e-12 * f0 * f0 / theta);
        const double shape = (f / f0) * (width / ((f0 - f) * (f0 - f) + width * width) +
                                         width / ((f0 + f) * (f0 + f) + width * width));
        sum_sf += strength * shape;
    }

    // Dry continuum (nonresonant Debye spectrum + pressure-induced nitrogen).
    const double d = 5.6e-4 * (p + e) * std::pow(theta, 0.8);
    const double continuum =
        f * p * theta * theta *
        (6.14e-5 / (d * (1.0 + (f / d) * (f / d))) +
         1.4e-12 * p * std::pow(theta, 1.5) / (1.0 + 1.9e-5 * std::pow(f, 1.5)));

    return 0.1820 * f * (sum_sf + continuum);
}

namespace {

struct LinearCoeffs {
    double k_h, alpha_h, k_v, alpha_v;
};

LinearCoeffs interpolate_rain_row(double frequency_GHz, const Tables& tables)
{
    const auto& rows = tables.rain_rows();
    if (!(frequency_GHz >= rows.front().frequency_GHz) ||
        !(frequency_GHz <= rows.back().frequency_GHz)) {
        throw std::out_of_range("rain coefficients: frequency outside table range");
    }
    const auto upper = std::lower_bound(
        rows.begin(), rows.end(), frequency_GHz,
        [](const Tables::RainRow& row, double f) { return row.frequency_GHz < f; });
    if (upper->frequency_GHz == frequency_GHz) {
        return {upper->k_h, upper->alpha_h, upper->k_v, upper->alpha_v};
    }
    const auto lower = upper - 1;
    // k interpolates in log-log, alpha linearly in log-frequency.
    const double t = (std::log10(frequency_GHz) - std::log10(lower->frequency_GHz)) /
                     (std::log10(upper->frequency_GHz) - std::log10(lower->frequency_GHz));
    const auto log_mix = [t](double a, double b) {
        return std::pow(10.0, (1.0 - t) * std::log10(a) + t * std::log10(b));
    };
    const auto lin_mix = [t](double a, double b) { return (1.0 - t) * a + t * b; };
    return {log_mix(lower->k_h, upper->k_h), lin_mix(lower->alpha_h, upper->alpha_h),
            log_mix(lower->k_v, upper->k_v), lin_mix(lower->alpha_v, upper->alpha_v)};
}

} // namespace

RainCoefficients rain_coefficients(double frequency_GHz, Polarization polarization,
                                   const Tables& tables)
{
    check_frequency(frequency_GHz);
    const LinearCoeffs c = interpolate_rain_row(frequency_GHz, tables);
    switch (polarization) {
    case Polarization::horizontal: return {frequency_GHz, c.k_h, c.alpha_h};
    case Polarization::vertical: return {frequency_GHz, c.k_v, c.alpha_v};
    case Polarization::circular: {
        const double k = 0.5 * (c.k_h + c.k_v);
        const double alpha = (c.k_h * c.alpha_h + c.k_v * c.alpha_v) / (2.0 * k);
        return {frequency_GHz, k, alpha};
    }
    }
    throw std::invalid_argument("bad Polarization");
}

double rain_specific_attenuation(double frequency_GHz, double rain_rate_mm_h,
                                 Polarization polarization, const Tables& tables)
{
    if (!(rain_rate_mm_h >= 0.0)) {
        throw std::domain_error("rain rate must be >= 0");
    }
    if (rain_rate_mm_h == 0.0) {
        check_frequency(frequency_GHz);
        return 0.0;
    }
    const RainCoefficients c = rain_coefficients(frequency_GHz, polarization, tables);
    return c.k * std::pow(rain_rate_mm_h, c.alpha);
}

double liquid_water_coefficient(double frequency_GHz, double liquid_temp_K)
{
    check_frequency(frequency_GHz);
    if (!(liquid_temp_K >= 233.0) || !(liquid_temp_K <= 313.0)) {
        throw std::out_of_range("liquid water temperature outside permittivity-model validity "
                                "233..313 K");
    }
    const double f = frequency_GHz;
    const double theta = 300.0 / liquid_temp_K;

    // Double-Debye permittivity of water.
    const double eps0 = 77.66 + 103.3 * (theta - 1.0);
    const double eps1 = 0.0671 * eps0;
    const double eps2 = 3.52;
    const double fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0) * (theta - 1.0);
    const double fs = 39.8 * fp;

    const double eps_real = (eps0 - eps1) / (1.0 + (f / fp) * (f / fp)) +
                            (eps1 - eps2) / (1.0 + (f / fs) * (f / fs)) + eps2;
    const double eps_imag = f * (eps0 - eps1) / (fp * (1.0 + (f / fp) * (f / fp))) +
                            f * (eps1 - eps2) / (fs * (1.0 + (f / fs) * (f / fs)));

    const double eta = (2.0 + eps_real) / eps_imag;
    return 0.819 * f / (eps_imag * (1.0 + eta * eta));
}

double cloud_fog_specific_attenuation(double frequency_GHz, double lwd_g_m3,
                                      double liquid_temp_K)
{
    if (!(lwd_g_m3 >= 0.0)) {
        throw std::domain_error("liquid water density must be >= 0");
    }
    if (lwd_g_m3 == 0.0) {
        check_frequency(frequency_GHz);
        return 0.0;
    }
    return liquid_water_coefficient(frequency_GHz, liquid_temp_K) * lwd_g_m3;
}

double columnar_cloud_attenuation(double columnar_liquid_kg_m2, double frequency_GHz,
                                  double elevation_deg, double liquid_temp_K)
{
    if (!(columnar_liquid_kg_m2 >= 0.0)) {
        throw std::domain_error("columnar liquid water must be >= 0");
    }
    if (!(elevation_deg >= 5.0) || !(elevation_deg <= 90.0)) {
        throw std::domain_error("columnar cloud attenuation valid for elevations 5..90 degrees");
    }
    const double k_l = liquid_water_coefficient(frequency_GHz, liquid_temp_K);
    return columnar_liquid_kg_m2 * k_l / std::sin(elevation_deg * std::numbers::pi / 180.0);
}

AttenuationBreakdown path_attenuation(const WeatherProfile& profile,
                                      const geometry::Position3D& a,
                                      const geometry::Position3D& b, double frequency_GHz,
                                      double max_segment_m, const Tables& tables)
{
    check_frequency(frequency_GHz);
    validate(profile);
    if (!(max_segment_m > 0.0)) {
        throw std::domain_error("path_attenuation: segment size must be > 0");
    }
    const double alt_lo = std::min(a.z, b.z);
    const double alt_hi = std::max(a.z, b.z);
    if (alt_lo < 0.0 || alt_hi > atmosphere::kMaxModelAltitudeM) {
        throw std::out_of_range("path_attenuation: endpoints must lie within 0..32 km altitude");
    }
    const double elevation = std::abs(geometry::elevation_angle(a, b));
    if (elevation < kMinPathElevationDeg) {
        throw std::domain_error("path_attenuation: grazing path below 5 degrees elevation is "
                                "outside the model's validity");
    }

    const double path_length_m = geometry::slant_distance(a, b);
    const double dh = alt_hi - alt_lo;

    // Altitude breakpoints: a uniform grid capped at max_segment_m plus every
    // weather layer boundary that falls inside the span.
    std::vector<double> breaks;
    const int n = std::max(1, static_cast<int>(std::ceil(dh / max_segment_m)));
    breaks.reserve(static_cast<std::size_t>(n) + 6);
    for (int i = 0; i <= n; ++i) {
        breaks.push_back(alt_lo + dh * i / n);
    }
    for (const double boundary : {profile.rain_top_m, profile.fog_top_m, profile.cloud_base_m,
                                  profile.cloud_top_m}) {
        if (boundary > alt_lo && boundary < alt_hi) {
            breaks.push_back(boundary);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const double rain_gamma =
        profile.rain_rate_mm_h > 0.0
            ? rain_specific_attenuation(frequency_GHz, profile.rain_rate_mm_h,
                                        Polarization::horizontal, tables)
            : 0.0;
    const double fog_gamma =
        profile.fog_lwd_g_m3 > 0.0
            ? cloud_fog_specific_attenuation(frequency_GHz, profile.fog_lwd_g_m3,
                                             profile.liquid_water_temp_K)
            : 0.0;
    const double cloud_gamma =
        profile.cloud_lwd_g_m3 > 0.0
            ? cloud_fog_specific_attenuation(frequency_GHz, profile.cloud_lwd_g_m3,
                                             profile.liquid_water_temp_K)
            : 0.0;

    AttenuationBreakdown out;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double h0 = breaks[i];
        const double h1 = breaks[i + 1];
        const double mid = 0.5 * (h0 + h1);
        const double segment_km = path_length_m * ((h1 - h0) / dh) / 1000.0;
        const auto sample =
            atmosphere::isa_sample(mid, profile.surface_water_vapor_g_m3);
        out.gaseous_dB += gaseous_specific_attenuation(frequency_GHz, sample, tables) * segment_km;
        if (mid < profile.rain_top_m) {
            out.rain_dB += rain_gamma * segment_km;
        }
        if (mid < profile.fog_top_m) {
            out.fog_dB += fog_gamma * segment_km;
        }
        if (mid >= profile.cloud_base_m && mid < profile.cloud_top_m) {
            out.cloud_dB += cloud_gamma * segment_km;
        }
    }
    out.total_dB = out.gaseous_dB + out.rain_dB + out.cloud_dB + out.fog_dB;
    return out;
}

double laser_specific_loss(VisibilityClass visibility)
{
    switch (visibility) {
    case VisibilityClass::clear: return 0.2;
    case VisibilityClass::haze: return 4.0;
    case VisibilityClass::heavy_fog: return 272.0;
    }
    throw std::invalid_argument("bad VisibilityClass");
}

} // namespace damu::attenuation
