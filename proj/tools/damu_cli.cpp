// SPDX-License-Identifier: Apache-2.0
//
// damu — feasibility and link-budget calculator for distributed multi-layer
// UAV networks.
//
//   damu atten     frequency sweep of weather attenuation over a slant path
//   damu aero      lift, minimum sustaining speed, turn radius
//   damu scenario  validate and simulate a scenario file
//
// Exit codes: 0 success, 2 usage/input error, 3 strict-validation failure.

#include <CLI11.hpp>

#include "damu/aero.hpp"
#include "damu/atmosphere.hpp"
#include "damu/attenuation.hpp"
#include "damu/geometry.hpp"
#include "damu/link_budget.hpp"
#include "damu/scenario.hpp"
#include "damu/units.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitStrictValidation = 3;

damu::attenuation::WeatherProfile resolve_weather(const std::string& spec)
{
    namespace fs = std::filesystem;
    if (fs::exists(spec)) {
        return damu::scenario::load_weather(spec);
    }
    const fs::path preset =
        damu::attenuation::default_data_dir() / "presets" / (spec + ".json");
    if (fs::exists(preset)) {
        return damu::scenario::load_weather(preset);
    }
    throw std::runtime_error("weather '" + spec +
                             "' is neither a readable file nor a known preset (looked in " +
                             preset.parent_path().string() + ")");
}

std::ostream& open_output(const std::string& out_path, std::ofstream& file)
{
    if (out_path.empty() || out_path == "-") {
        return std::cout;
    }
    file.open(out_path);
    if (!file) {
        throw std::runtime_error("cannot open output file " + out_path);
    }
    return file;
}

int run_atten(double freq_min, double freq_max, double step, const std::string& weather_spec,
              const std::vector<double>& path_alts, const std::string& out_path, bool per_km)
{
    if (!(step > 0.0)) {
        throw std::runtime_error("--step must be > 0");
    }
    if (!(freq_min >= 1.0) || !(freq_max <= 100.0) || !(freq_min <= freq_max)) {
        throw std::runtime_error("frequency range must satisfy 1 <= min <= max <= 100 GHz");
    }
    if (path_alts.size() != 2) {
        throw std::runtime_error("--path must be two comma-separated altitudes in meters");
    }

    const auto profile = resolve_weather(weather_spec);
    const damu::geometry::Position3D a{0.0, 0.0, path_alts[0]};
    const damu::geometry::Position3D b{0.0, 0.0, path_alts[1]};

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    char buf[64];
    const auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        out << ',' << buf;
    };

    if (per_km) {
        // Specific attenuation (dB/km) at the first path altitude.
        out << "freq_GHz,gaseous_dB_km,rain_dB_km,cloud_dB_km,fog_dB_km,total_dB_km\n";
        const double alt = path_alts[0];
        const auto sample =
            damu::atmosphere::isa_sample(alt, profile.surface_water_vapor_g_m3);
        for (double f = freq_min; f <= freq_max + 1e-9; f += step) {
            const double gas = damu::attenuation::gaseous_specific_attenuation(f, sample);
            const double rain =
                (alt < profile.rain_top_m && profile.rain_rate_mm_h > 0.0)
                    ? damu::attenuation::rain_specific_attenuation(
                          f, profile.rain_rate_mm_h,
                          damu::attenuation::Polarization::horizontal)
                    : 0.0;
            const double cloud =
                (alt >= profile.cloud_base_m && alt < profile.cloud_top_m &&
                 profile.cloud_lwd_g_m3 > 0.0)
                    ? damu::attenuation::cloud_fog_specific_attenuation(
                          f, profile.cloud_lwd_g_m3, profile.liquid_water_temp_K)
                    : 0.0;
            const double fog =
                (alt < profile.fog_top_m && profile.fog_lwd_g_m3 > 0.0)
                    ? damu::attenuation::cloud_fog_specific_attenuation(
                          f, profile.fog_lwd_g_m3, profile.liquid_water_temp_K)
                    : 0.0;
            std::snprintf(buf, sizeof(buf), "%.4f", f);
            out << buf;
            put(gas);
            put(rain);
            put(cloud);
            put(fog);
            put(gas + rain + cloud + fog);
            out << '\n';
        }
        return kExitOk;
    }

    out << "freq_GHz,gaseous_dB,rain_dB,cloud_dB,fog_dB,total_dB\n";
    for (double f = freq_min; f <= freq_max + 1e-9; f += step) {
        const auto breakdown = damu::attenuation::path_attenuation(profile, a, b, f);
        std::snprintf(buf, sizeof(buf), "%.4f", f);
        out << buf;
        put(breakdown.gaseous_dB);
        put(breakdown.rain_dB);
        put(breakdown.cloud_dB);
        put(breakdown.fog_dB);
        put(breakdown.total_dB);
        out << '\n';
    }
    return kExitOk;
}

int run_scenario(const std::string& file, const std::string& out_path, bool strict)
{
    const auto scenario = damu::scenario::load_scenario(file);
    const auto violations = damu::scenario::validate(scenario);
    for (const auto& v : violations) {
        std::cerr << "violation: " << v.node_id << ": " << v.rule << " (" << v.detail << ")\n";
    }
    if (strict && !violations.empty()) {
        std::cerr << "strict mode: " << violations.size() << " violation(s), aborting\n";
        return kExitStrictValidation;
    }
    const auto series = damu::scenario::simulate(scenario, /*force=*/true);
    std::set<std::string> reported;
    for (const auto& s : series) {
        if (!s.valid && reported.insert(s.link_id).second) {
            std::cerr << "link " << s.link_id << " not evaluable: " << s.reason << "\n";
        }
    }
    std::ofstream out_file;
    std::ostream& out = open_output(out_path, out_file);
    damu::scenario::write_csv(series, out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Feasibility and link-budget simulator for distributed multi-layer UAV "
                 "networks"};
    app.require_subcommand(1);

    // atten
    auto* atten = app.add_subcommand("atten", "Sweep attenuation over frequency for a path");
    double freq_min = 1.0, freq_max = 100.0, step = 1.0;
    std::string weather_spec = "clear";
    std::vector<double> path_alts{0.0, 20000.0};
    std::string atten_out;
    bool per_km = false;
    atten->add_option("--freq-min", freq_min, "Sweep start, GHz")->capture_default_str();
    atten->add_option("--freq-max", freq_max, "Sweep end, GHz")->capture_default_str();
    atten->add_option("--step", step, "Sweep step, GHz")->capture_default_str();
    atten->add_option("--weather", weather_spec,
                      "Weather JSON file or preset name (clear, advection-fog, cumulonimbus, "
                      "rain-medium, rain-heavy, rain-violent)")
        ->capture_default_str();
    atten->add_option("--path", path_alts,
                      "Vertical path endpoint altitudes in meters, e.g. --path 1000,20000")
        ->delimiter(',')
        ->expected(2);
    atten->add_option("--out", atten_out, "Output CSV file ('-' for stdout)");
    atten->add_flag("--per-km", per_km,
                    "Emit specific attenuation (dB/km) at the first path altitude instead of "
                    "the integrated path total");

    // aero
    auto* aero_cmd = app.add_subcommand("aero", "Aerodynamic feasibility calculations");
    aero_cmd->require_subcommand(1);

    auto* lift = aero_cmd->add_subcommand("lift", "Lift force from the lift equation");
    double cl = 1.0, alt_m = 0.0, speed = 0.0, area = 0.0, vapor = 7.5;
    lift->add_option("--cl", cl, "Lift coefficient")->required();
    lift->add_option("--alt-m", alt_m, "Altitude for ISA density, m")->capture_default_str();
    lift->add_option("--speed-mps", speed, "Airspeed, m/s")->required();
    lift->add_option("--area-m2", area, "Wing area, m^2")->required();

    auto* minspeed = aero_cmd->add_subcommand(
        "minspeed", "Minimum sustaining speed for a given total mass");
    double ms_cl = 1.0, ms_area = 0.0, ms_mass = 0.0, ms_alt = 0.0;
    minspeed->add_option("--cl", ms_cl, "Lift coefficient")->required();
    minspeed->add_option("--area-m2", ms_area, "Wing area, m^2")->required();
    minspeed->add_option("--mass-kg", ms_mass, "Total mass (airframe + payload), kg")->required();
    minspeed->add_option("--alt-m", ms_alt, "Altitude for ISA density, m")
        ->capture_default_str();

    auto* radius = aero_cmd->add_subcommand("turn-radius", "Coordinated-turn radius");
    double tr_speed = 0.0, tr_bank = 0.0;
    radius->add_option("--speed-mps", tr_speed, "Airspeed, m/s")->required();
    radius->add_option("--bank-deg", tr_bank, "Bank angle, degrees")->required();

    // scenario
    auto* scenario_cmd = app.add_subcommand("scenario", "Scenario validation and simulation");
    scenario_cmd->require_subcommand(1);
    auto* run = scenario_cmd->add_subcommand("run", "Validate then simulate a scenario file");
    std::string scenario_file, scenario_out;
    bool strict = false;
    run->add_option("file", scenario_file, "Scenario JSON file")->required();
    run->add_option("--out", scenario_out, "Output CSV file ('-' for stdout)");
    run->add_flag("--strict", strict, "Escalate validation violations to an error (exit 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (atten->parsed()) {
            return run_atten(freq_min, freq_max, step, weather_spec, path_alts, atten_out,
                             per_km);
        }
        if (lift->parsed()) {
            const auto sample = damu::atmosphere::isa_sample(alt_m, vapor);
            const double force =
                damu::aero::lift_force(cl, sample.density_kg_m3, speed, area);
            std::printf("lift: %.1f N / %.1f lbf  (rho %.6f kg/m^3 at %.0f m)\n", force,
                        damu::units::pounds_force_from_newtons(force), sample.density_kg_m3,
                        alt_m);
            return kExitOk;
        }
        if (minspeed->parsed()) {
            const auto sample = damu::atmosphere::isa_sample(ms_alt, vapor);
            damu::aero::Airframe frame;
            frame.wing_area_m2 = ms_area;
            frame.lift_coefficient = ms_cl;
            frame.empty_mass_kg = ms_mass;
            const double v = damu::aero::min_sustaining_speed(frame, sample.density_kg_m3);
            std::printf("minimum sustaining speed: %.2f m/s / %.2f kn  (%.1f km/h)\n", v,
                        damu::units::knots_from_mps(v), damu::units::km_h_from_mps(v));
            return kExitOk;
        }
        if (radius->parsed()) {
            const double r_m = damu::geometry::turn_radius(tr_speed, tr_bank);
            std::printf("turn radius: %.1f ft / %.1f m\n", damu::units::feet_from_m(r_m), r_m);
            return kExitOk;
        }
        if (run->parsed()) {
            return run_scenario(scenario_file, scenario_out, strict);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
