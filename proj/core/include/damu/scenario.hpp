// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "damu/attenuation.hpp"
#include "damu/geometry.hpp"
#include "damu/link_budget.hpp"
#include "damu/node_class.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace damu::scenario {

/// One network node. Fixed-wing nodes fly a cruise circle; every other
/// class is quasi-stationary with a static position.
struct UavNode {
    std::string id;
    NodeClass node_class = NodeClass::ground;
    std::optional<geometry::Position3D> position; // static nodes
    std::optional<geometry::CircularCruise> cruise; // fixed-wing only
    linkbudget::RadioConfig radio;
    double battery_Wh = 0.0;
    double avg_power_draw_W = 0.0;
    double harvest_W = 0.0;
    double payload_kg = 0.0;
};

/// Operating altitude of the node (cruise altitude for fixed-wing).
double node_altitude(const UavNode& node);

/// Node position at simulation time t (fixed-wing advances along its
/// circle; everything else stays put).
geometry::Position3D node_position(const UavNode& node, double t_s);

struct Scenario {
    std::vector<UavNode> nodes;
    std::vector<std::pair<std::string, std::string>> links;
    attenuation::WeatherProfile weather;
    double duration_s = 0.0;
    double timestep_s = 1.0;
};

/// A broken deployment rule: which node, which rule, what was observed.
struct Violation {
    std::string node_id;
    std::string rule;
    std::string detail;
};

/// Checks every node against the layer altitude bands (balloon > 20 km,
/// fixed-wing in (1, 10) km, rotary-wing < 1 km), the absolute class
/// ceilings (fixed-wing 16 km, rotary-wing 6 km), the class payload bounds,
/// and link radio-frequency agreement. Violations are data, not errors.
std::vector<Violation> validate(const Scenario& scenario);

/// One evaluated link at one timestep. When the link geometry is invalid
/// (coincident nodes, grazing path), `valid` is false, `reason` says why,
/// and only the fields computable from geometry are populated; the rest
/// are NaN in the CSV.
struct LinkSample {
    double t_s = 0.0;
    std::string link_id;
    bool valid = false;
    std::string reason;
    linkbudget::LinkReport report;
};

/// Time-stepped deterministic evaluation of every declared link at
/// t = 0, dt, ..., (floor(duration/dt) - 1)*dt. Output is ordered by time,
/// then link id. Refuses to run a scenario with outstanding validation
/// violations unless `force` is set.
std::vector<LinkSample> simulate(const Scenario& scenario, bool force = false);

/// Remaining operating time in seconds: battery / (draw - harvest) when
/// draw exceeds harvest, +infinity (self-sustaining) otherwise. A node
/// with no battery, no draw and no harvest reports zero.
double endurance_s(const UavNode& node);

/// Parses the JSON scenario document (sections: nodes, links, weather,
/// sim). Schema errors throw std::runtime_error naming the offending key.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& file);

/// Weather section alone, reused by weather preset files.
attenuation::WeatherProfile parse_weather_json(const std::string& json_text);
attenuation::WeatherProfile load_weather(const std::filesystem::path& file);

/// Writes the fixed-format simulation CSV:
/// t_s,link_id,distance_m,elevation_deg,fspl_dB,gaseous_dB,rain_dB,
/// cloud_dB,fog_dB,rx_power_dBm,margin_dB,viable
/// Identical inputs produce byte-identical output.
void write_csv(std::span<const LinkSample> samples, std::ostream& out);

} // namespace damu::scenario
