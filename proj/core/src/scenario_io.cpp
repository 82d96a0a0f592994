// SPDX-License-Identifier: Apache-2.0
//
// Scenario/weather JSON ingestion and the fixed-format simulation CSV.

#include "damu/scenario.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace damu::scenario {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what)
{
    throw std::runtime_error("scenario schema: " + what);
}

void require_keys(const json& obj, const char* section,
                  std::initializer_list<const char*> allowed)
{
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            schema_error(std::string("unknown key '") + key + "' in " + section);
        }
    }
}

double number_or(const json& obj, const char* key, double fallback)
{
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) {
        schema_error(std::string("'") + key + "' must be a number");
    }
    return v.get<double>();
}

attenuation::WeatherProfile parse_weather(const json& obj)
{
    if (!obj.is_object()) {
        schema_error("'weather' must be an object");
    }
    require_keys(obj, "weather",
                 {"rain_rate_mm_h", "rain_top_m", "fog_lwd_g_m3", "fog_top_m",
                  "cloud_lwd_g_m3", "cloud_base_m", "cloud_top_m", "liquid_water_temp_K",
                  "surface_water_vapor_g_m3", "visibility_class"});
    attenuation::WeatherProfile w;
    w.rain_rate_mm_h = number_or(obj, "rain_rate_mm_h", w.rain_rate_mm_h);
    w.rain_top_m = number_or(obj, "rain_top_m", w.rain_top_m);
    w.fog_lwd_g_m3 = number_or(obj, "fog_lwd_g_m3", w.fog_lwd_g_m3);
    w.fog_top_m = number_or(obj, "fog_top_m", w.fog_top_m);
    w.cloud_lwd_g_m3 = number_or(obj, "cloud_lwd_g_m3", w.cloud_lwd_g_m3);
    w.cloud_base_m = number_or(obj, "cloud_base_m", w.cloud_base_m);
    w.cloud_top_m = number_or(obj, "cloud_top_m", w.cloud_top_m);
    w.liquid_water_temp_K = number_or(obj, "liquid_water_temp_K", w.liquid_water_temp_K);
    w.surface_water_vapor_g_m3 =
        number_or(obj, "surface_water_vapor_g_m3", w.surface_water_vapor_g_m3);
    if (obj.contains("visibility_class")) {
        if (!obj.at("visibility_class").is_string()) {
            schema_error("'visibility_class' must be a string");
        }
        w.visibility_class = attenuation::visibility_class_from_string(
            obj.at("visibility_class").get<std::string>());
    }
    attenuation::validate(w);
    return w;
}

UavNode parse_node(const json& obj)
{
    if (!obj.is_object()) {
        schema_error("each node must be an object");
    }
    require_keys(obj, "node",
                 {"id", "class", "position", "cruise", "radio", "battery_Wh",
                  "avg_power_draw_W", "harvest_W", "payload_kg"});
    UavNode node;
    if (!obj.contains("id") || !obj.at("id").is_string()) {
        schema_error("node 'id' must be a string");
    }
    node.id = obj.at("id").get<std::string>();
    if (node.id.empty() || node.id.find(',') != std::string::npos) {
        schema_error("node id '" + node.id + "' must be non-empty and comma-free");
    }
    if (!obj.contains("class") || !obj.at("class").is_string()) {
        schema_error("node '" + node.id + "': 'class' must be a string");
    }
    node.node_class = node_class_from_string(obj.at("class").get<std::string>());

    if (node.node_class == NodeClass::fixed_wing) {
        if (!obj.contains("cruise") || obj.contains("position")) {
            schema_error("fixed-wing node '" + node.id +
                         "' must have a 'cruise' section and no static 'position'");
        }
        const json& c = obj.at("cruise");
        require_keys(c, "cruise",
                     {"center_x", "center_y", "altitude_m", "speed_mps", "bank_angle_deg"});
        for (const char* key : {"altitude_m", "speed_mps", "bank_angle_deg"}) {
            if (!c.contains(key)) {
                schema_error("cruise of node '" + node.id + "' is missing '" + key + "'");
            }
        }
        node.cruise = geometry::make_circular_cruise(
            number_or(c, "center_x", 0.0), number_or(c, "center_y", 0.0),
            number_or(c, "altitude_m", 0.0), number_or(c, "speed_mps", 0.0),
            number_or(c, "bank_angle_deg", 0.0));
    } else {
        if (!obj.contains("position") || obj.contains("cruise")) {
            schema_error("node '" + node.id +
                         "' must have a static 'position' (cruise is fixed-wing only)");
        }
        const json& p = obj.at("position");
        require_keys(p, "position", {"x", "y", "z"});
        node.position = geometry::Position3D{number_or(p, "x", 0.0), number_or(p, "y", 0.0),
                                             number_or(p, "z", 0.0)};
        if (node.position->z < 0.0) {
            schema_error("node '" + node.id + "' altitude must be >= 0");
        }
    }

    if (obj.contains("radio")) {
        const json& r = obj.at("radio");
        require_keys(r, "radio",
                     {"tx_power_dBm", "tx_gain_dBi", "rx_gain_dBi", "frequency_GHz",
                      "rx_sensitivity_dBm"});
        node.radio.tx_power_dBm = number_or(r, "tx_power_dBm", node.radio.tx_power_dBm);
        node.radio.tx_gain_dBi = number_or(r, "tx_gain_dBi", node.radio.tx_gain_dBi);
        node.radio.rx_gain_dBi = number_or(r, "rx_gain_dBi", node.radio.rx_gain_dBi);
        node.radio.frequency_GHz = number_or(r, "frequency_GHz", node.radio.frequency_GHz);
        node.radio.rx_sensitivity_dBm =
            number_or(r, "rx_sensitivity_dBm", node.radio.rx_sensitivity_dBm);
    }
    linkbudget::validate(node.radio);

    node.battery_Wh = number_or(obj, "battery_Wh", 0.0);
    node.avg_power_draw_W = number_or(obj, "avg_power_draw_W", 0.0);
    node.harvest_W = number_or(obj, "harvest_W", 0.0);
    node.payload_kg = number_or(obj, "payload_kg", 0.0);
    if (node.battery_Wh < 0.0 || node.avg_power_draw_W < 0.0 || node.harvest_W < 0.0 ||
        node.payload_kg < 0.0) {
        schema_error("node '" + node.id + "': battery, draw, harvest and payload must be >= 0");
    }
    return node;
}

} // namespace

Scenario parse_scenario(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("top level must be an object");
    }
    require_keys(doc, "scenario", {"nodes", "links", "weather", "sim"});

    Scenario scenario;
    if (!doc.contains("nodes") || !doc.at("nodes").is_array()) {
        schema_error("'nodes' must be an array");
    }
    std::set<std::string> ids;
    for (const json& n : doc.at("nodes")) {
        UavNode node = parse_node(n);
        if (!ids.insert(node.id).second) {
            schema_error("duplicate node id '" + node.id + "'");
        }
        scenario.nodes.push_back(std::move(node));
    }

    if (doc.contains("links")) {
        if (!doc.at("links").is_array()) {
            schema_error("'links' must be an array of [from, to] pairs");
        }
        for (const json& l : doc.at("links")) {
            if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_string()) {
                schema_error("each link must be a [from, to] pair of node ids");
            }
            const std::string from = l[0].get<std::string>();
            const std::string to = l[1].get<std::string>();
            for (const std::string& id : {from, to}) {
                if (!ids.contains(id)) {
                    schema_error("link references unknown node id '" + id + "'");
                }
            }
            scenario.links.emplace_back(from, to);
        }
    }

    if (doc.contains("weather")) {
        scenario.weather = parse_weather(doc.at("weather"));
    }

    if (!doc.contains("sim") || !doc.at("sim").is_object()) {
        schema_error("'sim' section with duration_s and timestep_s is required");
    }
    const json& sim = doc.at("sim");
    require_keys(sim, "sim", {"duration_s", "timestep_s"});
    if (!sim.contains("duration_s") || !sim.contains("timestep_s")) {
        schema_error("'sim' must define duration_s and timestep_s");
    }
    scenario.duration_s = number_or(sim, "duration_s", 0.0);
    scenario.timestep_s = number_or(sim, "timestep_s", 1.0);
    if (!(scenario.timestep_s > 0.0)) {
        schema_error("'timestep_s' must be > 0");
    }
    if (scenario.duration_s < 0.0) {
        schema_error("'duration_s' must be >= 0");
    }
    return scenario;
}

Scenario load_scenario(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open scenario file " + file.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

attenuation::WeatherProfile parse_weather_json(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("weather parse error: ") + e.what());
    }
    return parse_weather(doc);
}

attenuation::WeatherProfile load_weather(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot open weather file " + file.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_weather_json(buffer.str());
}

void write_csv(std::span<const LinkSample> samples, std::ostream& out)
{
    out << "t_s,link_id,distance_m,elevation_deg,fspl_dB,gaseous_dB,rain_dB,cloud_dB,"
           "fog_dB,rx_power_dBm,margin_dB,viable\n";
    char buf[64];
    const auto field = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        out << ',' << buf;
    };
    for (const LinkSample& s : samples) {
        std::snprintf(buf, sizeof(buf), "%.3f", s.t_s);
        out << buf << ',' << s.link_id;
        field(s.report.distance_m);
        field(s.report.elevation_deg);
        field(s.report.fspl_dB);
        field(s.report.gaseous_dB);
        field(s.report.rain_dB);
        field(s.report.cloud_dB);
        field(s.report.fog_dB);
        field(s.report.rx_power_dBm);
        field(s.report.margin_dB);
        out << ',' << (s.report.viable ? '1' : '0') << '\n';
    }
}

} // namespace damu::scenario
