// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "damu/geometry.hpp"
#include "damu/scenario.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

using namespace damu;
using scenario::Scenario;
using scenario::UavNode;

namespace {

UavNode make_static(const std::string& id, NodeClass cls, double x, double y, double z)
{
    UavNode node;
    node.id = id;
    node.node_class = cls;
    node.position = geometry::Position3D{x, y, z};
    return node;
}

UavNode make_fw(const std::string& id, double altitude_m)
{
    UavNode node;
    node.id = id;
    node.node_class = NodeClass::fixed_wing;
    node.cruise = geometry::make_circular_cruise(0.0, 0.0, altitude_m, 20.0, 30.0);
    return node;
}

Scenario fig4_like()
{
    Scenario s;
    s.nodes.push_back(make_static("balloon-1", NodeClass::balloon, 5000.0, 0.0, 20001.0));
    s.nodes.push_back(make_fw("fw-1", 2000.0));
    s.nodes.push_back(make_static("rw-1", NodeClass::rotary_wing, 0.0, 0.0, 100.0));
    s.links = {{"balloon-1", "fw-1"}, {"fw-1", "rw-1"}};
    s.duration_s = 10.0;
    s.timestep_s = 1.0;
    return s;
}

} // namespace

TEST_CASE("validation flags the rotary-wing altitude band")
{
    Scenario s;
    s.nodes.push_back(make_static("rw-high", NodeClass::rotary_wing, 0, 0, 1500.0));
    const auto violations = scenario::validate(s);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].node_id == "rw-high");
    CHECK(violations[0].rule == "RW altitude band");
}

TEST_CASE("a compliant DAMU deployment validates cleanly")
{
    const auto violations = scenario::validate(fig4_like());
    CHECK(violations.empty());
}

TEST_CASE("an empty scenario validates cleanly")
{
    CHECK(scenario::validate(Scenario{}).empty());
}

TEST_CASE("strict altitude band edges")
{
    Scenario s;
    s.nodes.push_back(make_static("b", NodeClass::balloon, 0, 0, 20000.0));
    CHECK(scenario::validate(s).size() == 1); // band requires strictly above 20 km

    s.nodes.clear();
    s.nodes.push_back(make_fw("fw-low", 900.0));
    CHECK(scenario::validate(s).size() == 1);

    s.nodes.clear();
    s.nodes.push_back(make_fw("fw-high", 12000.0));
    CHECK(scenario::validate(s).size() == 1); // band broken, ceiling still met

    s.nodes.clear();
    s.nodes.push_back(make_fw("fw-ceiling", 17000.0));
    CHECK(scenario::validate(s).size() == 2); // band and 16 km ceiling

    s.nodes.clear();
    auto rw = make_static("rw-ceiling", NodeClass::rotary_wing, 0, 0, 6500.0);
    s.nodes.push_back(rw);
    CHECK(scenario::validate(s).size() == 2); // band and 6 km ceiling

    s.nodes.clear();
    s.nodes.push_back(make_static("g", NodeClass::ground, 0, 0, 0.0));
    CHECK(scenario::validate(s).empty());
}

TEST_CASE("payload bounds are validated per class")
{
    Scenario s;
    auto rw = make_static("rw-1", NodeClass::rotary_wing, 0, 0, 100.0);
    rw.payload_kg = 150.0;
    s.nodes.push_back(rw);
    const auto violations = scenario::validate(s);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "payload bound");
}

TEST_CASE("link frequency mismatch is reported")
{
    Scenario s = fig4_like();
    s.links = {{"balloon-1", "fw-1"}};
    s.nodes[0].radio.frequency_GHz = 28.0;
    s.nodes[1].radio.frequency_GHz = 40.0;
    const auto violations = scenario::validate(s);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "link frequency mismatch");
    CHECK(violations[0].node_id == "balloon-1->fw-1");
}

TEST_CASE("endurance arithmetic")
{
    UavNode node;
    node.battery_Wh = 80.0;
    node.avg_power_draw_W = 160.0;
    node.harvest_W = 0.0;
    CHECK(scenario::endurance_s(node) == doctest::Approx(1800.0));

    node.harvest_W = 40.0;
    CHECK(scenario::endurance_s(node) == doctest::Approx(2400.0));

    node.harvest_W = 160.0; // self-sustaining
    CHECK(std::isinf(scenario::endurance_s(node)));
    node.harvest_W = 200.0;
    CHECK(std::isinf(scenario::endurance_s(node)));

    node = {};
    CHECK(scenario::endurance_s(node) == 0.0);

    node.battery_Wh = -1.0;
    CHECK_THROWS_AS(scenario::endurance_s(node), std::domain_error);
}

TEST_CASE("endurance monotonicity")
{
    UavNode node;
    node.battery_Wh = 100.0;
    node.avg_power_draw_W = 200.0;
    node.harvest_W = 50.0;
    const double base = scenario::endurance_s(node);

    auto richer = node;
    richer.battery_Wh = 150.0;
    CHECK(scenario::endurance_s(richer) > base);

    auto harvesting = node;
    harvesting.harvest_W = 100.0;
    CHECK(scenario::endurance_s(harvesting) > base);

    auto hungrier = node;
    hungrier.avg_power_draw_W = 300.0;
    CHECK(scenario::endurance_s(hungrier) < base);
}

TEST_CASE("simulate emits floor(duration/timestep) rows per link")
{
    auto s = fig4_like();
    s.duration_s = 10.0;
    s.timestep_s = 3.0;
    const auto series = scenario::simulate(s);
    CHECK(series.size() == 3 * s.links.size());

    s.duration_s = 0.0;
    CHECK(scenario::simulate(s).empty());

    s.timestep_s = 0.0;
    CHECK_THROWS_AS(scenario::simulate(s), std::domain_error);
}

TEST_CASE("static nodes under constant weather give identical reports per step")
{
    Scenario s;
    s.nodes.push_back(make_static("balloon-1", NodeClass::balloon, 0, 0, 20001.0));
    s.nodes.push_back(make_static("rw-1", NodeClass::rotary_wing, 100.0, 0, 100.0));
    s.links = {{"balloon-1", "rw-1"}};
    s.duration_s = 5.0;
    s.timestep_s = 1.0;
    const auto series = scenario::simulate(s);
    REQUIRE(series.size() == 5);
    for (const auto& sample : series) {
        CHECK(sample.valid);
        CHECK(sample.report.rx_power_dBm == series[0].report.rx_power_dBm);
        CHECK(sample.report.distance_m == series[0].report.distance_m);
    }
}

TEST_CASE("simulation output is ordered by time then link id")
{
    auto s = fig4_like();
    s.links = {{"fw-1", "rw-1"}, {"balloon-1", "fw-1"}}; // declared out of order
    s.duration_s = 2.0;
    const auto series = scenario::simulate(s);
    REQUIRE(series.size() == 4);
    CHECK(series[0].link_id == "balloon-1->fw-1");
    CHECK(series[1].link_id == "fw-1->rw-1");
    CHECK(series[0].t_s == 0.0);
    CHECK(series[2].t_s == 1.0);
}

TEST_CASE("rerunning a simulation yields byte-identical CSV")
{
    const auto s = fig4_like();
    std::ostringstream a, b;
    scenario::write_csv(scenario::simulate(s), a);
    scenario::write_csv(scenario::simulate(s), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().starts_with("t_s,link_id,distance_m,elevation_deg,fspl_dB,gaseous_dB,"
                              "rain_dB,cloud_dB,fog_dB,rx_power_dBm,margin_dB,viable\n"));
}

TEST_CASE("a grazing link is recorded as non-viable instead of crashing")
{
    Scenario s;
    s.nodes.push_back(make_static("rw-a", NodeClass::rotary_wing, 0, 0, 100.0));
    s.nodes.push_back(make_static("rw-b", NodeClass::rotary_wing, 5000.0, 0, 100.0));
    s.links = {{"rw-a", "rw-b"}};
    s.duration_s = 2.0;
    s.timestep_s = 1.0;
    const auto series = scenario::simulate(s);
    REQUIRE(series.size() == 2);
    for (const auto& sample : series) {
        CHECK_FALSE(sample.valid);
        CHECK_FALSE(sample.reason.empty());
        CHECK_FALSE(sample.report.viable);
        CHECK(sample.report.distance_m == doctest::Approx(5000.0));
        CHECK(std::isnan(sample.report.rx_power_dBm));
    }
    std::ostringstream out;
    scenario::write_csv(series, out);
    CHECK(out.str().find("nan") != std::string::npos);
}

TEST_CASE("simulate refuses scenarios with outstanding violations unless forced")
{
    Scenario s;
    s.nodes.push_back(make_static("rw-high", NodeClass::rotary_wing, 0, 0, 1500.0));
    s.nodes.push_back(make_static("g", NodeClass::ground, 100, 0, 0.0));
    s.links = {{"rw-high", "g"}};
    s.duration_s = 1.0;
    s.timestep_s = 1.0;
    CHECK_THROWS_AS(scenario::simulate(s), std::domain_error);
    CHECK_NOTHROW(scenario::simulate(s, /*force=*/true));
}

TEST_CASE("fixed-wing LoS wobble over a full cruise matches the angular spread")
{
    Scenario s;
    s.nodes.push_back(make_static("balloon-1", NodeClass::balloon, 5000.0, 0.0, 20001.0));
    s.nodes.push_back(make_fw("fw-1", 2000.0));
    s.links = {{"balloon-1", "fw-1"}};
    const auto& cruise = *s.nodes[1].cruise;
    s.duration_s = cruise.period_s * 1.05; // a full revolution
    s.timestep_s = cruise.period_s / 400.0;
    const auto series = scenario::simulate(s);

    // Reconstruct the LoS directions the balloon saw and take the widest
    // pairwise angle; it must agree with the full-span angular spread.
    const geometry::Position3D balloon{5000.0, 0.0, 20001.0};
    std::vector<std::array<double, 3>> dirs;
    for (const auto& sample : series) {
        const auto p = geometry::cruise_position(cruise, sample.t_s);
        const double dx = p.x - balloon.x, dy = p.y - balloon.y, dz = p.z - balloon.z;
        const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
        dirs.push_back({dx / len, dy / len, dz / len});
    }
    double min_dot = 1.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            min_dot = std::min(min_dot, dirs[i][0] * dirs[j][0] + dirs[i][1] * dirs[j][1] +
                                            dirs[i][2] * dirs[j][2]);
        }
    }
    const double span_deg = std::acos(min_dot) * 180.0 / 3.14159265358979323846;
    const double expected =
        geometry::angular_spread(balloon, cruise, geometry::SpreadMode::full_span);
    CHECK(span_deg == doctest::Approx(expected).epsilon(0.01));
    CHECK(span_deg > 0.39);
    CHECK(span_deg < 0.45);
}

TEST_CASE("scenario JSON parsing round trip")
{
    const std::string text = R"json({
      "nodes": [
        {"id": "b1", "class": "balloon", "position": {"x": 0, "y": 0, "z": 20500},
         "radio": {"tx_power_dBm": 30, "frequency_GHz": 28}, "battery_Wh": 100,
         "avg_power_draw_W": 50, "harvest_W": 60, "payload_kg": 200},
        {"id": "f1", "class": "fixed_wing",
         "cruise": {"center_x": 0, "center_y": 0, "altitude_m": 2000,
                    "speed_mps": 20, "bank_angle_deg": 30},
         "radio": {"frequency_GHz": 28}}
      ],
      "links": [["b1", "f1"]],
      "weather": {"rain_rate_mm_h": 10, "visibility_class": "haze"},
      "sim": {"duration_s": 4, "timestep_s": 2}
    })json";
    const auto s = scenario::parse_scenario(text);
    CHECK(s.nodes.size() == 2);
    CHECK(s.nodes[0].node_class == NodeClass::balloon);
    CHECK(s.nodes[0].payload_kg == 200.0);
    CHECK(s.nodes[1].cruise.has_value());
    CHECK(s.nodes[1].cruise->radius_m == doctest::Approx(70.863236).epsilon(1e-6));
    CHECK(s.weather.rain_rate_mm_h == 10.0);
    CHECK(s.weather.visibility_class == attenuation::VisibilityClass::haze);
    CHECK(s.duration_s == 4.0);
    CHECK(scenario::simulate(s).size() == 2);
}

TEST_CASE("scenario JSON schema errors")
{
    using scenario::parse_scenario;
    CHECK_THROWS_AS(parse_scenario("{not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_scenario(R"({"nodes": [], "sim": {"duration_s": 1}})"),
                    std::runtime_error); // missing timestep_s
    CHECK_THROWS_AS(parse_scenario(R"({"nodes": [], "simm": {}})"), std::runtime_error);
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"nodes": [{"id": "a", "class": "rotary_wing",
                "position": {"x": 0, "y": 0, "z": 100}, "bogus_key": 1}],
                "sim": {"duration_s": 1, "timestep_s": 1}})"),
        std::runtime_error);
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"nodes": [{"id": "a", "class": "fixed_wing",
                "position": {"x": 0, "y": 0, "z": 2000}}],
                "sim": {"duration_s": 1, "timestep_s": 1}})"),
        std::runtime_error); // fixed-wing needs a cruise
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"nodes": [{"id": "a", "class": "rotary_wing",
                "position": {"x": 0, "y": 0, "z": 100}}],
                "links": [["a", "ghost"]],
                "sim": {"duration_s": 1, "timestep_s": 1}})"),
        std::runtime_error); // unknown link endpoint
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"nodes": [
                {"id": "a", "class": "rotary_wing", "position": {"x": 0, "y": 0, "z": 1}},
                {"id": "a", "class": "rotary_wing", "position": {"x": 9, "y": 0, "z": 1}}],
                "sim": {"duration_s": 1, "timestep_s": 1}})"),
        std::runtime_error); // duplicate id
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"nodes": [], "weather": {"visibility_class": "foggy"},
                "sim": {"duration_s": 1, "timestep_s": 1}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_scenario(R"({"nodes": [], "sim": {"duration_s": 1, "timestep_s": 0}})"),
        std::runtime_error);
}

TEST_CASE("CSV golden row for a static link")
{
    Scenario s;
    s.nodes.push_back(make_static("a", NodeClass::ground, 0, 0, 0.0));
    s.nodes.push_back(make_static("b", NodeClass::balloon, 0, 0, 20001.0));
    s.links = {{"a", "b"}};
    s.duration_s = 1.0;
    s.timestep_s = 1.0;
    const auto series = scenario::simulate(s);
    REQUIRE(series.size() == 1);
    std::ostringstream out;
    scenario::write_csv(series, out);
    const std::string text = out.str();
    CHECK(text.find("0.000,a->b,20001.000000,90.000000,") != std::string::npos);
    // Stable fixed formatting: rerender and compare.
    std::ostringstream again;
    scenario::write_csv(series, again);
    CHECK(text == again.str());
}

TEST_CASE("node position resolution")
{
    const auto fw = make_fw("f", 2000.0);
    const auto p0 = scenario::node_position(fw, 0.0);
    const auto ph = scenario::node_position(fw, fw.cruise->period_s / 2.0);
    CHECK(p0.x == doctest::Approx(fw.cruise->radius_m));
    CHECK(ph.x == doctest::Approx(-fw.cruise->radius_m).epsilon(1e-9));
    CHECK(scenario::node_altitude(fw) == 2000.0);

    const auto rw = make_static("r", NodeClass::rotary_wing, 1, 2, 300.0);
    const auto pr = scenario::node_position(rw, 123.0);
    CHECK(pr.x == 1.0);
    CHECK(pr.z == 300.0);

    UavNode empty;
    empty.id = "x";
    CHECK_THROWS_AS(scenario::node_position(empty, 0.0), std::domain_error);
}
