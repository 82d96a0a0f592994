// SPDX-License-Identifier: Apache-2.0

#include "damu/scenario.hpp"

#include "damu/aero.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace damu::scenario {

double node_altitude(const UavNode& node)
{
    if (node.cruise) return node.cruise->altitude_m;
    if (node.position) return node.position->z;
    throw std::domain_error("node '" + node.id + "' has neither position nor cruise");
}

geometry::Position3D node_position(const UavNode& node, double t_s)
{
    if (node.cruise) return geometry::cruise_position(*node.cruise, t_s);
    if (node.position) return *node.position;
    throw std::domain_error("node '" + node.id + "' has neither position nor cruise");
}

namespace {

std::string format_value(double v)
{
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << v;
    return os.str();
}

void check_altitude_rules(const UavNode& node, std::vector<Violation>& out)
{
    const double alt = node_altitude(node);
    switch (node.node_class) {
    case NodeClass::balloon:
        if (!(alt > 20000.0)) {
            out.push_back({node.id, "balloon altitude band",
                           "altitude " + format_value(alt) + " m, band requires > 20000 m"});
        }
        break;
    case NodeClass::fixed_wing:
        if (!(alt > 1000.0) || !(alt < 10000.0)) {
            out.push_back({node.id, "FW altitude band",
                           "altitude " + format_value(alt) +
                               " m, band requires 1000 m < altitude < 10000 m"});
        }
        if (alt > 16000.0) {
            out.push_back({node.id, "FW altitude ceiling",
                           "altitude " + format_value(alt) + " m exceeds 16000 m ceiling"});
        }
        break;
    case NodeClass::rotary_wing:
        if (!(alt < 1000.0)) {
            out.push_back({node.id, "RW altitude band",
                           "altitude " + format_value(alt) + " m, band requires < 1000 m"});
        }
        if (alt > 6000.0) {
            out.push_back({node.id, "RW altitude ceiling",
                           "altitude " + format_value(alt) + " m exceeds 6000 m ceiling"});
        }
        break;
    case NodeClass::ground:
        break;
    }
}

} // namespace

std::vector<Violation> validate(const Scenario& scenario)
{
    std::vector<Violation> violations;
    for (const UavNode& node : scenario.nodes) {
        check_altitude_rules(node, violations);
        if (!aero::payload_feasible(node.node_class, node.payload_kg)) {
            violations.push_back({node.id, "payload bound",
                                  "payload " + format_value(node.payload_kg) +
                                      " kg exceeds the " + to_string(node.node_class) +
                                      " class bound"});
        }
    }
    for (const auto& [from, to] : scenario.links) {
        const UavNode* a = nullptr;
        const UavNode* b = nullptr;
        for (const UavNode& n : scenario.nodes) {
            if (n.id == from) a = &n;
            if (n.id == to) b = &n;
        }
        if (a && b && a->radio.frequency_GHz != b->radio.frequency_GHz) {
            violations.push_back({from + "->" + to, "link frequency mismatch",
                                  format_value(a->radio.frequency_GHz) + " GHz vs " +
                                      format_value(b->radio.frequency_GHz) + " GHz"});
        }
    }
    return violations;
}

std::vector<LinkSample> simulate(const Scenario& scenario, bool force)
{
    if (!(scenario.timestep_s > 0.0)) {
        throw std::domain_error("simulate: timestep must be > 0");
    }
    if (!(scenario.duration_s >= 0.0)) {
        throw std::domain_error("simulate: duration must be >= 0");
    }
    if (!force) {
        const auto violations = validate(scenario);
        if (!violations.empty()) {
            throw std::domain_error("simulate: scenario has " +
                                    std::to_string(violations.size()) +
                                    " validation violations (pass force to run anyway)");
        }
    }

    struct ResolvedLink {
        std::string id;
        const UavNode* a;
        const UavNode* b;
        linkbudget::RadioConfig radio;
    };
    std::vector<ResolvedLink> resolved;
    for (const auto& [from, to] : scenario.links) {
        const UavNode* a = nullptr;
        const UavNode* b = nullptr;
        for (const UavNode& n : scenario.nodes) {
            if (n.id == from) a = &n;
            if (n.id == to) b = &n;
        }
        if (!a || !b) {
            throw std::runtime_error("link references unknown node id '" +
                                     (a ? to : from) + "'");
        }
        // Transmit side from the first endpoint, receive side from the second.
        linkbudget::RadioConfig radio = a->radio;
        radio.rx_gain_dBi = b->radio.rx_gain_dBi;
        radio.rx_sensitivity_dBm = b->radio.rx_sensitivity_dBm;
        resolved.push_back({from + "->" + to, a, b, radio});
    }
    // Output ordering contract: time, then link id.
    std::stable_sort(resolved.begin(), resolved.end(),
                     [](const ResolvedLink& x, const ResolvedLink& y) { return x.id < y.id; });

    const auto steps = static_cast<long long>(scenario.duration_s / scenario.timestep_s);
    std::vector<LinkSample> series;
    series.reserve(static_cast<std::size_t>(steps) * resolved.size());
    for (long long k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * scenario.timestep_s;
        for (const ResolvedLink& link : resolved) {
            LinkSample sample;
            sample.t_s = t;
            sample.link_id = link.id;
            const geometry::Position3D pa = node_position(*link.a, t);
            const geometry::Position3D pb = node_position(*link.b, t);
            try {
                sample.report = linkbudget::rf_link(pa, pb, link.radio, scenario.weather);
                sample.valid = true;
            } catch (const std::exception& e) {
                sample.valid = false;
                sample.reason = e.what();
                sample.report = {};
                sample.report.rx_power_dBm = std::numeric_limits<double>::quiet_NaN();
                sample.report.margin_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.fspl_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.gaseous_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.rain_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.cloud_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.fog_dB = std::numeric_limits<double>::quiet_NaN();
                sample.report.distance_m = geometry::slant_distance(pa, pb);
                sample.report.elevation_deg =
                    (sample.report.distance_m > 0.0) ? geometry::elevation_angle(pa, pb)
                                                     : std::numeric_limits<double>::quiet_NaN();
                sample.report.viable = false;
            }
            series.push_back(std::move(sample));
        }
    }
    return series;
}

double endurance_s(const UavNode& node)
{
    if (!(node.battery_Wh >= 0.0) || !(node.avg_power_draw_W >= 0.0) ||
        !(node.harvest_W >= 0.0)) {
        throw std::domain_error("endurance: battery, draw and harvest must be >= 0");
    }
    if (node.avg_power_draw_W > node.harvest_W) {
        return node.battery_Wh * 3600.0 / (node.avg_power_draw_W - node.harvest_W);
    }
    if (node.battery_Wh == 0.0 && node.avg_power_draw_W == 0.0 && node.harvest_W == 0.0) {
        return 0.0;
    }
    return std::numeric_limits<double>::infinity();
}

} // namespace damu::scenario
