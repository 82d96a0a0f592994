// SPDX-License-Identifier: Apache-2.0

#include "damu/geometry.hpp"

#include "damu/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace damu::geometry {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

struct Vec3 {
    double x, y, z;
};

Vec3 unit_direction(const Position3D& from, const Position3D& to)
{
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double dz = to.z - from.z;
    const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (len == 0.0) {
        throw std::domain_error("degenerate geometry: coincident points");
    }
    return {dx / len, dy / len, dz / len};
}

double angle_between_deg(const Vec3& a, const Vec3& b)
{
    const double dot = std::clamp(a.x * b.x + a.y * b.y + a.z * b.z, -1.0, 1.0);
    return std::acos(dot) * kDegPerRad;
}

} // namespace

double turn_radius(double speed_mps, double bank_angle_deg)
{
    if (!(speed_mps > 0.0)) {
        throw std::domain_error("turn_radius: speed must be > 0");
    }
    if (bank_angle_deg <= 0.0) {
        throw std::domain_error("turn_radius: bank angle 0 gives an infinite turn radius");
    }
    if (bank_angle_deg >= 90.0) {
        throw std::domain_error("turn_radius: bank angle must be < 90 degrees");
    }
    const double v_kn = units::knots_from_mps(speed_mps);
    const double radius_ft =
        v_kn * v_kn / (11.26 * std::tan(bank_angle_deg / kDegPerRad));
    return units::m_from_feet(radius_ft);
}

CircularCruise make_circular_cruise(double center_x, double center_y, double altitude_m,
                                    double speed_mps, double bank_angle_deg)
{
    CircularCruise cruise;
    cruise.center_x = center_x;
    cruise.center_y = center_y;
    cruise.altitude_m = altitude_m;
    cruise.speed_mps = speed_mps;
    cruise.bank_angle_deg = bank_angle_deg;
    cruise.radius_m = turn_radius(speed_mps, bank_angle_deg);
    cruise.period_s = 2.0 * std::numbers::pi * cruise.radius_m / speed_mps;
    return cruise;
}

Position3D cruise_position(const CircularCruise& cruise, double t_s)
{
    const double phase = 2.0 * std::numbers::pi * t_s / cruise.period_s;
    return {cruise.center_x + cruise.radius_m * std::cos(phase),
            cruise.center_y + cruise.radius_m * std::sin(phase), cruise.altitude_m};
}

double elevation_angle(const Position3D& observer, const Position3D& target)
{
    const double dx = target.x - observer.x;
    const double dy = target.y - observer.y;
    const double dz = target.z - observer.z;
    const double horizontal = std::hypot(dx, dy);
    if (horizontal == 0.0 && dz == 0.0) {
        throw std::domain_error("elevation_angle: coincident points");
    }
    return std::atan2(dz, horizontal) * kDegPerRad;
}

double slant_distance(const Position3D& a, const Position3D& b)
{
    return std::sqrt((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y) +
                     (b.z - a.z) * (b.z - a.z));
}

double angular_spread(const Position3D& observer, const CircularCruise& cruise,
                      SpreadMode mode, int samples)
{
    if (samples < 3) {
        throw std::domain_error("angular_spread: need at least 3 samples");
    }
    const Position3D center{cruise.center_x, cruise.center_y, cruise.altitude_m};
    const double horizontal =
        std::hypot(observer.x - cruise.center_x, observer.y - cruise.center_y);
    if (observer.z == cruise.altitude_m && horizontal <= cruise.radius_m) {
        throw std::domain_error("angular_spread: observer inside the cruise disk");
    }
    if (cruise.radius_m == 0.0) {
        return 0.0;
    }

    std::vector<Vec3> directions;
    directions.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double phase = 2.0 * std::numbers::pi * i / samples;
        const Position3D p{cruise.center_x + cruise.radius_m * std::cos(phase),
                           cruise.center_y + cruise.radius_m * std::sin(phase),
                           cruise.altitude_m};
        directions.push_back(unit_direction(observer, p));
    }

    if (mode == SpreadMode::half_angle) {
        const Vec3 to_center = unit_direction(observer, center);
        double worst = 0.0;
        for (const Vec3& d : directions) {
            worst = std::max(worst, angle_between_deg(to_center, d));
        }
        return worst;
    }

    // full_span: the diameter of the direction set, tracked as the minimum
    // pairwise dot product.
    double min_dot = 1.0;
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
            const Vec3& a = directions[i];
            const Vec3& b = directions[j];
            min_dot = std::min(min_dot, a.x * b.x + a.y * b.y + a.z * b.z);
        }
    }
    return std::acos(std::clamp(min_dot, -1.0, 1.0)) * kDegPerRad;
}

} // namespace damu::geometry
