// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace damu::geometry {

/// Flat-Earth Cartesian position; z is altitude above ground in meters.
/// The approximation is documented: at the 20 km ranges modeled here the
/// Earth-curvature elevation error stays below 0.1 degrees.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Fixed-wing loiter path: a horizontal circle flown at constant speed and
/// bank angle. radius_m and period_s are derived from speed and bank.
struct CircularCruise {
    double center_x = 0.0;
    double center_y = 0.0;
    double altitude_m = 0.0;
    double speed_mps = 0.0;
    double bank_angle_deg = 0.0;
    double radius_m = 0.0;
    double period_s = 0.0;
};

/// Builds a cruise circle, deriving radius from the bank-angle turn formula
/// and period from 2*pi*R/V. Throws std::domain_error unless speed > 0 and
/// 0 < bank < 90.
CircularCruise make_circular_cruise(double center_x, double center_y, double altitude_m,
                                    double speed_mps, double bank_angle_deg);

/// Radius of turn in meters for a coordinated turn,
/// R_ft = V_kn^2 / (11.26 * tan(bank)). Bank 0 would be an infinite-radius
/// straight line and bank >= 90 is nonphysical; both throw std::domain_error.
double turn_radius(double speed_mps, double bank_angle_deg);

/// Position on the cruise circle at time t. Phase convention: t = 0 lies on
/// the +x axis from the center, and the aircraft moves counterclockwise.
Position3D cruise_position(const CircularCruise& cruise, double t_s);

/// Signed elevation angle from observer to target in degrees:
/// atan2(dz, horizontal distance), +90 for a target straight above.
/// Identical points are degenerate and throw std::domain_error.
double elevation_angle(const Position3D& observer, const Position3D& target);

/// Euclidean distance in meters.
double slant_distance(const Position3D& a, const Position3D& b);

enum class SpreadMode {
    half_angle, // max angle between LoS-to-center and LoS to any circle point
    full_span,  // max angle between LoS to any two circle points
};

/// Angular spread of the line of sight from a fixed observer to a UAV
/// traversing its cruise circle, in degrees. Evaluated by dense sampling of
/// the circle (default 3600 points, bounding the discretization error well
/// below 0.1 deg * R/d). An observer inside the circle's disk at the cruise
/// altitude is degenerate and throws std::domain_error.
double angular_spread(const Position3D& observer, const CircularCruise& cruise,
                      SpreadMode mode, int samples = 3600);

} // namespace damu::geometry
