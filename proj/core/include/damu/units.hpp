// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace damu::units {

// Conversion factors. The turn-radius formula is imperial-unit-specific,
// everything else in the library is SI.
inline constexpr double kMetersPerFoot = 0.3048;
inline constexpr double kMpsPerKnot = 0.514444;

inline constexpr double knots_from_mps(double v_mps) { return v_mps / kMpsPerKnot; }
inline constexpr double mps_from_knots(double v_kn) { return v_kn * kMpsPerKnot; }
inline constexpr double feet_from_m(double d_m) { return d_m / kMetersPerFoot; }
inline constexpr double m_from_feet(double d_ft) { return d_ft * kMetersPerFoot; }

inline constexpr double pounds_force_from_newtons(double f_n) { return f_n / 4.4482216152605; }
inline constexpr double km_h_from_mps(double v_mps) { return v_mps * 3.6; }

} // namespace damu::units
