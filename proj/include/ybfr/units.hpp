#pragma once

#include <numbers>

namespace ybfr {

// CODATA 2018 values.
namespace phys {
inline constexpr double c = 299792458.0;                      // m/s
inline constexpr double hbar = 1.054571817e-34;               // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double amu = 1.66053906660e-27;              // kg
inline constexpr double bohr_magneton = 9.2740100783e-24;     // J/T
}  // namespace phys

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Frequency axes are handled in MHz (cycles) at the human-facing boundary and
// in rad/s inside formulas. These two helpers are the only conversion path.
inline constexpr double mhz_to_rad(double mhz) { return two_pi * 1e6 * mhz; }
inline constexpr double rad_to_mhz(double rad) { return rad / (two_pi * 1e6); }

// Intensities: 1 mW/mm^2 = 1e3 W/m^2.
inline constexpr double mw_per_mm2_to_si(double v) { return v * 1e3; }
inline constexpr double si_to_mw_per_mm2(double v) { return v * 1e-3; }

}  // namespace ybfr
