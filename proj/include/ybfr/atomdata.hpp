#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ybfr/halfint.hpp"
#include "ybfr/units.hpp"

namespace ybfr {

// Raised when an isotope document cannot be parsed; the message names the
// offending record.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when parsed data violates a table invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransitionConstants {
  double omega0;  // rad/s
  double gamma;   // rad/s, natural full linewidth
  double sigma0;  // m^2, resonant photon-absorption cross section
  double i_sat;   // W/m^2

  // sigma0 = 6 pi (c/omega0)^2 and i_sat = hbar omega0 gamma / (2 sigma0),
  // both within 1e-6 relative.
  void validate() const;
};

// The Yb 1S0 -> 1P1 line: omega0 = 2pi x 751.5 THz, gamma = 2pi x 29 MHz,
// sigma0 and i_sat derived from them.
TransitionConstants transition_constants();

// Squared electric dipole moment e^2 sigma0 gamma / (8 pi alpha_f omega0), C^2 m^2.
double electric_dipole_sq(const TransitionConstants& constants);

// Refractive-index prefactor 2 pi alpha_f c mu_e^2 / e^2, which reduces to
// c sigma0 gamma / (4 omega0).
double index_prefactor(const TransitionConstants& constants);

struct IsotopeSpec {
  int mass_number = 0;
  double abundance = 0.0;  // fraction of natural Yb, [0, 1]
  HalfInt nuclear_spin;
  // Frequencies are stored as MHz (cycles) relative to the reference (174Yb)
  // line; they become rad/s only inside formulas, via line_offset().
  double shift_mhz = 0.0;               // centroid offset from the reference line
  std::map<int, double> hyperfine_mhz;  // keyed by 2F', offset from the centroid

  std::vector<HalfInt> excited_levels() const;  // ascending F'
  double hyperfine_offset(HalfInt f_excited) const;     // rad/s from centroid
  double line_offset(HalfInt f_excited) const;          // rad/s on the shared axis
  double centroid_offset() const { return mhz_to_rad(shift_mhz); }

  void validate() const;
};

class IsotopeTable {
 public:
  explicit IsotopeTable(std::vector<IsotopeSpec> isotopes);

  const std::vector<IsotopeSpec>& isotopes() const { return isotopes_; }
  bool contains(int mass_number) const;
  const IsotopeSpec& by_mass(int mass_number) const;

 private:
  std::vector<IsotopeSpec> isotopes_;
};

IsotopeTable load_isotope_table(std::string_view json_text);
IsotopeTable load_isotope_table_file(const std::string& path);
std::string save_isotope_table(const IsotopeTable& table);

// The bundled table (compiled in from data/yb_isotopes.json).
const IsotopeTable& default_isotope_table();

}  // namespace ybfr
