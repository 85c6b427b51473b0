#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ybfr/halfint.hpp"
#include "ybfr/rational.hpp"

namespace ybfr {

enum class Polarization { sigma_minus = -1, pi = 0, sigma_plus = +1 };

inline int photon_q(Polarization p) { return static_cast<int>(p); }
Polarization parse_polarization(const std::string& text);  // "sigma+", "sigma-", "pi"
std::string to_string(Polarization p);

// Squared Clebsch-Gordan coefficient |<j1 j2; m1 m2 | j1 j2; J, m1+m2>|^2 as an
// exact rational. Quantum numbers violating |m|<=j, the triangle rule or
// half-integer consistency throw std::domain_error; a projection m1+m2 outside
// [-J, J] gives an exact zero (selection rule, not an error).
Rational clebsch_gordan_sq(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J);

// Excited hyperfine levels F' of the J'=1 state coupled to nuclear spin I,
// ascending: |I-1| .. I+1.
std::vector<HalfInt> excited_hyperfine_levels(HalfInt nuclear_spin);

// Squared transition amplitudes between ground |F=I, m> and excited |F', m+q>
// for one photon polarization. Entries outside the selection rules are exact 0.
class StrengthTable {
 public:
  StrengthTable(HalfInt nuclear_spin, Polarization pol);

  HalfInt nuclear_spin() const { return spin_; }
  Polarization polarization() const { return pol_; }

  // keyed by (2*m_ground, 2*F')
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }
  Rational entry(HalfInt m_ground, HalfInt f_excited) const;

 private:
  HalfInt spin_;
  Polarization pol_;
  std::map<std::pair<int, int>, Rational> entries_;
};

StrengthTable sigma_strength_table(HalfInt nuclear_spin, Polarization pol);

// Population-averaged pi-transition strength per excited F':
// (2F'+1) / (3(2I+1)); sums to 1 over F'.
std::map<int, Rational> pi_line_strengths(HalfInt nuclear_spin);  // keyed by 2F'

}  // namespace ybfr
