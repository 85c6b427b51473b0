#include "ybfr/angular.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybfr {

Polarization parse_polarization(const std::string& text) {
  if (text == "sigma+" || text == "sigma_plus" || text == "s+") return Polarization::sigma_plus;
  if (text == "sigma-" || text == "sigma_minus" || text == "s-") return Polarization::sigma_minus;
  if (text == "pi") return Polarization::pi;
  throw std::invalid_argument("unknown polarization: '" + text + "' (expected sigma+, sigma- or pi)");
}

std::string to_string(Polarization p) {
  switch (p) {
    case Polarization::sigma_plus: return "sigma+";
    case Polarization::sigma_minus: return "sigma-";
    case Polarization::pi: return "pi";
  }
  return "?";
}

namespace {

// All factorial arguments below are of the form (j ± m) or (j1 + j2 ± J) etc.,
// integers whenever the inputs are a consistent half-integer family.
int as_int(HalfInt a, HalfInt b, int sign) {
  const int t = a.twice() + sign * b.twice();
  if (t % 2 != 0) throw std::domain_error("inconsistent half-integer quantum numbers");
  return t / 2;
}

}  // namespace

Rational clebsch_gordan_sq(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J) {
  if (j1.twice() < 0 || j2.twice() < 0 || J.twice() < 0)
    throw std::domain_error("negative angular momentum");
  if (std::abs(m1.twice()) > j1.twice() || std::abs(m2.twice()) > j2.twice())
    throw std::domain_error("projection exceeds its angular momentum");
  if ((j1.twice() + m1.twice()) % 2 != 0 || (j2.twice() + m2.twice()) % 2 != 0)
    throw std::domain_error("projection and angular momentum differ by a non-integer");
  if (J.twice() < std::abs(j1.twice() - j2.twice()) || J.twice() > j1.twice() + j2.twice())
    throw std::domain_error("triangle rule violated");
  if ((j1.twice() + j2.twice() + J.twice()) % 2 != 0)
    throw std::domain_error("j1+j2+J is not an integer");

  const HalfInt M = m1 + m2;
  if (std::abs(M.twice()) > J.twice()) return Rational(0);

  // Racah closed form, squared term by term; every factor is rational.
  const int a = as_int(j1 + j2, J, -1);   // j1+j2-J
  const int b = as_int(j1, j2 - J, -1);   // j1-j2+J
  const int c = as_int(j2, j1 - J, -1);   // -j1+j2+J (= j2-j1+J)
  const int d = as_int(j1 + j2, J, +1) + 1;  // j1+j2+J+1

  const Rational delta = Rational::factorial(a) * Rational::factorial(b) *
                         Rational::factorial(c) / Rational::factorial(d);

  const Rational weights =
      Rational::factorial(as_int(J, M, +1)) * Rational::factorial(as_int(J, M, -1)) *
      Rational::factorial(as_int(j1, m1, -1)) * Rational::factorial(as_int(j1, m1, +1)) *
      Rational::factorial(as_int(j2, m2, -1)) * Rational::factorial(as_int(j2, m2, +1));

  const int t1 = as_int(j1 + j2, J, -1);     // j1+j2-J
  const int t2 = as_int(j1, m1, -1);         // j1-m1
  const int t3 = as_int(j2, m2, +1);         // j2+m2
  const int t4 = as_int(J - j2, m1, +1);     // J-j2+m1 (may be negative)
  const int t5 = as_int(J - j1, m2, -1);     // J-j1-m2 (may be negative)

  const int k_min = std::max(0, std::max(-t4, -t5));
  const int k_max = std::min(t1, std::min(t2, t3));

  Rational sum(0);
  for (int k = k_min; k <= k_max; ++k) {
    const Rational term = Rational(1) /
        (Rational::factorial(k) * Rational::factorial(t1 - k) * Rational::factorial(t2 - k) *
         Rational::factorial(t3 - k) * Rational::factorial(t4 + k) * Rational::factorial(t5 + k));
    sum += (k % 2 == 0) ? term : -term;
  }

  return Rational(J.twice() + 1) * delta * weights * sum * sum;
}

std::vector<HalfInt> excited_hyperfine_levels(HalfInt nuclear_spin) {
  if (nuclear_spin.twice() < 0) throw std::domain_error("negative nuclear spin");
  std::vector<HalfInt> out;
  const int lo = std::abs(nuclear_spin.twice() - 2);
  const int hi = nuclear_spin.twice() + 2;
  for (int t = lo; t <= hi; t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

StrengthTable::StrengthTable(HalfInt nuclear_spin, Polarization pol) : spin_(nuclear_spin), pol_(pol) {
  const int q = photon_q(pol);
  for (const HalfInt fp : excited_hyperfine_levels(nuclear_spin)) {
    for (int two_m = -nuclear_spin.twice(); two_m <= nuclear_spin.twice(); two_m += 2) {
      const HalfInt m = HalfInt::from_twice(two_m);
      const int two_me = two_m + 2 * q;
      Rational value(0);
      if (std::abs(two_me) <= fp.twice())
        value = clebsch_gordan_sq(nuclear_spin, m, HalfInt(1), HalfInt(q), fp);
      entries_[{two_m, fp.twice()}] = value;
    }
  }
}

Rational StrengthTable::entry(HalfInt m_ground, HalfInt f_excited) const {
  const auto it = entries_.find({m_ground.twice(), f_excited.twice()});
  if (it == entries_.end())
    throw std::domain_error("no such sublevel in strength table: m=" + m_ground.to_string() +
                            ", F'=" + f_excited.to_string());
  return it->second;
}

StrengthTable sigma_strength_table(HalfInt nuclear_spin, Polarization pol) {
  return StrengthTable(nuclear_spin, pol);
}

std::map<int, Rational> pi_line_strengths(HalfInt nuclear_spin) {
  if (nuclear_spin.twice() < 0) throw std::domain_error("negative nuclear spin");
  std::map<int, Rational> out;
  for (const HalfInt fp : excited_hyperfine_levels(nuclear_spin))
    out[fp.twice()] = Rational(fp.twice() + 1, 3LL * (nuclear_spin.twice() + 1));
  return out;
}

}  // namespace ybfr
