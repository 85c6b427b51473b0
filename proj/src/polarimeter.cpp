#include "ybfr/polarimeter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ybfr {

PolarimeterReading read(double p_in, double absorption_od, double phi) {
  if (p_in < 0) throw std::domain_error("input power must be nonnegative");
  if (absorption_od < 0) throw std::domain_error("optical depth must be nonnegative");
  PolarimeterReading r;
  r.p_in = p_in;
  r.p_out = p_in * std::exp(-absorption_od);
  const double s = std::sin(2.0 * phi);
  r.p_plus = 0.5 * r.p_out * (1.0 + s);
  r.p_minus = 0.5 * r.p_out * (1.0 - s);
  r.rotation = phi;
  r.optical_depth = absorption_od;
  return r;
}

PolarimeterReading read_noisy(double p_in, double absorption_od, double phi, double sigma,
                              std::mt19937_64& rng) {
  PolarimeterReading r = read(p_in, absorption_od, phi);
  std::normal_distribution<double> noise(0.0, sigma);
  r.p_plus = std::max(0.0, r.p_plus + noise(rng));
  r.p_minus = std::max(0.0, r.p_minus + noise(rng));
  r.p_out = r.p_plus + r.p_minus;
  r.optical_depth = r.p_out > 0 ? -std::log(r.p_out / r.p_in) : std::numeric_limits<double>::infinity();
  return r;
}

double optical_depth(double p_in, double p_out) {
  if (p_in <= 0) throw std::domain_error("input power must be positive");
  if (p_out <= 0) throw std::domain_error("output power must be positive");
  if (p_out > p_in) throw std::domain_error("output power exceeds input power (gain is unphysical)");
  return -std::log(p_out / p_in);
}

double column_from_depth(double od, const Rational& line_factor) {
  return column_from_depth(od, line_factor.to_double());
}

double column_from_depth(double od, double line_factor) {
  if (od < 0) throw std::domain_error("optical depth must be nonnegative");
  if (!(line_factor > 0.0) || line_factor > 1.0)
    throw std::domain_error("line factor must lie in (0, 1]");
  return od / line_factor;
}

}  // namespace ybfr
