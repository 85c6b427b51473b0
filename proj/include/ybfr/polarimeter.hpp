#pragma once

#include <random>

#include "ybfr/rational.hpp"

namespace ybfr {

// Ideal balanced-polarimeter observables: input/output powers, the two
// detector ports, the rotation angle and the optical depth.
struct PolarimeterReading {
  double p_in = 0.0;     // W
  double p_out = 0.0;    // W
  double p_plus = 0.0;   // W
  double p_minus = 0.0;  // W
  double rotation = 0.0;       // rad
  double optical_depth = 0.0;  // -ln(p_out/p_in)

  double difference() const { return p_plus - p_minus; }  // p_out * sin(2 phi)
};

// Applies scalar absorption then the rotation:
//   p_out = p_in exp(-od),  p_pm = p_out (1 +- sin 2 phi)/2.
PolarimeterReading read(double p_in, double absorption_od, double phi);

// Same reading with additive Gaussian noise of standard deviation sigma on
// each port (clamped at zero power); for fit-recovery studies only.
PolarimeterReading read_noisy(double p_in, double absorption_od, double phi, double sigma,
                              std::mt19937_64& rng);

// -ln(p_out/p_in). p_out > p_in is rejected: there is no gain in this system.
double optical_depth(double p_in, double p_out);

// N sigma0 L from a measured on-resonance optical depth and the relative
// transition probability of the probed line: od / line_factor.
double column_from_depth(double od, const Rational& line_factor);
double column_from_depth(double od, double line_factor);

}  // namespace ybfr
