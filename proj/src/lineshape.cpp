#include "ybfr/lineshape.hpp"

#include <stdexcept>

namespace ybfr {

double dispersive(double center, double omega, double width) {
  if (width <= 0) throw std::domain_error("linewidth must be positive");
  const double d = center - omega;
  const double hw = 0.5 * width;
  return d / (d * d + hw * hw);
}

double lorentzian_absorption(double center, double omega, double width) {
  if (width <= 0) throw std::domain_error("linewidth must be positive");
  const double d = center - omega;
  const double hw = 0.5 * width;
  return hw * hw / (d * d + hw * hw);
}

double rabi_squared(double intensity, const TransitionConstants& k) {
  if (intensity < 0) throw std::domain_error("intensity must be nonnegative");
  return k.gamma * k.gamma * intensity / (2.0 * k.i_sat);
}

double scattering_rate(double intensity, double detuning, const TransitionConstants& k) {
  const double omega_sq = rabi_squared(intensity, k);
  const double hg = 0.5 * k.gamma;
  return 0.25 * k.gamma * omega_sq / (detuning * detuning + hg * hg + 0.25 * omega_sq);
}

double effective_linewidth(double natural, std::optional<double> doppler) {
  if (natural <= 0) throw std::domain_error("natural linewidth must be positive");
  if (!doppler) return natural;
  if (*doppler <= 0) throw std::domain_error("doppler width must be positive");
  return *doppler;
}

}  // namespace ybfr
