#include "ybfr/faraday.hpp"

#include <cmath>
#include <stdexcept>

#include "ybfr/lineshape.hpp"

namespace ybfr {

namespace {

const double kGammaNatural = transition_constants().gamma;

void require_spin(const GroundPopulations& pops, const IsotopeSpec& isotope) {
  if (pops.nuclear_spin != isotope.nuclear_spin)
    throw std::domain_error("populations are for spin " + pops.nuclear_spin.to_string() +
                            " but isotope " + std::to_string(isotope.mass_number) + " has spin " +
                            isotope.nuclear_spin.to_string());
}

}  // namespace

double GroundPopulations::fraction(int two_m) const {
  const auto it = fractions.find(two_m);
  return it == fractions.end() ? 0.0 : it->second;
}

double GroundPopulations::polarization() const {
  if (nuclear_spin != HalfInt::from_twice(1))
    throw std::domain_error("polarization p is defined for spin 1/2 only");
  return fraction(+1) - fraction(-1);
}

void GroundPopulations::validate() const {
  double sum = 0.0;
  for (const auto& [two_m, f] : fractions) {
    if (std::abs(two_m) > nuclear_spin.twice() || (two_m + nuclear_spin.twice()) % 2 != 0)
      throw std::domain_error("population on nonexistent sublevel 2m=" + std::to_string(two_m));
    if (f < 0.0) throw std::domain_error("negative population fraction");
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::domain_error("population fractions sum to " + std::to_string(sum) + ", not 1");
}

GroundPopulations GroundPopulations::uniform(HalfInt nuclear_spin) {
  GroundPopulations p;
  p.nuclear_spin = nuclear_spin;
  const int n = nuclear_spin.twice() + 1;
  for (int two_m = -nuclear_spin.twice(); two_m <= nuclear_spin.twice(); two_m += 2)
    p.fractions[two_m] = 1.0 / n;
  return p;
}

GroundPopulations GroundPopulations::stretched(HalfInt nuclear_spin, int sign) {
  GroundPopulations p;
  p.nuclear_spin = nuclear_spin;
  for (int two_m = -nuclear_spin.twice(); two_m <= nuclear_spin.twice(); two_m += 2)
    p.fractions[two_m] = 0.0;
  p.fractions[sign >= 0 ? nuclear_spin.twice() : -nuclear_spin.twice()] = 1.0;
  return p;
}

GroundPopulations GroundPopulations::spin_zero(double zeeman_split) {
  GroundPopulations p;
  p.nuclear_spin = HalfInt(0);
  p.fractions[0] = 1.0;
  p.zeeman_split = zeeman_split;
  return p;
}

void EnsembleGeometry::validate(const TransitionConstants& constants) const {
  if (nsigma < 0) throw std::domain_error("N sigma0 L must be nonnegative");
  if (number_density && length > 0) {
    const double derived = *number_density * constants.sigma0 * length;
    if (std::abs(derived - nsigma) > 1e-9 * std::max(std::abs(derived), std::abs(nsigma)))
      throw std::domain_error("nsigma disagrees with number_density * sigma0 * length");
  }
}

double rotation_angle(double n_plus, double n_minus, double length, double omega_abs) {
  if (length < 0) throw std::domain_error("medium length must be nonnegative");
  return omega_abs * length / (2.0 * phys::c) * (n_plus - n_minus);
}

double rotation_spin_zero(double nsigma, double detuning, double zeeman_split, double width) {
  if (nsigma < 0) throw std::domain_error("N sigma0 L must be nonnegative");
  const double g_plus = dispersive(-zeeman_split, detuning, width);
  const double g_minus = dispersive(+zeeman_split, detuning, width);
  return kGammaNatural / 8.0 * (g_plus - g_minus) * nsigma;
}

double rotation_spin_half(double p, double nsigma, double probe_offset, const IsotopeSpec& isotope,
                          double width) {
  if (std::abs(p) > 1.0 + 1e-12) throw std::domain_error("|p| must not exceed 1");
  if (nsigma < 0) throw std::domain_error("N sigma0 L must be nonnegative");
  if (isotope.nuclear_spin != HalfInt::from_twice(1))
    throw std::domain_error("rotation_spin_half needs a spin-1/2 isotope");
  const double g32 = dispersive(isotope.line_offset(HalfInt::from_twice(3)), probe_offset, width);
  const double g12 = dispersive(isotope.line_offset(HalfInt::from_twice(1)), probe_offset, width);
  return kGammaNatural / 12.0 * (g32 - g12) * p * nsigma;
}

double rotation_spin_52_stretched(double nsigma, double probe_offset, const IsotopeSpec& isotope,
                                  double width, Spin52Coefficients coefficients) {
  if (nsigma < 0) throw std::domain_error("N sigma0 L must be nonnegative");
  if (isotope.nuclear_spin != HalfInt::from_twice(5))
    throw std::domain_error("rotation_spin_52_stretched needs a spin-5/2 isotope");
  const double g72 = dispersive(isotope.line_offset(HalfInt::from_twice(7)), probe_offset, width);
  const double g52 = dispersive(isotope.line_offset(HalfInt::from_twice(5)), probe_offset, width);
  const double g32 = dispersive(isotope.line_offset(HalfInt::from_twice(3)), probe_offset, width);
  const double c52 = coefficients == Spin52Coefficients::derived ? -3.0 : -6.0;
  return kGammaNatural / 84.0 * (10.0 * g72 - 7.0 * g32 + c52 * g52) * nsigma;
}

double rotation_general(const GroundPopulations& pops, const EnsembleGeometry& geometry,
                        double probe_offset, const IsotopeSpec& isotope, double width) {
  require_spin(pops, isotope);

  if (isotope.nuclear_spin == HalfInt(0)) {
    const double detuning = probe_offset - isotope.line_offset(HalfInt(1));
    return rotation_spin_zero(geometry.nsigma, detuning, pops.zeeman_split, width);
  }

  const StrengthTable plus = sigma_strength_table(pops.nuclear_spin, Polarization::sigma_plus);
  const StrengthTable minus = sigma_strength_table(pops.nuclear_spin, Polarization::sigma_minus);

  double sum = 0.0;
  for (const HalfInt fp : isotope.excited_levels()) {
    const double g = dispersive(isotope.line_offset(fp), probe_offset, width);
    for (const auto& [two_m, f] : pops.fractions) {
      if (f == 0.0) continue;
      const HalfInt m = HalfInt::from_twice(two_m);
      const double ds = plus.entry(m, fp).to_double() - minus.entry(m, fp).to_double();
      sum += ds * g * f;
    }
  }
  return kGammaNatural / 8.0 * sum * geometry.nsigma;
}

std::pair<double, double> refractive_indices(const GroundPopulations& pops,
                                             const StrengthTable& sigma_plus,
                                             const StrengthTable& sigma_minus, double probe_offset,
                                             const IsotopeSpec& isotope,
                                             const TransitionConstants& constants, double width,
                                             double number_density) {
  require_spin(pops, isotope);
  if (number_density < 0) throw std::domain_error("number density must be nonnegative");

  const double omega_abs = constants.omega0 + probe_offset;
  const double prefactor = phys::c * constants.sigma0 * constants.gamma / (4.0 * omega_abs);

  double sum_plus = 0.0;
  double sum_minus = 0.0;
  if (isotope.nuclear_spin == HalfInt(0)) {
    const double center = isotope.line_offset(HalfInt(1));
    sum_plus = dispersive(center - pops.zeeman_split, probe_offset, width);
    sum_minus = dispersive(center + pops.zeeman_split, probe_offset, width);
  } else {
    if (sigma_plus.nuclear_spin() != pops.nuclear_spin ||
        sigma_minus.nuclear_spin() != pops.nuclear_spin)
      throw std::domain_error("strength tables do not match the population spin");
    for (const HalfInt fp : isotope.excited_levels()) {
      const double g = dispersive(isotope.line_offset(fp), probe_offset, width);
      for (const auto& [two_m, f] : pops.fractions) {
        if (f == 0.0) continue;
        const HalfInt m = HalfInt::from_twice(two_m);
        sum_plus += sigma_plus.entry(m, fp).to_double() * g * f;
        sum_minus += sigma_minus.entry(m, fp).to_double() * g * f;
      }
    }
  }
  return {1.0 + prefactor * sum_plus * number_density, 1.0 + prefactor * sum_minus * number_density};
}

double eq2_coupling(double probe_offset, const EnsembleGeometry& geometry,
                    const IsotopeSpec& isotope, const TransitionConstants& constants, double width) {
  if (geometry.probe_waist <= 0) throw std::domain_error("probe waist must be positive");
  const double per_column = rotation_spin_half(1.0, 1.0, probe_offset, isotope, width);
  return per_column * 2.0 * constants.sigma0 /
         (std::numbers::pi * geometry.probe_waist * geometry.probe_waist);
}

double zeeman_split_per_tesla() { return phys::bohr_magneton / phys::hbar; }

}  // namespace ybfr
