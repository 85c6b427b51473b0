#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ybfr/angular.hpp"
#include "ybfr/atomdata.hpp"

namespace ybfr {

// Ground-state sublevel populations of one isotope. For spin-0 there is a
// single ground state and the Zeeman splitting of the excited m_J' = +-1
// sublevels takes over as the relevant degree of freedom.
struct GroundPopulations {
  HalfInt nuclear_spin;
  std::map<int, double> fractions;  // keyed by 2*m_I; nonnegative, sum to 1
  double zeeman_split = 0.0;        // rad/s; used only for spin 0

  double fraction(int two_m) const;
  // f(+1/2) - f(-1/2); defined for spin 1/2 only.
  double polarization() const;
  void validate() const;

  static GroundPopulations uniform(HalfInt nuclear_spin);
  static GroundPopulations stretched(HalfInt nuclear_spin, int sign = +1);
  static GroundPopulations spin_zero(double zeeman_split = 0.0);
};

// Column quantities of the probed ensemble. nsigma is the dimensionless
// N sigma0 L that scales every rotation formula.
struct EnsembleGeometry {
  double nsigma = 0.0;       // N sigma0 L
  double length = 0.0;       // m
  double probe_waist = 0.0;  // m
  std::optional<double> number_density;  // 1/m^3

  // Checks nsigma >= 0 and, when a density is present, nsigma = N sigma0 L
  // within 1e-9 relative.
  void validate(const TransitionConstants& constants) const;
};

// Two coefficient sets for the stretched-state spin-5/2 rotation. "derived"
// uses (10, -7, -3)/84, obtained from the exact coupling algebra (the three
// coefficients sum to zero, so the rotation vanishes when the hyperfine levels
// are degenerate). "quoted" keeps the (10, -7, -6)/84 variant found in the
// literature, for comparison output only; its coefficients do not cancel.
enum class Spin52Coefficients { derived, quoted };

// phi = (omega L / 2c)(n+ - n-). Positive phi means n+ > n- (sigma+ delayed);
// this one convention fixes the orientation of every spectrum produced here.
double rotation_angle(double n_plus, double n_minus, double length, double omega_abs);

// Diamagnetic rotation of a spin-0 isotope,
//   phi = (gamma/8) (g_{+1} - g_{-1}) N sigma0 L,
// with the sigma+ resonance at -zeeman_split and the sigma- resonance at
// +zeeman_split relative to the unsplit line. `detuning` is the probe offset
// from the unsplit line center (rad/s), `width` the dispersive linewidth.
double rotation_spin_zero(double nsigma, double detuning, double zeeman_split, double width);

// Paramagnetic rotation of a spin-1/2 isotope,
//   phi = (gamma/12) (g^(3/2) - g^(1/2)) p N sigma0 L.
// probe_offset is measured on the shared axis (relative to the reference
// line); the isotope carries its own shift and hyperfine offsets.
double rotation_spin_half(double p, double nsigma, double probe_offset,
                          const IsotopeSpec& isotope, double width);

// Stretched-state (m_I = +5/2) rotation of a spin-5/2 isotope,
//   phi = (gamma/84) (10 g^(7/2) - 7 g^(3/2) - 3 g^(5/2)) N sigma0 L
// for the derived coefficients; see Spin52Coefficients for the quoted variant.
double rotation_spin_52_stretched(double nsigma, double probe_offset, const IsotopeSpec& isotope,
                                  double width,
                                  Spin52Coefficients coefficients = Spin52Coefficients::derived);

// Population-weighted rotation for any spin,
//   phi = (gamma N sigma0 L / 8) sum_{m,F'} [s+(m,F') - s-(m,F')] g^(F') f(m).
// Reduces to the closed forms above for p = 1 spin-1/2 and the stretched
// spin-5/2 state, and to the Zeeman form for spin 0.
double rotation_general(const GroundPopulations& pops, const EnsembleGeometry& geometry,
                        double probe_offset, const IsotopeSpec& isotope, double width);

// Refractive indices seen by the two circular components,
//   n_pm = 1 + (c sigma0 gamma / 4 omega) sum_{m,F'} s_pm(m,F') g^(F') N_m,
// N_m = number_density * fraction(m). Feeding the result to rotation_angle at
// the same absolute frequency reproduces rotation_general exactly.
std::pair<double, double> refractive_indices(const GroundPopulations& pops,
                                             const StrengthTable& sigma_plus,
                                             const StrengthTable& sigma_minus, double probe_offset,
                                             const IsotopeSpec& isotope,
                                             const TransitionConstants& constants, double width,
                                             double number_density);

// Rotation per unit spin, phi / S_z with S_z = p N pi w^2 L / 2:
//   rotation_spin_half(p=1, nsigma=1) * 2 sigma0 / (pi w^2).
double eq2_coupling(double probe_offset, const EnsembleGeometry& geometry,
                    const IsotopeSpec& isotope, const TransitionConstants& constants, double width);

// Zeeman splitting of the excited 1P1 sublevels per unit field (one Bohr
// magneton): mu_B / hbar, about 2pi x 14.0 GHz/T. Standard physics input, not
// a fitted quantity.
double zeeman_split_per_tesla();

}  // namespace ybfr
