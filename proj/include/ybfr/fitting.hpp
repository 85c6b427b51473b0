#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybfr/atomdata.hpp"

namespace ybfr {

struct Bounds {
  std::vector<double> lower;  // -inf for unbounded
  std::vector<double> upper;  // +inf for unbounded
};

struct FitResult {
  std::vector<double> parameters;
  double residual_norm = 0.0;  // 2-norm of the final residual vector
  int iterations = 0;          // accepted steps
  bool converged = false;      // relative step fell below 1e-8
  std::vector<std::vector<double>> covariance;  // empty when the final normal matrix is singular
  std::vector<double> history;                  // residual norm after each accepted step

  std::vector<double> standard_errors() const;  // sqrt of the covariance diagonal
};

using Model = std::function<std::vector<double>(std::span<const double>)>;

// Damped Gauss-Newton least squares. The Jacobian is taken by central finite
// differences with a per-parameter relative step of 1e-6; damping multiplies
// by 10 on a rejected step and divides by 10 on an accepted one, starting at
// 1e-3 times the largest diagonal of the normal matrix. Terminates when the
// relative step drops below 1e-8 or after 100 iterations. Singular normal
// equations at maximum damping are reported as non-convergence, not thrown.
FitResult least_squares(const Model& model, std::vector<double> initial,
                        std::span<const double> data, const std::optional<Bounds>& bounds = {});

// Multi-line beam absorption model: one width and frequency offset shared by
// all lines, one column scale per spin-0 group / spin-nonzero isotope, line
// positions and relative strengths fixed by the isotope table.
struct AbsorptionInitial {
  double gamma_star_mhz = 57.0;  // effective linewidth
  double scale = 1.0;            // overall column scale: nsigma_i = scale * abundance_i
  double offset_mhz = 0.0;       // frequency axis offset
};

struct AbsorptionFit {
  FitResult fit;
  std::vector<std::string> parameter_names;
  double gamma_star_mhz = 0.0;
  double offset_mhz = 0.0;
  // Nsigma0L of one isotope implied by the fitted group scales.
  double nsigma(int mass_number) const;

  const IsotopeTable* table = nullptr;
  std::vector<int> group_of;  // per isotope: index into the scale parameters
};

AbsorptionFit fit_absorption_spectrum(std::span<const double> detuning_mhz,
                                      std::span<const double> od, const IsotopeTable& table,
                                      const AbsorptionInitial& initial);

// Model evaluator shared by the fit and by spectrum generation in tests.
double absorption_model_od(double detuning_mhz, const IsotopeTable& table,
                           std::span<const double> columns /* per isotope, table order */,
                           double gamma_star_mhz, double offset_mhz);

// y = d exp(-t / tau)
FitResult fit_exponential(std::span<const double> t, std::span<const double> y, double initial_d,
                          double initial_tau);

// phi = amplitude exp(-t / tau) sin(omega t + theta)
struct SinusoidParams {
  double amplitude = 0.0;
  double tau = 0.0;
  double theta = 0.0;
  double omega = 0.0;  // rad/s
};

double damped_sinusoid(double t, const SinusoidParams& p);

// Initial guess from the data: omega from the median zero-crossing spacing,
// amplitude from max |phi|, theta from the first crossing.
SinusoidParams sinusoid_initial_guess(std::span<const double> t, std::span<const double> phi);

// fix_omega pins the frequency at its initial value instead of fitting it.
FitResult fit_damped_sinusoid(std::span<const double> t, std::span<const double> phi,
                              const SinusoidParams& initial, bool fix_omega = false);

// Seeded additive Gaussian noise for synthetic-recovery studies.
std::vector<double> with_gaussian_noise(std::span<const double> values, double sigma,
                                        unsigned long long seed);

}  // namespace ybfr
