#include "ybfr/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ybfr/angular.hpp"
#include "ybfr/lineshape.hpp"

namespace ybfr {

namespace {

constexpr double kStepTol = 1e-8;
constexpr int kMaxIterations = 100;
constexpr double kJacobianRelStep = 1e-6;

double sum_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

std::vector<double> residual(const Model& model, std::span<const double> p,
                             std::span<const double> data) {
  std::vector<double> r = model(p);
  if (r.size() != data.size())
    throw std::domain_error("model output length does not match the data length");
  for (size_t i = 0; i < r.size(); ++i) r[i] -= data[i];
  return r;
}

// Columns of the m x n Jacobian by central differences.
std::vector<std::vector<double>> jacobian(const Model& model, const std::vector<double>& p,
                                          size_t m) {
  std::vector<std::vector<double>> cols(p.size());
  std::vector<double> work = p;
  for (size_t j = 0; j < p.size(); ++j) {
    const double h = kJacobianRelStep * (p[j] != 0.0 ? std::abs(p[j]) : 1.0);
    work[j] = p[j] + h;
    std::vector<double> hi = model(work);
    work[j] = p[j] - h;
    std::vector<double> lo = model(work);
    work[j] = p[j];
    if (hi.size() != m || lo.size() != m)
      throw std::domain_error("model output length changed during differentiation");
    cols[j].resize(m);
    for (size_t i = 0; i < m; ++i) cols[j][i] = (hi[i] - lo[i]) / (2.0 * h);
  }
  return cols;
}

// Solve a (small, dense, symmetric) system by Gaussian elimination with
// partial pivoting; returns false when effectively singular.
bool solve(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

void project(std::vector<double>& p, const std::optional<Bounds>& bounds) {
  if (!bounds) return;
  for (size_t i = 0; i < p.size(); ++i) p[i] = std::clamp(p[i], bounds->lower[i], bounds->upper[i]);
}

}  // namespace

std::vector<double> FitResult::standard_errors() const {
  std::vector<double> se(covariance.size(), 0.0);
  for (size_t i = 0; i < covariance.size(); ++i)
    se[i] = covariance[i][i] > 0 ? std::sqrt(covariance[i][i]) : 0.0;
  return se;
}

FitResult least_squares(const Model& model, std::vector<double> initial,
                        std::span<const double> data, const std::optional<Bounds>& bounds) {
  const size_t np = initial.size();
  if (np == 0) throw std::domain_error("no parameters to fit");
  if (data.size() < np)
    throw std::domain_error("need at least as many data points as parameters");
  if (bounds && (bounds->lower.size() != np || bounds->upper.size() != np))
    throw std::domain_error("bounds do not match the parameter count");
  project(initial, bounds);

  FitResult out;
  std::vector<double> p = std::move(initial);
  std::vector<double> r = residual(model, p, data);
  double ssr = sum_sq(r);
  out.history.push_back(std::sqrt(ssr));

  double lambda = -1.0;  // set from the first normal matrix
  const size_t m = data.size();

  for (int iter = 0; iter < kMaxIterations && !out.converged; ++iter) {
    const auto jcols = jacobian(model, p, m);

    // Work in per-parameter relative units (column a scaled by |p_a|) so the
    // isotropic damping term treats all parameters alike regardless of units.
    std::vector<double> scale(np);
    for (size_t a = 0; a < np; ++a) scale[a] = p[a] != 0.0 ? std::abs(p[a]) : 1.0;

    // normal matrix and gradient in scaled space
    std::vector<std::vector<double>> normal(np, std::vector<double>(np, 0.0));
    std::vector<double> grad(np, 0.0);
    for (size_t a = 0; a < np; ++a) {
      for (size_t b = a; b < np; ++b) {
        double s = 0.0;
        for (size_t i = 0; i < m; ++i) s += jcols[a][i] * jcols[b][i];
        normal[a][b] = normal[b][a] = s * scale[a] * scale[b];
      }
      double s = 0.0;
      for (size_t i = 0; i < m; ++i) s += jcols[a][i] * r[i];
      grad[a] = s * scale[a];
    }

    double max_diag = 0.0;
    for (size_t a = 0; a < np; ++a) max_diag = std::max(max_diag, normal[a][a]);
    if (lambda < 0.0) lambda = 1e-3 * std::max(max_diag, 1e-300);
    const double lambda_max = std::max(max_diag, 1.0) * 1e12;

    // inner damping loop: retry with stronger damping until a step helps
    bool accepted = false;
    while (!accepted) {
      auto damped = normal;
      for (size_t a = 0; a < np; ++a) damped[a][a] += lambda;
      std::vector<double> neg_grad(np);
      for (size_t a = 0; a < np; ++a) neg_grad[a] = -grad[a];

      std::vector<double> delta;
      const bool ok = solve(damped, neg_grad, delta);
      if (ok) {
        std::vector<double> trial = p;
        for (size_t a = 0; a < np; ++a) trial[a] += delta[a] * scale[a];
        project(trial, bounds);
        const std::vector<double> tr = residual(model, trial, data);
        const double tssr = sum_sq(tr);
        if (std::isfinite(tssr) && tssr <= ssr) {
          bool small_step = true;
          for (size_t a = 0; a < np; ++a) {
            const double dp = std::abs(trial[a] - p[a]);
            if (dp > kStepTol * (std::abs(trial[a]) + kStepTol)) small_step = false;
          }
          p = std::move(trial);
          r = tr;
          ssr = tssr;
          ++out.iterations;
          out.history.push_back(std::sqrt(ssr));
          lambda = std::max(lambda / 10.0, 1e-300);
          accepted = true;
          if (small_step) out.converged = true;
          break;
        }
      }
      lambda *= 10.0;
      if (lambda > lambda_max) break;  // singular / no useful step at maximum damping
    }
    if (!accepted) break;  // non-convergence, reported below
  }

  out.parameters = p;
  out.residual_norm = std::sqrt(ssr);

  // covariance from the final Jacobian: ssr/(m-n) * (J^T J)^-1
  const auto jcols = jacobian(model, p, m);
  std::vector<std::vector<double>> normal(np, std::vector<double>(np, 0.0));
  for (size_t a = 0; a < np; ++a)
    for (size_t b = a; b < np; ++b) {
      double s = 0.0;
      for (size_t i = 0; i < m; ++i) s += jcols[a][i] * jcols[b][i];
      normal[a][b] = normal[b][a] = s;
    }
  const double variance = ssr / std::max<size_t>(1, m - np);
  std::vector<std::vector<double>> cov(np, std::vector<double>(np, 0.0));
  bool invertible = true;
  for (size_t c = 0; c < np && invertible; ++c) {
    std::vector<double> e(np, 0.0);
    e[c] = 1.0;
    std::vector<double> col;
    invertible = solve(normal, e, col);
    if (invertible)
      for (size_t rji = 0; rji < np; ++rji) cov[rji][c] = col[rji] * variance;
  }
  if (invertible) out.covariance = std::move(cov);
  return out;
}

double absorption_model_od(double detuning_mhz, const IsotopeTable& table,
                           std::span<const double> columns, double gamma_star_mhz,
                           double offset_mhz) {
  double od = 0.0;
  const auto& isotopes = table.isotopes();
  for (size_t i = 0; i < isotopes.size(); ++i) {
    const auto& iso = isotopes[i];
    if (columns[i] == 0.0) continue;
    const auto weights = pi_line_strengths(iso.nuclear_spin);
    for (const auto& [two_fp, w] : weights) {
      const double center = iso.shift_mhz + iso.hyperfine_mhz.at(two_fp) + offset_mhz;
      const double hw = 0.5 * gamma_star_mhz;
      const double d = center - detuning_mhz;
      od += columns[i] * w.to_double() * hw * hw / (d * d + hw * hw);
    }
  }
  return od;
}

AbsorptionFit fit_absorption_spectrum(std::span<const double> detuning_mhz,
                                      std::span<const double> od, const IsotopeTable& table,
                                      const AbsorptionInitial& initial) {
  if (detuning_mhz.size() != od.size()) throw std::domain_error("x and y lengths differ");
  const auto& isotopes = table.isotopes();

  // one scale per spin-0 group / per spin-nonzero isotope
  std::vector<int> group_of(isotopes.size(), -1);
  std::vector<std::string> names{"gamma_star_MHz", "offset_MHz"};
  std::vector<double> scales;
  int spin0_group = -1;
  double spin0_abundance = 0.0;
  for (size_t i = 0; i < isotopes.size(); ++i)
    if (isotopes[i].nuclear_spin.twice() == 0) spin0_abundance += isotopes[i].abundance;
  for (size_t i = 0; i < isotopes.size(); ++i) {
    const auto& iso = isotopes[i];
    if (iso.nuclear_spin.twice() == 0) {
      if (spin0_group < 0) {
        spin0_group = static_cast<int>(scales.size());
        scales.push_back(initial.scale * spin0_abundance);
        names.push_back("nsigma_spin0");
      }
      group_of[i] = spin0_group;
    } else {
      group_of[i] = static_cast<int>(scales.size());
      scales.push_back(initial.scale * iso.abundance);
      names.push_back("nsigma_" + std::to_string(iso.mass_number));
    }
  }
  const size_t n_params = 2 + scales.size();
  if (od.size() < 3 * n_params)
    throw std::domain_error("need at least 3 data points per free parameter");

  auto columns_from = [&, spin0_abundance](std::span<const double> p) {
    std::vector<double> cols(isotopes.size(), 0.0);
    for (size_t i = 0; i < isotopes.size(); ++i) {
      const double s = p[2 + group_of[i]];
      cols[i] = isotopes[i].nuclear_spin.twice() == 0
                    ? s * isotopes[i].abundance / spin0_abundance
                    : s;
    }
    return cols;
  };

  const Model model = [&, columns_from](std::span<const double> p) {
    const auto cols = columns_from(p);
    std::vector<double> out(detuning_mhz.size());
    for (size_t i = 0; i < detuning_mhz.size(); ++i)
      out[i] = absorption_model_od(detuning_mhz[i], table, cols, p[0], p[1]);
    return out;
  };

  std::vector<double> p0{initial.gamma_star_mhz, initial.offset_mhz};
  p0.insert(p0.end(), scales.begin(), scales.end());

  Bounds bounds;
  bounds.lower.assign(p0.size(), -std::numeric_limits<double>::infinity());
  bounds.upper.assign(p0.size(), std::numeric_limits<double>::infinity());
  bounds.lower[0] = 1e-3;  // the width stays positive
  for (size_t i = 2; i < p0.size(); ++i) bounds.lower[i] = 0.0;

  AbsorptionFit out;
  out.fit = least_squares(model, p0, od, bounds);
  out.parameter_names = names;
  out.gamma_star_mhz = out.fit.parameters[0];
  out.offset_mhz = out.fit.parameters[1];
  out.table = &table;
  out.group_of = group_of;
  return out;
}

double AbsorptionFit::nsigma(int mass_number) const {
  if (!table) throw std::logic_error("fit not attached to a table");
  const auto& isotopes = table->isotopes();
  double spin0_abundance = 0.0;
  for (const auto& iso : isotopes)
    if (iso.nuclear_spin.twice() == 0) spin0_abundance += iso.abundance;
  for (size_t i = 0; i < isotopes.size(); ++i) {
    if (isotopes[i].mass_number != mass_number) continue;
    const double s = fit.parameters[2 + group_of[i]];
    return isotopes[i].nuclear_spin.twice() == 0 ? s * isotopes[i].abundance / spin0_abundance : s;
  }
  throw std::domain_error("isotope not in the fitted table");
}

FitResult fit_exponential(std::span<const double> t, std::span<const double> y, double initial_d,
                          double initial_tau) {
  if (t.size() != y.size()) throw std::domain_error("x and y lengths differ");
  if (t.size() < 4) throw std::domain_error("need at least 4 points for the exponential fit");
  std::vector<double> ts(t.begin(), t.end());
  const Model model = [ts](std::span<const double> p) {
    std::vector<double> out(ts.size());
    for (size_t i = 0; i < ts.size(); ++i) out[i] = p[0] * std::exp(-ts[i] / p[1]);
    return out;
  };
  // tau is boxed so degenerate (constant) data parks at the bound instead of
  // running away; any physical decay sits far inside it
  const double span = std::abs(ts.back() - ts.front());
  const double inf = std::numeric_limits<double>::infinity();
  Bounds bounds{{-inf, 1e-9 * span}, {inf, 1e6 * span}};
  return least_squares(model, {initial_d, initial_tau}, y, bounds);
}

double damped_sinusoid(double t, const SinusoidParams& p) {
  return p.amplitude * std::exp(-t / p.tau) * std::sin(p.omega * t + p.theta);
}

SinusoidParams sinusoid_initial_guess(std::span<const double> t, std::span<const double> phi) {
  if (t.size() != phi.size() || t.size() < 8)
    throw std::domain_error("need a sampled series to initialize the sinusoid");

  std::vector<double> crossings;
  std::vector<bool> rising;
  for (size_t i = 1; i < t.size(); ++i) {
    if (phi[i - 1] == 0.0) continue;
    if ((phi[i - 1] < 0) != (phi[i] < 0) && phi[i] != 0.0) {
      const double f = phi[i - 1] / (phi[i - 1] - phi[i]);
      crossings.push_back(t[i - 1] + f * (t[i] - t[i - 1]));
      rising.push_back(phi[i] > phi[i - 1]);
    }
  }
  if (crossings.size() < 3)
    throw std::domain_error("too few zero crossings to estimate a frequency");

  std::vector<double> spacing;
  for (size_t i = 1; i < crossings.size(); ++i) spacing.push_back(crossings[i] - crossings[i - 1]);
  std::nth_element(spacing.begin(), spacing.begin() + spacing.size() / 2, spacing.end());
  const double median = spacing[spacing.size() / 2];

  SinusoidParams p;
  p.omega = std::numbers::pi / median;
  for (size_t i = 0; i < phi.size(); ++i) p.amplitude = std::max(p.amplitude, std::abs(phi[i]));
  double theta = (rising.front() ? 0.0 : std::numbers::pi) - p.omega * crossings.front();
  theta = std::remainder(theta, 2.0 * std::numbers::pi);
  p.theta = theta;
  p.tau = 0.5 * (t.back() - t.front());
  return p;
}

FitResult fit_damped_sinusoid(std::span<const double> t, std::span<const double> phi,
                              const SinusoidParams& initial, bool fix_omega) {
  if (t.size() != phi.size()) throw std::domain_error("x and y lengths differ");
  if (t.size() < 5) throw std::domain_error("too few points for a damped sinusoid");
  const double span = t.back() - t.front();
  if (span * initial.omega < 2.0 * (2.0 * std::numbers::pi) - 1e-9)
    throw std::domain_error("series must span at least two oscillation periods");

  std::vector<double> ts(t.begin(), t.end());
  if (fix_omega) {
    const double omega = initial.omega;
    const Model model = [ts, omega](std::span<const double> p) {
      std::vector<double> out(ts.size());
      const SinusoidParams sp{p[0], p[1], p[2], omega};
      for (size_t i = 0; i < ts.size(); ++i) out[i] = damped_sinusoid(ts[i], sp);
      return out;
    };
    FitResult r = least_squares(model, {initial.amplitude, initial.tau, initial.theta}, phi);
    r.parameters.push_back(omega);
    return r;
  }
  const Model model = [ts](std::span<const double> p) {
    std::vector<double> out(ts.size());
    const SinusoidParams sp{p[0], p[1], p[2], p[3]};
    for (size_t i = 0; i < ts.size(); ++i) out[i] = damped_sinusoid(ts[i], sp);
    return out;
  };
  return least_squares(model, {initial.amplitude, initial.tau, initial.theta, initial.omega}, phi);
}

std::vector<double> with_gaussian_noise(std::span<const double> values, double sigma,
                                        unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> out(values.begin(), values.end());
  for (double& v : out) v += noise(rng);
  return out;
}

}  // namespace ybfr
