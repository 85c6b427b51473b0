#include "ybfr/pumping.hpp"

#include <cmath>
#include <stdexcept>

#include "ybfr/lineshape.hpp"

namespace ybfr {

void PumpConfig::validate() const {
  if (polarization == Polarization::pi)
    throw std::domain_error("pump polarization must be circular");
  if (intensity < 0) throw std::domain_error("pump intensity must be nonnegative");
  if (duration < 0) throw std::domain_error("pump duration must be nonnegative");
  if (time_step) {
    if (*time_step <= 0) throw std::domain_error("time step must be positive");
    if (duration > 0 && *time_step > duration)
      throw std::domain_error("time step exceeds the pump duration");
  }
}

namespace {

int state_count(const IsotopeSpec& iso) { return iso.nuclear_spin.twice() + 1; }
int index_of(int two_m, const IsotopeSpec& iso) { return (two_m + iso.nuclear_spin.twice()) / 2; }
int two_m_of(int index, const IsotopeSpec& iso) { return 2 * index - iso.nuclear_spin.twice(); }

std::vector<double> to_vector(const GroundPopulations& pops, const IsotopeSpec& iso) {
  std::vector<double> n(state_count(iso), 0.0);
  for (const auto& [two_m, f] : pops.fractions) n[index_of(two_m, iso)] = f;
  return n;
}

GroundPopulations to_populations(const std::vector<double>& n, const IsotopeSpec& iso) {
  GroundPopulations p;
  p.nuclear_spin = iso.nuclear_spin;
  for (int i = 0; i < static_cast<int>(n.size()); ++i) p.fractions[two_m_of(i, iso)] = n[i];
  return p;
}

}  // namespace

std::vector<std::vector<double>> pump_rate_matrix(
    const IsotopeSpec& isotope, const TransitionConstants& constants,
    const std::vector<std::pair<Polarization, double>>& drive, double intensity, double detuning,
    bool all_lines) {
  const HalfInt spin = isotope.nuclear_spin;
  if (spin.twice() == 0) throw std::domain_error("spin-0 isotope: nothing to pump");
  const int n = state_count(isotope);

  std::vector<HalfInt> lines;
  if (all_lines)
    lines = isotope.excited_levels();
  else
    lines.push_back(spin);  // the F' = I manifold

  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const HalfInt fp : lines) {
    // detuning is given from the F'=I line; shift it to this manifold
    const double line_detuning =
        detuning - (isotope.line_offset(fp) - isotope.line_offset(spin));
    for (const auto& [pol, weight] : drive) {
      const int q = photon_q(pol);
      const double r0 = weight * scattering_rate(intensity, line_detuning, constants);
      for (int i = 0; i < n; ++i) {
        const int two_m = two_m_of(i, isotope);
        const int two_me = two_m + 2 * q;
        if (std::abs(two_me) > fp.twice()) continue;  // dark to this polarization
        const double rate =
            r0 * clebsch_gordan_sq(spin, HalfInt::from_twice(two_m), HalfInt(1), HalfInt(q), fp)
                     .to_double();
        if (rate == 0.0) continue;
        a[i][i] -= rate;
        // spontaneous branching out of the excited |F', m_e> sublevel
        for (int qp = -1; qp <= 1; ++qp) {
          const int two_md = two_me - 2 * qp;
          if (std::abs(two_md) > spin.twice()) continue;
          const double branch =
              clebsch_gordan_sq(spin, HalfInt::from_twice(two_md), HalfInt(1), HalfInt(qp), fp)
                  .to_double();
          a[index_of(two_md, isotope)][i] += rate * branch;
        }
      }
    }
  }
  return a;
}

namespace {

std::vector<double> mat_vec(const std::vector<std::vector<double>>& a, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
  return y;
}

// One RK4 step of dN/dt = A N.
std::vector<double> rk4_step(const std::vector<std::vector<double>>& a, std::vector<double> n,
                             double dt) {
  const auto k1 = mat_vec(a, n);
  std::vector<double> tmp(n.size());
  for (size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + 0.5 * dt * k1[i];
  const auto k2 = mat_vec(a, tmp);
  for (size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + 0.5 * dt * k2[i];
  const auto k3 = mat_vec(a, tmp);
  for (size_t i = 0; i < n.size(); ++i) tmp[i] = n[i] + dt * k3[i];
  const auto k4 = mat_vec(a, tmp);
  for (size_t i = 0; i < n.size(); ++i)
    n[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return n;
}

PumpTrajectory integrate(const std::vector<std::vector<double>>& a, const GroundPopulations& initial,
                         const IsotopeSpec& isotope, double duration,
                         std::optional<double> time_step) {
  initial.validate();
  const int n = state_count(isotope);

  double max_rate = 0.0;
  for (int i = 0; i < n; ++i) max_rate = std::max(max_rate, -a[i][i]);

  PumpTrajectory traj;
  traj.samples.push_back({0.0, initial});
  if (duration <= 0.0) return traj;

  double dt = time_step ? *time_step : (max_rate > 0 ? 0.01 / max_rate : duration);
  const long steps = std::max(1L, std::lround(std::ceil(duration / dt - 1e-9)));
  dt = duration / static_cast<double>(steps);

  std::vector<double> state = to_vector(initial, isotope);
  for (long s = 1; s <= steps; ++s) {
    state = rk4_step(a, state, dt);
    for (double& f : state) {
      if (f < 0.0) {
        if (f < -1e-12) ++traj.clamp_events;
        f = 0.0;
      }
    }
    traj.samples.push_back({static_cast<double>(s) * dt, to_populations(state, isotope)});
  }
  return traj;
}

}  // namespace

PumpTrajectory simulate_pumping(const GroundPopulations& initial, const PumpConfig& config,
                                const IsotopeSpec& isotope, const TransitionConstants& constants) {
  config.validate();
  if (isotope.nuclear_spin.twice() == 0)
    throw std::domain_error("spin-0 isotope: nothing to pump");
  if (initial.nuclear_spin != isotope.nuclear_spin)
    throw std::domain_error("initial populations do not match the isotope spin");

  const auto a = pump_rate_matrix(isotope, constants, {{config.polarization, 1.0}},
                                  config.intensity, config.detuning);
  return integrate(a, initial, isotope, config.duration, config.time_step);
}

DepolarizationResult probe_depolarization(const GroundPopulations& initial, double probe_intensity,
                                          double probe_detuning, double exposure,
                                          const IsotopeSpec& isotope,
                                          const TransitionConstants& constants) {
  if (exposure < 0) throw std::domain_error("exposure must be nonnegative");
  if (initial.nuclear_spin != isotope.nuclear_spin)
    throw std::domain_error("initial populations do not match the isotope spin");

  DepolarizationResult out;
  out.scattering_rate = scattering_rate(probe_intensity, probe_detuning, constants);
  out.scattering_count = out.scattering_rate * exposure;

  if (isotope.nuclear_spin.twice() == 0 || exposure == 0.0) {
    out.populations = initial;
    return out;
  }

  const auto a = pump_rate_matrix(
      isotope, constants,
      {{Polarization::sigma_plus, 0.5}, {Polarization::sigma_minus, 0.5}}, probe_intensity,
      probe_detuning, /*all_lines=*/true);
  out.populations = integrate(a, initial, isotope, exposure, std::nullopt).final_populations();
  return out;
}

}  // namespace ybfr
