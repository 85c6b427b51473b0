#pragma once

#include <optional>
#include <vector>

#include "ybfr/faraday.hpp"

namespace ybfr {

// Circularly polarized pump drive on the 1S0(F=I) -> 1P1(F'=I) line.
struct PumpConfig {
  Polarization polarization = Polarization::sigma_plus;  // sigma+ or sigma-
  double intensity = 0.0;   // W/m^2
  double detuning = 0.0;    // rad/s from the F'=I line
  double duration = 0.0;    // s
  std::optional<double> time_step;  // s; default 0.01 / max absorption rate

  void validate() const;
};

struct PumpSample {
  double time = 0.0;  // s
  GroundPopulations populations;
};

struct PumpTrajectory {
  std::vector<PumpSample> samples;
  int clamp_events = 0;  // integrator undershoots clamped back to zero

  const GroundPopulations& final_populations() const { return samples.back().populations; }
};

// Rate-equation optical pumping with the excited state adiabatically
// eliminated: absorption at rate r_sc * s_q(m, F'=I) followed by spontaneous
// branching with the completeness-normalized coupling ratios. Population is
// conserved at every step (fixed-step RK4).
PumpTrajectory simulate_pumping(const GroundPopulations& initial, const PumpConfig& config,
                                const IsotopeSpec& isotope, const TransitionConstants& constants);

struct DepolarizationResult {
  GroundPopulations populations;
  double scattering_rate = 0.0;   // two-level rate at the probe detuning, 1/s
  double scattering_count = 0.0;  // rate * exposure
};

// Linear probe light decomposed as an equal incoherent sigma+/sigma- mixture,
// run through the same rate equations on the F'=I line. probe_detuning is
// measured from the F'=I line (rad/s).
DepolarizationResult probe_depolarization(const GroundPopulations& initial, double probe_intensity,
                                          double probe_detuning, double exposure,
                                          const IsotopeSpec& isotope,
                                          const TransitionConstants& constants);

// The rate matrix A with dN/dt = A N for a given drive; exposed so steady
// states can be checked against the integrator. Row/column index i maps to
// 2m = 2i - 2I. Weights are the intensity fractions per polarization.
// detuning is measured from the F'=I line. With all_lines the drive couples
// to every hyperfine manifold at its own detuning (a probe near any line
// scatters off that line); otherwise only F'=I is driven, as in pumping.
std::vector<std::vector<double>> pump_rate_matrix(
    const IsotopeSpec& isotope, const TransitionConstants& constants,
    const std::vector<std::pair<Polarization, double>>& drive, double intensity, double detuning,
    bool all_lines = false);

}  // namespace ybfr
