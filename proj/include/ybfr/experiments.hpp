#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ybfr/faraday.hpp"
#include "ybfr/pumping.hpp"

namespace ybfr {

// ---------------------------------------------------------------- atomic beam

struct PumpTarget {
  int mass_number = 0;
  HalfInt f_excited;  // pump line F'
  Polarization polarization = Polarization::sigma_plus;
};

struct BeamColumn {
  IsotopeSpec isotope;
  double nsigma = 0.0;  // N sigma0 L of this isotope in the probe column
};

struct BeamScenario {
  std::vector<BeamColumn> columns;
  double gamma_star = 0.0;       // rad/s, Doppler-substituted width
  double probe_intensity = 0.0;  // W/m^2
  double probe_waist = 0.0;      // m
  double velocity = 0.0;         // m/s, longitudinal beam velocity
  std::optional<PumpTarget> pump;
  double zeeman_split = 0.0;       // rad/s, spin-0 contribution (default: none)
  double estimate_detuning = 0.0;  // rad/s, where the scattering estimate is taken
  bool depolarize_by_probe = false;  // post-process pumped populations over one transit
};

// Columns proportional to natural abundance with one shared density scale
// (nsigma_i = column_scale * abundance_i).
BeamScenario beam_scenario_from_table(const IsotopeTable& table, double column_scale,
                                      double gamma_star, double probe_intensity,
                                      double probe_waist, double velocity);

struct BeamSpectra {
  std::vector<double> probe_offsets;  // rad/s on the shared axis
  std::vector<double> od;
  std::vector<double> phi;  // rad
};

// Absorption OD and rotation over a probe-frequency grid. Unpumped
// spin-nonzero isotopes are unpolarized and contribute no rotation; the pumped
// isotope carries its pump steady state (the stretched sublevel).
BeamSpectra beam_spectra(const BeamScenario& scn, std::span<const double> probe_offsets,
                         const TransitionConstants& constants);

struct BeamEstimates {
  double transit_time = 0.0;      // s, T = 2w/v
  double scattering_rate = 0.0;   // 1/s at the configured estimate detuning
  double scattering_count = 0.0;  // r T
};

BeamEstimates beam_estimates(const BeamScenario& scn, const TransitionConstants& constants);

// ---------------------------------------------------------------- MOT release

struct MotReleaseScenario {
  IsotopeSpec isotope;           // the probed species (spin 1/2)
  double initial_od = 0.0;       // d, on the F' = I+1 resonance
  double decay_time = 0.0;       // tau, s
  double probe_waist = 0.0;      // m
  double probe_detuning = 0.0;   // rad/s from the F' = I+1 line
  double probe_intensity = 0.0;  // W/m^2
};

struct MotReleaseTrace {
  std::vector<double> time;    // s
  std::vector<double> od;      // d exp(-t/tau)
  std::vector<double> nsigma;  // od / line_factor
  std::vector<double> phi;     // rad, at the probe detuning, p = 1
  double expansion_velocity = 0.0;  // w / tau
};

MotReleaseTrace mot_release_trace(const MotReleaseScenario& scn, std::span<const double> times);

// 2S = (N sigma0 L / sigma0) pi w^2 = N pi w^2 L.
double probed_atom_number(double nsigma, double waist, double sigma0);

// ----------------------------------------------------------------------- FORT

struct FortScenario {
  IsotopeSpec isotope;          // trapped species (spin 1/2)
  double atom_count = 0.0;      // 2S
  double trap_length = 0.0;     // m
  double probe_waist = 0.0;     // m
  double probe_detuning = 0.0;  // rad/s from the F' = I+1 line
  double probe_intensity = 0.0; // W/m^2
  double field = 0.0;           // T
  double gyromagnetic = 0.0;    // Hz/T
};

// N sigma0 L = 2S sigma0 / (pi w^2); inverse of probed_atom_number.
double fort_column(double atom_count, double waist, double sigma0);

double larmor_frequency(double field, double gyromagnetic);  // rad/s

// Rotation amplitude under perfect polarization at the scenario's detuning:
// |phi / (p N sigma0 L)| * fort_column(...).
double fort_perfect_amplitude(const FortScenario& scn, const TransitionConstants& constants);

struct PrecessionTrace {
  std::vector<double> time;  // s
  std::vector<double> phi;   // rad
  double omega_larmor = 0.0; // rad/s
  double amplitude = 0.0;    // rad
};

// phi(T) = amplitude exp(-T/tau) sin(omega_B T + theta).
PrecessionTrace fort_precession_trace(const FortScenario& scn, double amplitude, double decay_time,
                                      double phase, std::span<const double> times);

struct PhotonPressureEstimates {
  double scattering_rate = 0.0;  // 1/s
  double acceleration = 0.0;     // m/s^2, hbar omega r / (M c)
  double hold_time = 0.0;        // s, sqrt(2L/a)
};

PhotonPressureEstimates photon_pressure_estimates(const FortScenario& scn,
                                                  const TransitionConstants& constants);

}  // namespace ybfr
