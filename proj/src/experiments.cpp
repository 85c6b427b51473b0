#include "ybfr/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ybfr/lineshape.hpp"

namespace ybfr {

BeamScenario beam_scenario_from_table(const IsotopeTable& table, double column_scale,
                                      double gamma_star, double probe_intensity, double probe_waist,
                                      double velocity) {
  if (column_scale < 0) throw std::domain_error("column scale must be nonnegative");
  BeamScenario scn;
  for (const auto& iso : table.isotopes())
    scn.columns.push_back({iso, column_scale * iso.abundance});
  scn.gamma_star = gamma_star;
  scn.probe_intensity = probe_intensity;
  scn.probe_waist = probe_waist;
  scn.velocity = velocity;
  scn.estimate_detuning = 0.5 * gamma_star;
  return scn;
}

namespace {

GroundPopulations pumped_populations(const BeamColumn& col, const PumpTarget& pump) {
  const int sign = pump.polarization == Polarization::sigma_plus ? +1 : -1;
  return GroundPopulations::stretched(col.isotope.nuclear_spin, sign);
}

}  // namespace

BeamSpectra beam_spectra(const BeamScenario& scn, std::span<const double> probe_offsets,
                         const TransitionConstants& constants) {
  if (probe_offsets.empty()) throw std::domain_error("empty probe grid");
  if (scn.gamma_star <= 0) throw std::domain_error("gamma_star must be positive");

  BeamSpectra out;
  out.probe_offsets.assign(probe_offsets.begin(), probe_offsets.end());
  out.od.assign(probe_offsets.size(), 0.0);
  out.phi.assign(probe_offsets.size(), 0.0);

  for (const auto& col : scn.columns) {
    if (col.nsigma < 0) throw std::domain_error("negative column weight");
    if (col.nsigma == 0.0) continue;
    const auto& iso = col.isotope;

    // absorption: abundance-weighted pi lines
    const auto weights = pi_line_strengths(iso.nuclear_spin);
    for (const auto& [two_fp, w] : weights) {
      const double center = iso.line_offset(HalfInt::from_twice(two_fp));
      const double wq = w.to_double() * col.nsigma;
      for (size_t i = 0; i < probe_offsets.size(); ++i)
        out.od[i] += wq * lorentzian_absorption(center, probe_offsets[i], scn.gamma_star);
    }

    // rotation
    const bool pumped = scn.pump && scn.pump->mass_number == iso.mass_number &&
                        iso.nuclear_spin.twice() > 0;
    if (pumped) {
      const GroundPopulations pops = pumped_populations(col, *scn.pump);
      EnsembleGeometry geom;
      geom.nsigma = col.nsigma;
      const double transit = scn.velocity > 0 ? 2.0 * scn.probe_waist / scn.velocity : 0.0;
      for (size_t i = 0; i < probe_offsets.size(); ++i) {
        GroundPopulations effective = pops;
        if (scn.depolarize_by_probe && transit > 0) {
          const double detuning =
              probe_offsets[i] - iso.line_offset(iso.nuclear_spin);  // from the F'=I line
          effective = probe_depolarization(pops, scn.probe_intensity, detuning, transit, iso,
                                           constants)
                          .populations;
        }
        out.phi[i] += rotation_general(effective, geom, probe_offsets[i], iso, scn.gamma_star);
      }
    } else if (iso.nuclear_spin.twice() == 0 && scn.zeeman_split != 0.0) {
      const double center = iso.line_offset(HalfInt(1));
      for (size_t i = 0; i < probe_offsets.size(); ++i)
        out.phi[i] += rotation_spin_zero(col.nsigma, probe_offsets[i] - center, scn.zeeman_split,
                                         scn.gamma_star);
    }
  }
  return out;
}

BeamEstimates beam_estimates(const BeamScenario& scn, const TransitionConstants& constants) {
  if (scn.velocity <= 0) throw std::domain_error("beam velocity must be positive");
  BeamEstimates est;
  est.transit_time = 2.0 * scn.probe_waist / scn.velocity;
  est.scattering_rate = scattering_rate(scn.probe_intensity, scn.estimate_detuning, constants);
  est.scattering_count = est.scattering_rate * est.transit_time;
  return est;
}

MotReleaseTrace mot_release_trace(const MotReleaseScenario& scn, std::span<const double> times) {
  if (scn.initial_od < 0) throw std::domain_error("initial optical depth must be nonnegative");
  if (scn.decay_time <= 0) throw std::domain_error("decay time must be positive");
  const HalfInt spin = scn.isotope.nuclear_spin;
  if (spin.twice() == 0) throw std::domain_error("MOT release trace needs a spin-nonzero isotope");

  const HalfInt probed_line = HalfInt::from_twice(spin.twice() + 2);  // F' = I + 1
  const double line_factor = pi_line_strengths(spin).at(probed_line.twice()).to_double();
  const double probe_offset = scn.isotope.line_offset(probed_line) + scn.probe_detuning;
  const double width = transition_constants().gamma;

  MotReleaseTrace out;
  out.expansion_velocity = scn.probe_waist / scn.decay_time;
  for (const double t : times) {
    if (t < 0) throw std::domain_error("times must be nonnegative");
    const double od = scn.initial_od * std::exp(-t / scn.decay_time);
    const double nsigma = od / line_factor;
    out.time.push_back(t);
    out.od.push_back(od);
    out.nsigma.push_back(nsigma);
    if (spin.twice() == 1) {
      out.phi.push_back(rotation_spin_half(1.0, nsigma, probe_offset, scn.isotope, width));
    } else {
      EnsembleGeometry geom;
      geom.nsigma = nsigma;
      out.phi.push_back(rotation_general(GroundPopulations::stretched(spin), geom, probe_offset,
                                         scn.isotope, width));
    }
  }
  return out;
}

double probed_atom_number(double nsigma, double waist, double sigma0) {
  if (nsigma < 0 || waist <= 0 || sigma0 <= 0)
    throw std::domain_error("probed_atom_number needs nonnegative column and positive geometry");
  return nsigma / sigma0 * std::numbers::pi * waist * waist;
}

double fort_column(double atom_count, double waist, double sigma0) {
  if (atom_count < 0 || waist <= 0 || sigma0 <= 0)
    throw std::domain_error("fort_column needs nonnegative atom count and positive geometry");
  return atom_count * sigma0 / (std::numbers::pi * waist * waist);
}

double larmor_frequency(double field, double gyromagnetic) {
  return two_pi * gyromagnetic * field;
}

double fort_perfect_amplitude(const FortScenario& scn, const TransitionConstants& constants) {
  const double nsigma = fort_column(scn.atom_count, scn.probe_waist, constants.sigma0);
  const HalfInt probed_line = HalfInt::from_twice(scn.isotope.nuclear_spin.twice() + 2);
  const double probe_offset = scn.isotope.line_offset(probed_line) + scn.probe_detuning;
  return std::abs(rotation_spin_half(1.0, nsigma, probe_offset, scn.isotope, constants.gamma));
}

PrecessionTrace fort_precession_trace(const FortScenario& scn, double amplitude, double decay_time,
                                      double phase, std::span<const double> times) {
  if (decay_time <= 0) throw std::domain_error("decay time must be positive");
  PrecessionTrace out;
  out.omega_larmor = larmor_frequency(scn.field, scn.gyromagnetic);
  out.amplitude = amplitude;
  for (const double t : times) {
    out.time.push_back(t);
    out.phi.push_back(amplitude * std::exp(-t / decay_time) *
                      std::sin(out.omega_larmor * t + phase));
  }
  return out;
}

PhotonPressureEstimates photon_pressure_estimates(const FortScenario& scn,
                                                  const TransitionConstants& constants) {
  if (scn.trap_length <= 0) throw std::domain_error("trap length must be positive");
  PhotonPressureEstimates est;
  est.scattering_rate = scattering_rate(scn.probe_intensity, scn.probe_detuning, constants);
  const double mass = scn.isotope.mass_number * phys::amu;
  est.acceleration = phys::hbar * constants.omega0 * est.scattering_rate / (mass * phys::c);
  est.hold_time = est.acceleration > 0 ? std::sqrt(2.0 * scn.trap_length / est.acceleration)
                                       : std::numeric_limits<double>::infinity();
  return est;
}

}  // namespace ybfr
