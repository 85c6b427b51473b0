// ybfaraday: command-line front end. All physical inputs are taken in human
// units (MHz cycles, mW/mm^2, mm, ms, uT) and converted to SI in this file
// only; the library below works in rad/s and SI throughout.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybfr/angular.hpp"
#include "ybfr/atomdata.hpp"
#include "ybfr/experiments.hpp"
#include "ybfr/faraday.hpp"
#include "ybfr/fitting.hpp"
#include "ybfr/lineshape.hpp"
#include "ybfr/polarimeter.hpp"
#include "ybfr/pumping.hpp"
#include "ybfr/tabular.hpp"
#include "ybfr/units.hpp"

namespace {

using nlohmann::json;
using namespace ybfr;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

std::vector<double> linspace(double from, double to, int points) {
  if (points < 2) throw std::domain_error("grid needs at least 2 points");
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i)
    out[i] = from + (to - from) * static_cast<double>(i) / (points - 1);
  return out;
}

IsotopeTable load_table(const std::string& path) {
  if (path.empty()) return default_isotope_table();
  return load_isotope_table_file(path);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("scenario file " + path + ": " + e.what());
  }
}

void emit(const Table& table, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    write_csv(std::cout, table);
  else
    write_csv_file(out_path, table);
}

std::string fmt(double v) { return format_double(v); }

// ------------------------------------------------------------------ constants

int cmd_constants(const std::string& table_path) {
  const auto k = transition_constants();
  const auto& table = load_table(table_path);
  std::printf("Yb 1S0 -> 1P1 transition\n");
  std::printf("omega0 %.10e rad/s (2pi x 751.5 THz)\n", k.omega0);
  std::printf("gamma %.10e rad/s (2pi x 29 MHz)\n", k.gamma);
  std::printf("sigma0 %.3e m^2\n", k.sigma0);
  std::printf("i_sat %.3f W/m^2 (%.2f mW/mm^2)\n", k.i_sat, si_to_mw_per_mm2(k.i_sat));
  std::printf("dipole_sq %.6e C^2 m^2\n", electric_dipole_sq(k));
  std::printf("zeeman_split_per_tesla %.6e rad/s/T\n", zeeman_split_per_tesla());
  std::printf("\nisotopes (MHz, relative to the 174 line)\n");
  std::printf("%-5s %-10s %-5s %-10s %s\n", "mass", "abundance", "spin", "shift_MHz", "lines_MHz");
  for (const auto& iso : table.isotopes()) {
    std::ostringstream lines;
    for (const HalfInt fp : iso.excited_levels())
      lines << "F'=" << fp.to_string() << ":" << fmt(iso.shift_mhz + iso.hyperfine_mhz.at(fp.twice()))
            << " ";
    std::printf("%-5d %-10s %-5s %-10s %s\n", iso.mass_number, fmt(iso.abundance).c_str(),
                iso.nuclear_spin.to_string().c_str(), fmt(iso.shift_mhz).c_str(),
                lines.str().c_str());
  }
  return kExitOk;
}

// ------------------------------------------------------------------ strengths

int cmd_strengths(const std::string& spin_text, const std::string& pol_text) {
  const HalfInt spin = HalfInt::parse(spin_text);
  const Polarization pol = parse_polarization(pol_text);
  const StrengthTable table = sigma_strength_table(spin, pol);
  const auto levels = excited_hyperfine_levels(spin);

  std::printf("# squared transition strengths, I=%s, %s light\n", spin.to_string().c_str(),
              to_string(pol).c_str());
  std::printf("m");
  for (const HalfInt fp : levels) std::printf(",F'=%s", fp.to_string().c_str());
  std::printf("\n");
  for (int two_m = -spin.twice(); two_m <= spin.twice(); two_m += 2) {
    std::printf("%s", HalfInt::from_twice(two_m).to_string().c_str());
    for (const HalfInt fp : levels)
      std::printf(",%s", table.entry(HalfInt::from_twice(two_m), fp).to_string().c_str());
    std::printf("\n");
  }
  if (pol == Polarization::pi) {
    std::printf("# population-averaged pi line strengths\n");
    for (const auto& [two_fp, w] : pi_line_strengths(spin))
      std::printf("# F'=%s %s\n", HalfInt::from_twice(two_fp).to_string().c_str(),
                  w.to_string().c_str());
  }
  return kExitOk;
}

// ------------------------------------------------------------------- scenarios

BeamScenario beam_from_json(const json& doc, const IsotopeTable& table) {
  BeamScenario scn = beam_scenario_from_table(
      table, doc.value("column_scale", 1.0), mhz_to_rad(doc.value("gamma_star_MHz", 57.0)),
      mw_per_mm2_to_si(doc.value("probe_intensity_mW_mm2", 0.55)),
      doc.value("probe_waist_mm", 0.14) * 1e-3, doc.value("velocity_m_s", 300.0));
  if (doc.contains("columns")) {
    for (const auto& [mass, nsigma] : doc["columns"].items()) {
      bool found = false;
      for (auto& col : scn.columns)
        if (col.isotope.mass_number == std::stoi(mass)) {
          col.nsigma = nsigma.get<double>();
          found = true;
        }
      if (!found) throw ValidationError("scenario column for unknown isotope " + mass);
    }
  }
  if (doc.contains("estimate_detuning_MHz"))
    scn.estimate_detuning = mhz_to_rad(doc["estimate_detuning_MHz"].get<double>());
  scn.zeeman_split = mhz_to_rad(doc.value("zeeman_MHz", 0.0));
  scn.depolarize_by_probe = doc.value("depolarize_by_probe", false);
  if (doc.contains("pump")) {
    PumpTarget target;
    target.mass_number = doc["pump"].at("isotope").get<int>();
    const auto& iso = table.by_mass(target.mass_number);
    target.f_excited = doc["pump"].contains("line_two_Fp")
                           ? HalfInt::from_twice(doc["pump"]["line_two_Fp"].get<int>())
                           : iso.nuclear_spin;
    target.polarization = parse_polarization(doc["pump"].value("polarization", "sigma+"));
    scn.pump = target;
  }
  return scn;
}

MotReleaseScenario mot_from_json(const json& doc, const IsotopeTable& table) {
  MotReleaseScenario scn;
  scn.isotope = table.by_mass(doc.value("isotope", 171));
  scn.initial_od = doc.value("initial_od", 0.05);
  scn.decay_time = doc.value("decay_ms", 2.2) * 1e-3;
  scn.probe_waist = doc.value("probe_waist_mm", 0.5) * 1e-3;
  scn.probe_detuning = mhz_to_rad(doc.value("probe_detuning_MHz", 160.0));
  scn.probe_intensity = mw_per_mm2_to_si(doc.value("probe_intensity_mW_mm2", 3e-4));
  return scn;
}

FortScenario fort_from_json(const json& doc, const IsotopeTable& table) {
  FortScenario scn;
  scn.isotope = table.by_mass(doc.value("isotope", 171));
  scn.atom_count = doc.value("atom_count", 8e6);
  scn.trap_length = doc.value("trap_length_mm", 1.0) * 1e-3;
  scn.probe_waist = doc.value("probe_waist_um", 30.0) * 1e-6;
  scn.probe_detuning = mhz_to_rad(doc.value("probe_detuning_MHz", 1600.0));
  scn.probe_intensity = mw_per_mm2_to_si(doc.value("probe_intensity_mW_mm2", 0.70));
  scn.field = doc.value("field_uT", 350.0) * 1e-6;
  scn.gyromagnetic = doc.value("gyromagnetic_Hz_per_T", 7.50e6);
  return scn;
}

std::vector<double> grid_from_json(const json& doc, const char* key, double from, double to,
                                   int points) {
  if (doc.contains(key)) {
    const auto& g = doc[key];
    from = g.value("from", from);
    to = g.value("to", to);
    points = g.value("points", points);
  }
  return linspace(from, to, points);
}

// ------------------------------------------------------------------- spectrum

int cmd_spectrum(const std::string& scenario_path, const std::string& out_path,
                 const std::string& table_path, double noise, unsigned long long seed) {
  const json doc = load_json_file(scenario_path);
  const auto& table = load_table(table_path);
  const std::string kind = doc.value("kind", "beam");
  const auto constants = transition_constants();

  Table out;
  if (kind == "beam") {
    const BeamScenario scn = beam_from_json(doc, table);
    const auto grid_mhz = grid_from_json(doc, "grid_MHz", -1200.0, 2400.0, 721);
    std::vector<double> grid(grid_mhz.size());
    for (size_t i = 0; i < grid_mhz.size(); ++i) grid[i] = mhz_to_rad(grid_mhz[i]);
    BeamSpectra spectra = beam_spectra(scn, grid, constants);
    if (noise > 0) {
      spectra.od = with_gaussian_noise(spectra.od, noise, seed);
      spectra.phi = with_gaussian_noise(spectra.phi, noise, seed + 1);
    }
    out.metadata = {{"command", "spectrum"},
                    {"kind", "beam"},
                    {"gamma_star_MHz", fmt(rad_to_mhz(scn.gamma_star))},
                    {"noise", fmt(noise)},
                    {"seed", std::to_string(seed)}};
    for (const auto& col : scn.columns)
      out.metadata.emplace_back("nsigma_" + std::to_string(col.isotope.mass_number),
                                fmt(col.nsigma));
    out.columns = {"detuning_MHz", "od", "phi_rad"};
    for (size_t i = 0; i < grid.size(); ++i)
      out.rows.push_back({grid_mhz[i], spectra.od[i], spectra.phi[i]});
  } else if (kind == "mot") {
    const MotReleaseScenario scn = mot_from_json(doc, table);
    auto times_ms = grid_from_json(doc, "times_ms", 0.0, 10.0, 501);
    std::vector<double> times(times_ms.size());
    for (size_t i = 0; i < times.size(); ++i) times[i] = times_ms[i] * 1e-3;
    const MotReleaseTrace trace = mot_release_trace(scn, times);
    out.metadata = {{"command", "spectrum"},
                    {"kind", "mot"},
                    {"expansion_velocity_m_s", fmt(trace.expansion_velocity)},
                    {"nsigma_initial", fmt(trace.nsigma.front())}};
    out.columns = {"time_s", "od", "phi_rad"};
    for (size_t i = 0; i < times.size(); ++i)
      out.rows.push_back({trace.time[i], trace.od[i], trace.phi[i]});
  } else {
    throw ValidationError("spectrum supports beam or mot scenarios, got kind='" + kind + "'");
  }
  emit(out, out_path);
  return kExitOk;
}

// ------------------------------------------------------------------- rotation

int cmd_rotation(int mass, double p, double nsigma, double from_mhz, double to_mhz, int points,
                 double width_mhz, double zeeman_mhz, const std::string& coefficients,
                 const std::string& out_path, const std::string& table_path) {
  const auto& table = load_table(table_path);
  const auto& iso = table.by_mass(mass);
  const double width = mhz_to_rad(width_mhz);
  const auto grid = linspace(from_mhz, to_mhz, points);

  Table out;
  out.metadata = {{"command", "rotation"},
                  {"isotope", std::to_string(mass)},
                  {"p", fmt(p)},
                  {"nsigma", fmt(nsigma)},
                  {"width_MHz", fmt(width_mhz)},
                  {"axis", "detuning from the 174 line"}};
  out.columns = {"detuning_MHz", "phi_rad"};

  const int two_i = iso.nuclear_spin.twice();
  for (const double x : grid) {
    const double offset = mhz_to_rad(x);
    double phi = 0.0;
    if (two_i == 0) {
      phi = rotation_spin_zero(nsigma, offset - iso.line_offset(HalfInt(1)),
                               mhz_to_rad(zeeman_mhz), width);
    } else if (two_i == 1) {
      phi = rotation_spin_half(p, nsigma, offset, iso, width);
    } else if (two_i == 5) {
      const auto coeff = coefficients == "quoted" ? Spin52Coefficients::quoted
                                                  : Spin52Coefficients::derived;
      phi = p * rotation_spin_52_stretched(nsigma, offset, iso, width, coeff);
    } else {
      throw ValidationError("rotation supports spins 0, 1/2 and 5/2");
    }
    out.rows.push_back({x, phi});
  }
  emit(out, out_path);
  return kExitOk;
}

// ----------------------------------------------------------------------- pump

int cmd_pump(const std::string& spin_text, const std::string& pol_text, double intensity_mw,
             double detuning_mhz, double duration_us, double dt_us, const std::string& out_path,
             const std::string& table_path) {
  const HalfInt spin = HalfInt::parse(spin_text);
  const auto& table = load_table(table_path);
  const IsotopeSpec* iso = nullptr;
  for (const auto& candidate : table.isotopes())
    if (candidate.nuclear_spin == spin) iso = &candidate;
  if (!iso) throw ValidationError("no isotope with spin " + spin.to_string() + " in the table");

  PumpConfig config;
  config.polarization = parse_polarization(pol_text);
  config.intensity = mw_per_mm2_to_si(intensity_mw);
  config.detuning = mhz_to_rad(detuning_mhz);
  config.duration = duration_us * 1e-6;
  if (dt_us > 0) config.time_step = dt_us * 1e-6;

  const auto traj = simulate_pumping(GroundPopulations::uniform(spin), config, *iso,
                                     transition_constants());

  Table out;
  out.metadata = {{"command", "pump"},
                  {"isotope", std::to_string(iso->mass_number)},
                  {"polarization", to_string(config.polarization)},
                  {"intensity_mW_mm2", fmt(intensity_mw)},
                  {"detuning_MHz", fmt(detuning_mhz)}};
  out.columns = {"time_s"};
  for (int two_m = -spin.twice(); two_m <= spin.twice(); two_m += 2)
    out.columns.push_back("f(" + HalfInt::from_twice(two_m).to_string() + ")");
  out.columns.push_back("p");
  // decimate long trajectories; the endpoint is always kept
  const size_t stride = std::max<size_t>(1, traj.samples.size() / 2000);
  for (size_t s = 0; s < traj.samples.size(); ++s) {
    if (s % stride != 0 && s + 1 != traj.samples.size()) continue;
    const auto& sample = traj.samples[s];
    std::vector<double> row{sample.time};
    double orientation = 0.0;
    for (int two_m = -spin.twice(); two_m <= spin.twice(); two_m += 2) {
      const double f = sample.populations.fraction(two_m);
      row.push_back(f);
      orientation += f * two_m;
    }
    row.push_back(orientation / spin.twice());  // f(+1/2) - f(-1/2) for spin 1/2
    out.rows.push_back(std::move(row));
  }
  emit(out, out_path);
  return kExitOk;
}

// -------------------------------------------------------------------- precess

int cmd_precess(double field_ut, double gyromagnetic, double atoms, double waist_um,
                double length_mm, double detuning_mhz, double intensity_mw, double tau_ms,
                double phase, double amplitude_rad, double from_ms, double to_ms, int points,
                const std::string& out_path, const std::string& table_path) {
  const auto& table = load_table(table_path);
  FortScenario scn;
  scn.isotope = table.by_mass(171);
  scn.atom_count = atoms;
  scn.trap_length = length_mm * 1e-3;
  scn.probe_waist = waist_um * 1e-6;
  scn.probe_detuning = mhz_to_rad(detuning_mhz);
  scn.probe_intensity = mw_per_mm2_to_si(intensity_mw);
  scn.field = field_ut * 1e-6;
  scn.gyromagnetic = gyromagnetic;

  const auto constants = transition_constants();
  const double amplitude =
      amplitude_rad > 0 ? amplitude_rad : fort_perfect_amplitude(scn, constants);

  auto times_ms = linspace(from_ms, to_ms, points);
  std::vector<double> times(times_ms.size());
  for (size_t i = 0; i < times.size(); ++i) times[i] = times_ms[i] * 1e-3;
  const auto trace = fort_precession_trace(scn, amplitude, tau_ms * 1e-3, phase, times);

  Table out;
  out.metadata = {{"command", "precess"},
                  {"field_uT", fmt(field_ut)},
                  {"omega_larmor_rad_s", fmt(trace.omega_larmor)},
                  {"larmor_kHz", fmt(trace.omega_larmor / two_pi / 1e3)},
                  {"amplitude_rad", fmt(amplitude)},
                  {"tau_ms", fmt(tau_ms)},
                  {"phase_rad", fmt(phase)}};
  out.columns = {"time_s", "phi_rad"};
  for (size_t i = 0; i < times.size(); ++i) out.rows.push_back({trace.time[i], trace.phi[i]});
  emit(out, out_path);
  return kExitOk;
}

// -------------------------------------------------------------------- release

int cmd_release(const std::string& scenario_path, const std::string& out_path,
                const std::string& table_path) {
  const json doc = load_json_file(scenario_path);
  const auto& table = load_table(table_path);
  const MotReleaseScenario scn = mot_from_json(doc, table);
  auto times_ms = grid_from_json(doc, "times_ms", 0.0, 10.0, 501);
  std::vector<double> times(times_ms.size());
  for (size_t i = 0; i < times.size(); ++i) times[i] = times_ms[i] * 1e-3;
  const MotReleaseTrace trace = mot_release_trace(scn, times);

  Table out;
  out.metadata = {{"command", "release"},
                  {"isotope", std::to_string(scn.isotope.mass_number)},
                  {"expansion_velocity_m_s", fmt(trace.expansion_velocity)},
                  {"nsigma_initial", fmt(trace.nsigma.front())},
                  {"probe_detuning_MHz", fmt(rad_to_mhz(scn.probe_detuning))}};
  out.columns = {"time_s", "od", "phi_rad"};
  for (size_t i = 0; i < times.size(); ++i)
    out.rows.push_back({trace.time[i], trace.od[i], trace.phi[i]});
  emit(out, out_path);
  return kExitOk;
}

// ------------------------------------------------------------------ estimates

int cmd_estimates(const std::string& scenario_path, const std::string& table_path) {
  const json doc = load_json_file(scenario_path);
  const auto& table = load_table(table_path);
  const auto constants = transition_constants();
  const std::string kind = doc.value("kind", "");

  if (kind == "beam") {
    const BeamScenario scn = beam_from_json(doc, table);
    const auto est = beam_estimates(scn, constants);
    std::printf("transit_time_us %s\n", fmt(est.transit_time * 1e6).c_str());
    std::printf("scattering_rate_per_s %s\n", fmt(est.scattering_rate).c_str());
    std::printf("scattering_count %s\n", fmt(est.scattering_count).c_str());
  } else if (kind == "mot") {
    const MotReleaseScenario scn = mot_from_json(doc, table);
    const double times[] = {0.0};
    const auto trace = mot_release_trace(scn, times);
    std::printf("expansion_velocity_m_s %s\n", fmt(trace.expansion_velocity).c_str());
    std::printf("nsigma_initial %s\n", fmt(trace.nsigma.front()).c_str());
    std::printf("probed_atom_number %s\n",
                fmt(probed_atom_number(trace.nsigma.front(), scn.probe_waist, constants.sigma0))
                    .c_str());
    std::printf("phi_initial_rad %s\n", fmt(trace.phi.front()).c_str());
  } else if (kind == "fort") {
    const FortScenario scn = fort_from_json(doc, table);
    const auto est = photon_pressure_estimates(scn, constants);
    std::printf("nsigma %s\n",
                fmt(fort_column(scn.atom_count, scn.probe_waist, constants.sigma0)).c_str());
    std::printf("larmor_kHz %s\n",
                fmt(larmor_frequency(scn.field, scn.gyromagnetic) / two_pi / 1e3).c_str());
    std::printf("amplitude_rad %s\n", fmt(fort_perfect_amplitude(scn, constants)).c_str());
    std::printf("scattering_rate_per_s %s\n", fmt(est.scattering_rate).c_str());
    std::printf("acceleration_m_s2 %s\n", fmt(est.acceleration).c_str());
    std::printf("hold_time_ms %s\n", fmt(est.hold_time * 1e3).c_str());
  } else {
    throw ValidationError("scenario kind must be beam, mot or fort");
  }
  return kExitOk;
}

// ------------------------------------------------------------------------ fit

std::vector<double> pick_column(const Table& data, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    for (const auto& col : data.columns)
      if (col == name) return data.column(name);
  }
  // fall back to the second column
  if (data.columns.size() >= 2) return data.column(data.columns[1]);
  throw ValidationError("data file has no usable y column");
}

void write_fit_json(const std::string& path, const std::string& model, const FitResult& fit,
                    const std::vector<std::string>& names, const json& derived) {
  json doc;
  doc["model"] = model;
  doc["converged"] = fit.converged;
  doc["iterations"] = fit.iterations;
  doc["residual_norm"] = fit.residual_norm;
  json params = json::object();
  json errors = json::object();
  const auto se = fit.standard_errors();
  for (size_t i = 0; i < fit.parameters.size(); ++i) {
    const std::string name = i < names.size() ? names[i] : "p" + std::to_string(i);
    params[name] = fit.parameters[i];
    if (i < se.size()) errors[name] = se[i];
  }
  doc["parameters"] = params;
  doc["standard_errors"] = errors;
  if (!derived.empty()) doc["derived"] = derived;
  if (!fit.covariance.empty()) doc["covariance"] = fit.covariance;

  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << doc.dump(2) << "\n";
  }
}

int cmd_fit_absorption(const std::string& data_path, const std::string& out_path,
                       const std::string& table_path, double init_gamma_star, double init_scale,
                       double init_offset) {
  const Table data = read_csv_file(data_path);
  const auto& table = load_table(table_path);
  const auto xs = data.column("detuning_MHz");
  const auto ys = pick_column(data, {"od"});

  AbsorptionInitial initial;
  initial.gamma_star_mhz = init_gamma_star;
  initial.offset_mhz = init_offset;
  if (init_scale > 0) {
    initial.scale = init_scale;
  } else {
    // seed the overall scale so the model peak matches the data peak
    std::vector<double> unit_columns;
    for (const auto& iso : table.isotopes()) unit_columns.push_back(iso.abundance);
    double model_peak = 0.0;
    double data_peak = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      model_peak = std::max(model_peak, absorption_model_od(xs[i], table, unit_columns,
                                                            init_gamma_star, init_offset));
      data_peak = std::max(data_peak, ys[i]);
    }
    initial.scale = model_peak > 0 ? data_peak / model_peak : 1.0;
  }

  const AbsorptionFit result = fit_absorption_spectrum(xs, ys, table, initial);
  json derived;
  for (const auto& iso : table.isotopes())
    derived["nsigma_" + std::to_string(iso.mass_number)] = result.nsigma(iso.mass_number);
  write_fit_json(out_path, "absorption", result.fit, result.parameter_names, derived);
  if (!result.fit.converged) {
    std::cerr << "fit did not converge\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int cmd_fit_exp(const std::string& data_path, const std::string& out_path, double init_d,
                double init_tau) {
  const Table data = read_csv_file(data_path);
  const auto ts = data.column("time_s");
  const auto ys = pick_column(data, {"od", "phi_rad", "y"});
  double d0 = init_d;
  double tau0 = init_tau;
  if (d0 == 0.0)
    for (const double y : ys) d0 = std::max(d0, std::abs(y));
  if (tau0 <= 0.0) tau0 = (ts.back() - ts.front()) / 3.0;
  const FitResult fit = fit_exponential(ts, ys, d0, tau0);
  write_fit_json(out_path, "exponential", fit, {"d", "tau_s"}, {});
  if (!fit.converged) {
    std::cerr << "fit did not converge\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int cmd_fit_sinusoid(const std::string& data_path, const std::string& out_path,
                     double fix_omega_khz) {
  const Table data = read_csv_file(data_path);
  const auto ts = data.column("time_s");
  const auto ys = pick_column(data, {"phi_rad", "y"});
  SinusoidParams initial = sinusoid_initial_guess(ts, ys);
  bool fix_omega = false;
  if (fix_omega_khz > 0) {
    initial.omega = two_pi * fix_omega_khz * 1e3;
    fix_omega = true;
  }
  const FitResult fit = fit_damped_sinusoid(ts, ys, initial, fix_omega);
  json derived;
  derived["frequency_kHz"] = fit.parameters[3] / two_pi / 1e3;
  write_fit_json(out_path, "damped_sinusoid", fit,
                 {"amplitude_rad", "tau_s", "theta_rad", "omega_rad_s"}, derived);
  if (!fit.converged) {
    std::cerr << "fit did not converge\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faraday rotation toolkit for spin-polarized ytterbium"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string table_path;
  app.add_option("--table", table_path, "isotope table JSON (default: bundled)");

  auto* constants = app.add_subcommand("constants", "print transition constants and isotope table");

  auto* strengths = app.add_subcommand("strengths", "print a squared-strength table as fractions");
  std::string spin_text = "1/2";
  std::string pol_text = "sigma+";
  strengths->add_option("--spin", spin_text, "nuclear spin I (0, 1/2, 5/2)")->required();
  strengths->add_option("--pol", pol_text, "sigma+, sigma- or pi")->required();

  auto* spectrum = app.add_subcommand("spectrum", "beam spectra or MOT-release trace from a scenario");
  std::string scenario_path, out_path;
  double noise = 0.0;
  unsigned long long seed = 0;
  spectrum->add_option("--scenario", scenario_path, "scenario JSON")->required();
  spectrum->add_option("--out", out_path, "output CSV (default: stdout)");
  spectrum->add_option("--noise", noise, "additive Gaussian noise sigma");
  spectrum->add_option("--seed", seed, "noise seed");

  auto* rotation = app.add_subcommand("rotation", "rotation spectrum of one isotope");
  int rot_mass = 171;
  double rot_p = 1.0, rot_nsigma = 1.0, rot_from = -1200.0, rot_to = 2400.0;
  double rot_width = 29.0, rot_zeeman = 0.0;
  int rot_points = 721;
  std::string rot_coeff = "derived";
  rotation->add_option("--isotope", rot_mass, "mass number")->required();
  rotation->add_option("--p", rot_p, "spin polarization in [-1, 1]");
  rotation->add_option("--nsigma", rot_nsigma, "N sigma0 L");
  rotation->add_option("--from", rot_from, "grid start, MHz from the 174 line");
  rotation->add_option("--to", rot_to, "grid end, MHz");
  rotation->add_option("--points", rot_points, "grid points");
  rotation->add_option("--width-mhz", rot_width, "dispersive linewidth, MHz");
  rotation->add_option("--zeeman-mhz", rot_zeeman, "excited-state Zeeman splitting (spin 0), MHz");
  rotation->add_option("--coefficients", rot_coeff, "spin-5/2 coefficient set: derived | quoted");
  rotation->add_option("--out", out_path, "output CSV (default: stdout)");

  auto* pump = app.add_subcommand("pump", "optical pumping trajectory");
  std::string pump_spin = "1/2", pump_pol = "sigma+";
  double pump_intensity = 1.0, pump_detuning = 0.0, pump_duration = 20.0, pump_dt = 0.0;
  pump->add_option("--spin", pump_spin, "nuclear spin I")->required();
  pump->add_option("--pol", pump_pol, "sigma+ or sigma-")->required();
  pump->add_option("--intensity", pump_intensity, "pump intensity, mW/mm^2");
  pump->add_option("--detuning-mhz", pump_detuning, "detuning from the F'=I line, MHz");
  pump->add_option("--duration-us", pump_duration, "pump duration, us");
  pump->add_option("--dt-us", pump_dt, "integrator step, us (default: 0.01/max rate)");
  pump->add_option("--out", out_path, "output CSV (default: stdout)");

  auto* precess = app.add_subcommand("precess", "Larmor precession trace of the trapped sample");
  double b_ut = 350.0, gyro = 7.50e6, atoms = 8e6, waist_um = 30.0, length_mm = 1.0;
  double det_mhz = 1600.0, intensity_mw = 0.70, tau_ms = 6.0, phase = 1.5707963267948966;
  double amplitude_rad = 0.0, from_ms = 0.0, to_ms = 20.0;
  int points = 2001;
  precess->add_option("--B", b_ut, "magnetic field, uT");
  precess->add_option("--gyromagnetic", gyro, "gyromagnetic ratio, Hz/T");
  precess->add_option("--atoms", atoms, "probed atom count 2S");
  precess->add_option("--waist-um", waist_um, "probe waist, um");
  precess->add_option("--length-mm", length_mm, "trap length, mm");
  precess->add_option("--detuning-mhz", det_mhz, "probe detuning from F'=3/2, MHz");
  precess->add_option("--intensity", intensity_mw, "probe intensity, mW/mm^2");
  precess->add_option("--tau-ms", tau_ms, "decay time, ms");
  precess->add_option("--phase", phase, "phase theta, rad");
  precess->add_option("--amplitude-rad", amplitude_rad,
                      "rotation amplitude (default: perfect polarization)");
  precess->add_option("--from-ms", from_ms, "trace start, ms");
  precess->add_option("--to-ms", to_ms, "trace end, ms");
  precess->add_option("--points", points, "trace points");
  precess->add_option("--out", out_path, "output CSV (default: stdout)");

  auto* release = app.add_subcommand("release", "MOT-release decay trace from a scenario");
  release->add_option("--scenario", scenario_path, "scenario JSON")->required();
  release->add_option("--out", out_path, "output CSV (default: stdout)");

  auto* estimates = app.add_subcommand("estimates", "back-of-envelope numbers for a scenario");
  estimates->add_option("--scenario", scenario_path, "scenario JSON")->required();

  auto* fit = app.add_subcommand("fit", "nonlinear least squares on a CSV series");
  fit->require_subcommand(1);
  std::string data_path;
  double init_gamma_star = 57.0, init_scale = 0.0, init_offset = 0.0;
  double init_d = 0.0, init_tau = 0.0, fix_omega_khz = 0.0;
  auto* fit_abs = fit->add_subcommand("absorption", "multi-line beam absorption spectrum");
  fit_abs->add_option("--data", data_path, "input CSV")->required();
  fit_abs->add_option("--out", out_path, "result JSON (default: stdout)");
  fit_abs->add_option("--init-gamma-star", init_gamma_star, "initial width, MHz");
  fit_abs->add_option("--init-scale", init_scale, "initial column scale (default: from peak)");
  fit_abs->add_option("--init-offset", init_offset, "initial frequency offset, MHz");
  auto* fit_exp = fit->add_subcommand("exp", "exponential decay d exp(-t/tau)");
  fit_exp->add_option("--data", data_path, "input CSV")->required();
  fit_exp->add_option("--out", out_path, "result JSON (default: stdout)");
  fit_exp->add_option("--init-d", init_d, "initial amplitude (default: max |y|)");
  fit_exp->add_option("--init-tau", init_tau, "initial decay time, s (default: span/3)");
  auto* fit_sin = fit->add_subcommand("sinusoid", "damped sinusoid");
  fit_sin->add_option("--data", data_path, "input CSV")->required();
  fit_sin->add_option("--out", out_path, "result JSON (default: stdout)");
  fit_sin->add_option("--fix-omega-khz", fix_omega_khz, "pin the frequency instead of fitting it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*constants) return cmd_constants(table_path);
    if (*strengths) return cmd_strengths(spin_text, pol_text);
    if (*spectrum) return cmd_spectrum(scenario_path, out_path, table_path, noise, seed);
    if (*rotation)
      return cmd_rotation(rot_mass, rot_p, rot_nsigma, rot_from, rot_to, rot_points, rot_width,
                          rot_zeeman, rot_coeff, out_path, table_path);
    if (*pump)
      return cmd_pump(pump_spin, pump_pol, pump_intensity, pump_detuning, pump_duration, pump_dt,
                      out_path, table_path);
    if (*precess)
      return cmd_precess(b_ut, gyro, atoms, waist_um, length_mm, det_mhz, intensity_mw, tau_ms,
                         phase, amplitude_rad, from_ms, to_ms, points, out_path, table_path);
    if (*release) return cmd_release(scenario_path, out_path, table_path);
    if (*estimates) return cmd_estimates(scenario_path, table_path);
    if (*fit_abs)
      return cmd_fit_absorption(data_path, out_path, table_path, init_gamma_star, init_scale,
                                init_offset);
    if (*fit_exp) return cmd_fit_exp(data_path, out_path, init_d, init_tau);
    if (*fit_sin) return cmd_fit_sinusoid(data_path, out_path, fix_omega_khz);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
