// Python bindings for the ybfaraday core. Fractions cross the boundary as
// (numerator, denominator) tuples; half-integers as 2x integers ("two_m",
// "two_I") so nothing is lost to floating point.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybfr/angular.hpp"
#include "ybfr/atomdata.hpp"
#include "ybfr/experiments.hpp"
#include "ybfr/faraday.hpp"
#include "ybfr/fitting.hpp"
#include "ybfr/lineshape.hpp"
#include "ybfr/polarimeter.hpp"
#include "ybfr/pumping.hpp"
#include "ybfr/units.hpp"

namespace py = pybind11;
using namespace ybfr;

namespace {

HalfInt half(double v) {
  const double tw = 2.0 * v;
  const long long t = std::llround(tw);
  if (tw != static_cast<double>(t)) throw std::domain_error("not a half-integer");
  return HalfInt::from_twice(static_cast<int>(t));
}

py::tuple fraction(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Faraday rotation physics of spin-polarized ytterbium";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ValidationError>(m, "ValidationError");

  m.attr("speed_of_light") = phys::c;
  m.attr("hbar") = phys::hbar;
  m.def("mhz_to_rad", &mhz_to_rad, py::arg("mhz"));
  m.def("rad_to_mhz", &rad_to_mhz, py::arg("rad"));
  m.def("mw_per_mm2_to_si", &mw_per_mm2_to_si, py::arg("value"));

  // ---- atomdata
  py::class_<TransitionConstants>(m, "TransitionConstants")
      .def_readonly("omega0", &TransitionConstants::omega0)
      .def_readonly("gamma", &TransitionConstants::gamma)
      .def_readonly("sigma0", &TransitionConstants::sigma0)
      .def_readonly("i_sat", &TransitionConstants::i_sat)
      .def("validate", &TransitionConstants::validate);
  m.def("transition_constants", &transition_constants);
  m.def("electric_dipole_sq", &electric_dipole_sq, py::arg("constants"));
  m.def("index_prefactor", &index_prefactor, py::arg("constants"));

  py::class_<IsotopeSpec>(m, "IsotopeSpec")
      .def_readonly("mass_number", &IsotopeSpec::mass_number)
      .def_readonly("abundance", &IsotopeSpec::abundance)
      .def_property_readonly("spin",
                             [](const IsotopeSpec& s) { return s.nuclear_spin.value(); })
      .def_readonly("shift_mhz", &IsotopeSpec::shift_mhz)
      .def_readonly("hyperfine_mhz", &IsotopeSpec::hyperfine_mhz)
      .def("line_offset",
           [](const IsotopeSpec& s, double two_fp) { return s.line_offset(half(two_fp / 2.0)); },
           py::arg("two_fp"), "line center on the shared axis, rad/s, keyed by 2F'")
      .def("__repr__", [](const IsotopeSpec& s) {
        return "<IsotopeSpec " + std::to_string(s.mass_number) + "Yb I=" +
               s.nuclear_spin.to_string() + ">";
      });

  py::class_<IsotopeTable>(m, "IsotopeTable")
      .def_property_readonly("isotopes", &IsotopeTable::isotopes)
      .def("by_mass", &IsotopeTable::by_mass, py::arg("mass_number"),
           py::return_value_policy::reference_internal);
  m.def("default_isotope_table", &default_isotope_table, py::return_value_policy::reference);
  m.def("load_isotope_table", [](const std::string& text) { return load_isotope_table(text); },
        py::arg("json_text"));
  m.def("load_isotope_table_file", &load_isotope_table_file, py::arg("path"));
  m.def("save_isotope_table", &save_isotope_table, py::arg("table"));

  // ---- angular
  m.def(
      "clebsch_gordan_sq",
      [](double j1, double m1, double j2, double m2, double J) {
        return fraction(clebsch_gordan_sq(half(j1), half(m1), half(j2), half(m2), half(J)));
      },
      py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"), py::arg("J"),
      "squared Clebsch-Gordan coefficient as an exact (num, den) tuple");
  m.def(
      "sigma_strength_table",
      [](double spin, const std::string& pol) {
        const auto table = sigma_strength_table(half(spin), parse_polarization(pol));
        py::dict out;
        for (const auto& [key, value] : table.entries())
          out[py::make_tuple(key.first, key.second)] = fraction(value);
        return out;
      },
      py::arg("spin"), py::arg("polarization"),
      "dict keyed by (two_m, two_Fp) of exact (num, den) strengths");
  m.def(
      "pi_line_strengths",
      [](double spin) {
        py::dict out;
        for (const auto& [two_fp, w] : pi_line_strengths(half(spin)))
          out[py::int_(two_fp)] = fraction(w);
        return out;
      },
      py::arg("spin"), "dict keyed by 2F' of exact (num, den) strengths");

  // ---- lineshape
  m.def("dispersive", &dispersive, py::arg("center"), py::arg("omega"), py::arg("width"));
  m.def("lorentzian_absorption", &lorentzian_absorption, py::arg("center"), py::arg("omega"),
        py::arg("width"));
  m.def("rabi_squared", &rabi_squared, py::arg("intensity"), py::arg("constants"));
  m.def("scattering_rate", &scattering_rate, py::arg("intensity"), py::arg("detuning"),
        py::arg("constants"));
  m.def(
      "effective_linewidth",
      [](double natural, std::optional<double> doppler) {
        return effective_linewidth(natural, doppler);
      },
      py::arg("natural"), py::arg("doppler") = std::nullopt);

  // ---- faraday
  py::class_<GroundPopulations>(m, "GroundPopulations")
      .def_property_readonly("spin",
                             [](const GroundPopulations& p) { return p.nuclear_spin.value(); })
      .def_readonly("fractions", &GroundPopulations::fractions)
      .def_readwrite("zeeman_split", &GroundPopulations::zeeman_split)
      .def("fraction", &GroundPopulations::fraction, py::arg("two_m"))
      .def("polarization", &GroundPopulations::polarization)
      .def_static(
          "uniform", [](double spin) { return GroundPopulations::uniform(half(spin)); },
          py::arg("spin"))
      .def_static(
          "stretched",
          [](double spin, int sign) { return GroundPopulations::stretched(half(spin), sign); },
          py::arg("spin"), py::arg("sign") = +1)
      .def_static("spin_zero", &GroundPopulations::spin_zero, py::arg("zeeman_split") = 0.0)
      .def_static(
          "from_fractions",
          [](double spin, const std::map<int, double>& fractions) {
            GroundPopulations p;
            p.nuclear_spin = half(spin);
            p.fractions = fractions;
            p.validate();
            return p;
          },
          py::arg("spin"), py::arg("fractions"), "fractions keyed by 2m");

  py::class_<EnsembleGeometry>(m, "EnsembleGeometry")
      .def(py::init([](double nsigma, double length, double probe_waist,
                       std::optional<double> number_density) {
             EnsembleGeometry g;
             g.nsigma = nsigma;
             g.length = length;
             g.probe_waist = probe_waist;
             g.number_density = number_density;
             return g;
           }),
           py::arg("nsigma") = 0.0, py::arg("length") = 0.0, py::arg("probe_waist") = 0.0,
           py::arg("number_density") = std::nullopt)
      .def_readwrite("nsigma", &EnsembleGeometry::nsigma)
      .def_readwrite("length", &EnsembleGeometry::length)
      .def_readwrite("probe_waist", &EnsembleGeometry::probe_waist);

  m.def("rotation_angle", &rotation_angle, py::arg("n_plus"), py::arg("n_minus"),
        py::arg("length"), py::arg("omega_abs"));
  m.def("rotation_spin_zero", &rotation_spin_zero, py::arg("nsigma"), py::arg("detuning"),
        py::arg("zeeman_split"), py::arg("width"));
  m.def("rotation_spin_half", &rotation_spin_half, py::arg("p"), py::arg("nsigma"),
        py::arg("probe_offset"), py::arg("isotope"), py::arg("width"));
  m.def(
      "rotation_spin_52_stretched",
      [](double nsigma, double probe_offset, const IsotopeSpec& iso, double width,
         const std::string& coefficients) {
        const auto c = coefficients == "quoted" ? Spin52Coefficients::quoted
                                                : Spin52Coefficients::derived;
        return rotation_spin_52_stretched(nsigma, probe_offset, iso, width, c);
      },
      py::arg("nsigma"), py::arg("probe_offset"), py::arg("isotope"), py::arg("width"),
      py::arg("coefficients") = "derived");
  m.def("rotation_general", &rotation_general, py::arg("populations"), py::arg("geometry"),
        py::arg("probe_offset"), py::arg("isotope"), py::arg("width"));
  m.def(
      "refractive_indices",
      [](const GroundPopulations& pops, double probe_offset, const IsotopeSpec& iso,
         const TransitionConstants& constants, double width, double number_density) {
        const auto plus = sigma_strength_table(pops.nuclear_spin, Polarization::sigma_plus);
        const auto minus = sigma_strength_table(pops.nuclear_spin, Polarization::sigma_minus);
        return refractive_indices(pops, plus, minus, probe_offset, iso, constants, width,
                                  number_density);
      },
      py::arg("populations"), py::arg("probe_offset"), py::arg("isotope"), py::arg("constants"),
      py::arg("width"), py::arg("number_density"));
  m.def("eq2_coupling", &eq2_coupling, py::arg("probe_offset"), py::arg("geometry"),
        py::arg("isotope"), py::arg("constants"), py::arg("width"));
  m.def("zeeman_split_per_tesla", &zeeman_split_per_tesla);

  // ---- pumping
  py::class_<PumpConfig>(m, "PumpConfig")
      .def(py::init([](const std::string& pol, double intensity, double detuning, double duration,
                       std::optional<double> time_step) {
             PumpConfig c;
             c.polarization = parse_polarization(pol);
             c.intensity = intensity;
             c.detuning = detuning;
             c.duration = duration;
             c.time_step = time_step;
             return c;
           }),
           py::arg("polarization") = "sigma+", py::arg("intensity") = 0.0,
           py::arg("detuning") = 0.0, py::arg("duration") = 0.0,
           py::arg("time_step") = std::nullopt);

  py::class_<PumpSample>(m, "PumpSample")
      .def_readonly("time", &PumpSample::time)
      .def_readonly("populations", &PumpSample::populations);
  py::class_<PumpTrajectory>(m, "PumpTrajectory")
      .def_readonly("samples", &PumpTrajectory::samples)
      .def_readonly("clamp_events", &PumpTrajectory::clamp_events)
      .def("final_populations", &PumpTrajectory::final_populations,
           py::return_value_policy::reference_internal);
  m.def("simulate_pumping", &simulate_pumping, py::arg("initial"), py::arg("config"),
        py::arg("isotope"), py::arg("constants"));

  py::class_<DepolarizationResult>(m, "DepolarizationResult")
      .def_readonly("populations", &DepolarizationResult::populations)
      .def_readonly("scattering_rate", &DepolarizationResult::scattering_rate)
      .def_readonly("scattering_count", &DepolarizationResult::scattering_count);
  m.def("probe_depolarization", &probe_depolarization, py::arg("initial"),
        py::arg("probe_intensity"), py::arg("probe_detuning"), py::arg("exposure"),
        py::arg("isotope"), py::arg("constants"));

  // ---- polarimeter
  py::class_<PolarimeterReading>(m, "PolarimeterReading")
      .def_readonly("p_in", &PolarimeterReading::p_in)
      .def_readonly("p_out", &PolarimeterReading::p_out)
      .def_readonly("p_plus", &PolarimeterReading::p_plus)
      .def_readonly("p_minus", &PolarimeterReading::p_minus)
      .def_readonly("rotation", &PolarimeterReading::rotation)
      .def_readonly("optical_depth", &PolarimeterReading::optical_depth)
      .def("difference", &PolarimeterReading::difference);
  m.def(
      "polarimeter_read",
      [](double p_in, double od, double phi) { return ybfr::read(p_in, od, phi); },
      py::arg("p_in"), py::arg("absorption_od"), py::arg("phi"));
  m.def("optical_depth", &optical_depth, py::arg("p_in"), py::arg("p_out"));
  m.def("column_from_depth",
        [](double od, double factor) { return column_from_depth(od, factor); }, py::arg("od"),
        py::arg("line_factor"));

  // ---- experiments
  py::class_<BeamScenario>(m, "BeamScenario")
      .def_readwrite("gamma_star", &BeamScenario::gamma_star)
      .def_readwrite("probe_intensity", &BeamScenario::probe_intensity)
      .def_readwrite("probe_waist", &BeamScenario::probe_waist)
      .def_readwrite("velocity", &BeamScenario::velocity)
      .def_readwrite("zeeman_split", &BeamScenario::zeeman_split)
      .def_readwrite("estimate_detuning", &BeamScenario::estimate_detuning)
      .def_readwrite("depolarize_by_probe", &BeamScenario::depolarize_by_probe)
      .def("set_column",
           [](BeamScenario& scn, int mass, double nsigma) {
             for (auto& col : scn.columns)
               if (col.isotope.mass_number == mass) {
                 col.nsigma = nsigma;
                 return;
               }
             throw std::domain_error("no such isotope in the scenario");
           })
      .def("set_pump", [](BeamScenario& scn, int mass, const std::string& pol) {
        PumpTarget t;
        t.mass_number = mass;
        t.polarization = parse_polarization(pol);
        scn.pump = t;
      });
  m.def("beam_scenario_from_table", &beam_scenario_from_table, py::arg("table"),
        py::arg("column_scale"), py::arg("gamma_star"), py::arg("probe_intensity"),
        py::arg("probe_waist"), py::arg("velocity"));

  py::class_<BeamSpectra>(m, "BeamSpectra")
      .def_readonly("probe_offsets", &BeamSpectra::probe_offsets)
      .def_readonly("od", &BeamSpectra::od)
      .def_readonly("phi", &BeamSpectra::phi);
  m.def(
      "beam_spectra",
      [](const BeamScenario& scn, const std::vector<double>& probe_offsets,
         const TransitionConstants& constants) {
        return beam_spectra(scn, probe_offsets, constants);
      },
      py::arg("scenario"), py::arg("probe_offsets"), py::arg("constants"));

  py::class_<BeamEstimates>(m, "BeamEstimates")
      .def_readonly("transit_time", &BeamEstimates::transit_time)
      .def_readonly("scattering_rate", &BeamEstimates::scattering_rate)
      .def_readonly("scattering_count", &BeamEstimates::scattering_count);
  m.def("beam_estimates", &beam_estimates, py::arg("scenario"), py::arg("constants"));

  py::class_<MotReleaseScenario>(m, "MotReleaseScenario")
      .def(py::init([](const IsotopeSpec& iso, double initial_od, double decay_time,
                       double probe_waist, double probe_detuning, double probe_intensity) {
             return MotReleaseScenario{iso,         initial_od,     decay_time,
                                       probe_waist, probe_detuning, probe_intensity};
           }),
           py::arg("isotope"), py::arg("initial_od"), py::arg("decay_time"),
           py::arg("probe_waist"), py::arg("probe_detuning"), py::arg("probe_intensity") = 0.0);
  py::class_<MotReleaseTrace>(m, "MotReleaseTrace")
      .def_readonly("time", &MotReleaseTrace::time)
      .def_readonly("od", &MotReleaseTrace::od)
      .def_readonly("nsigma", &MotReleaseTrace::nsigma)
      .def_readonly("phi", &MotReleaseTrace::phi)
      .def_readonly("expansion_velocity", &MotReleaseTrace::expansion_velocity);
  m.def(
      "mot_release_trace",
      [](const MotReleaseScenario& scn, const std::vector<double>& times) {
        return mot_release_trace(scn, times);
      },
      py::arg("scenario"), py::arg("times"));

  m.def("probed_atom_number", &probed_atom_number, py::arg("nsigma"), py::arg("waist"),
        py::arg("sigma0"));
  m.def("fort_column", &fort_column, py::arg("atom_count"), py::arg("waist"), py::arg("sigma0"));
  m.def("larmor_frequency", &larmor_frequency, py::arg("field"), py::arg("gyromagnetic"));

  py::class_<FortScenario>(m, "FortScenario")
      .def(py::init([](const IsotopeSpec& iso, double atom_count, double trap_length,
                       double probe_waist, double probe_detuning, double probe_intensity,
                       double field, double gyromagnetic) {
             return FortScenario{iso,           atom_count,      trap_length, probe_waist,
                                 probe_detuning, probe_intensity, field,      gyromagnetic};
           }),
           py::arg("isotope"), py::arg("atom_count"), py::arg("trap_length"),
           py::arg("probe_waist"), py::arg("probe_detuning"), py::arg("probe_intensity"),
           py::arg("field"), py::arg("gyromagnetic"));
  m.def("fort_perfect_amplitude", &fort_perfect_amplitude, py::arg("scenario"),
        py::arg("constants"));
  py::class_<PrecessionTrace>(m, "PrecessionTrace")
      .def_readonly("time", &PrecessionTrace::time)
      .def_readonly("phi", &PrecessionTrace::phi)
      .def_readonly("omega_larmor", &PrecessionTrace::omega_larmor)
      .def_readonly("amplitude", &PrecessionTrace::amplitude);
  m.def(
      "fort_precession_trace",
      [](const FortScenario& scn, double amplitude, double decay_time, double phase,
         const std::vector<double>& times) {
        return fort_precession_trace(scn, amplitude, decay_time, phase, times);
      },
      py::arg("scenario"), py::arg("amplitude"), py::arg("decay_time"), py::arg("phase"),
      py::arg("times"));
  py::class_<PhotonPressureEstimates>(m, "PhotonPressureEstimates")
      .def_readonly("scattering_rate", &PhotonPressureEstimates::scattering_rate)
      .def_readonly("acceleration", &PhotonPressureEstimates::acceleration)
      .def_readonly("hold_time", &PhotonPressureEstimates::hold_time);
  m.def("photon_pressure_estimates", &photon_pressure_estimates, py::arg("scenario"),
        py::arg("constants"));

  // ---- fitting
  py::class_<FitResult>(m, "FitResult")
      .def_readonly("parameters", &FitResult::parameters)
      .def_readonly("residual_norm", &FitResult::residual_norm)
      .def_readonly("iterations", &FitResult::iterations)
      .def_readonly("converged", &FitResult::converged)
      .def_readonly("covariance", &FitResult::covariance)
      .def_readonly("history", &FitResult::history)
      .def("standard_errors", &FitResult::standard_errors);

  m.def(
      "least_squares",
      [](const std::function<std::vector<double>(std::vector<double>)>& model,
         std::vector<double> initial, const std::vector<double>& data,
         std::optional<std::pair<std::vector<double>, std::vector<double>>> bounds) {
        const Model wrapped = [&model](std::span<const double> p) {
          return model(std::vector<double>(p.begin(), p.end()));
        };
        std::optional<Bounds> b;
        if (bounds) b = Bounds{bounds->first, bounds->second};
        return least_squares(wrapped, std::move(initial), data, b);
      },
      py::arg("model"), py::arg("initial"), py::arg("data"), py::arg("bounds") = std::nullopt);

  py::class_<AbsorptionFit>(m, "AbsorptionFit")
      .def_readonly("fit", &AbsorptionFit::fit)
      .def_readonly("parameter_names", &AbsorptionFit::parameter_names)
      .def_readonly("gamma_star_mhz", &AbsorptionFit::gamma_star_mhz)
      .def_readonly("offset_mhz", &AbsorptionFit::offset_mhz)
      .def("nsigma", &AbsorptionFit::nsigma, py::arg("mass_number"));
  m.def(
      "fit_absorption_spectrum",
      [](const std::vector<double>& x, const std::vector<double>& y, const IsotopeTable& table,
         double gamma_star_mhz, double scale, double offset_mhz) {
        return fit_absorption_spectrum(x, y, table, {gamma_star_mhz, scale, offset_mhz});
      },
      py::arg("detuning_mhz"), py::arg("od"), py::arg("table"), py::arg("gamma_star_mhz") = 57.0,
      py::arg("scale") = 1.0, py::arg("offset_mhz") = 0.0, py::keep_alive<0, 3>());
  m.def(
      "absorption_model_od",
      [](double x, const IsotopeTable& table, const std::vector<double>& columns,
         double gamma_star_mhz, double offset_mhz) {
        return absorption_model_od(x, table, columns, gamma_star_mhz, offset_mhz);
      },
      py::arg("detuning_mhz"), py::arg("table"), py::arg("columns"), py::arg("gamma_star_mhz"),
      py::arg("offset_mhz") = 0.0);
  m.def(
      "fit_exponential",
      [](const std::vector<double>& t, const std::vector<double>& y, double d, double tau) {
        return fit_exponential(t, y, d, tau);
      },
      py::arg("t"), py::arg("y"), py::arg("initial_d"), py::arg("initial_tau"));

  py::class_<SinusoidParams>(m, "SinusoidParams")
      .def(py::init([](double amplitude, double tau, double theta, double omega) {
             return SinusoidParams{amplitude, tau, theta, omega};
           }),
           py::arg("amplitude"), py::arg("tau"), py::arg("theta"), py::arg("omega"))
      .def_readwrite("amplitude", &SinusoidParams::amplitude)
      .def_readwrite("tau", &SinusoidParams::tau)
      .def_readwrite("theta", &SinusoidParams::theta)
      .def_readwrite("omega", &SinusoidParams::omega);
  m.def("damped_sinusoid", &damped_sinusoid, py::arg("t"), py::arg("params"));
  m.def(
      "sinusoid_initial_guess",
      [](const std::vector<double>& t, const std::vector<double>& phi) {
        return sinusoid_initial_guess(t, phi);
      },
      py::arg("t"), py::arg("phi"));
  m.def(
      "fit_damped_sinusoid",
      [](const std::vector<double>& t, const std::vector<double>& phi,
         const SinusoidParams& initial, bool fix_omega) {
        return fit_damped_sinusoid(t, phi, initial, fix_omega);
      },
      py::arg("t"), py::arg("phi"), py::arg("initial"), py::arg("fix_omega") = false);
  m.def(
      "with_gaussian_noise",
      [](const std::vector<double>& values, double sigma, unsigned long long seed) {
        return with_gaussian_noise(values, sigma, seed);
      },
      py::arg("values"), py::arg("sigma"), py::arg("seed"));
}
