#include "ybfr/atomdata.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ybfr/angular.hpp"

namespace ybfr {

namespace detail {
const char* default_isotope_json();
}

namespace {

void check_close(double a, double b, double rel, const char* what) {
  if (std::abs(a - b) > rel * std::max(std::abs(a), std::abs(b)))
    throw ValidationError(std::string(what) + " inconsistent with its definition");
}

}  // namespace

void TransitionConstants::validate() const {
  if (omega0 <= 0 || gamma <= 0) throw ValidationError("transition frequencies must be positive");
  check_close(sigma0, 6.0 * std::numbers::pi * (phys::c / omega0) * (phys::c / omega0), 1e-6, "sigma0");
  check_close(i_sat, phys::hbar * omega0 * gamma / (2.0 * sigma0), 1e-6, "i_sat");
}

TransitionConstants transition_constants() {
  TransitionConstants k{};
  k.omega0 = mhz_to_rad(751.5e6);  // 2pi x 751.5 THz
  k.gamma = mhz_to_rad(29.0);
  k.sigma0 = 6.0 * std::numbers::pi * (phys::c / k.omega0) * (phys::c / k.omega0);
  k.i_sat = phys::hbar * k.omega0 * k.gamma / (2.0 * k.sigma0);
  return k;
}

double electric_dipole_sq(const TransitionConstants& k) {
  const double e = phys::elementary_charge;
  return e * e * k.sigma0 * k.gamma / (8.0 * std::numbers::pi * phys::fine_structure * k.omega0);
}

double index_prefactor(const TransitionConstants& k) {
  return 2.0 * std::numbers::pi * phys::fine_structure * phys::c * electric_dipole_sq(k) /
         (phys::elementary_charge * phys::elementary_charge);
}

std::vector<HalfInt> IsotopeSpec::excited_levels() const {
  return excited_hyperfine_levels(nuclear_spin);
}

double IsotopeSpec::hyperfine_offset(HalfInt f_excited) const {
  const auto it = hyperfine_mhz.find(f_excited.twice());
  if (it == hyperfine_mhz.end())
    throw std::domain_error("isotope " + std::to_string(mass_number) + " has no hyperfine level F'=" +
                            f_excited.to_string());
  return mhz_to_rad(it->second);
}

double IsotopeSpec::line_offset(HalfInt f_excited) const {
  return centroid_offset() + hyperfine_offset(f_excited);
}

void IsotopeSpec::validate() const {
  const std::string who = "isotope " + std::to_string(mass_number);
  if (mass_number <= 0) throw ValidationError(who + ": mass number must be positive");
  if (abundance < 0.0 || abundance > 1.0) throw ValidationError(who + ": abundance outside [0, 1]");
  if (nuclear_spin.twice() < 0) throw ValidationError(who + ": negative nuclear spin");
  const auto levels = excited_hyperfine_levels(nuclear_spin);
  if (hyperfine_mhz.size() != levels.size())
    throw ValidationError(who + ": expected " + std::to_string(levels.size()) +
                          " hyperfine entries, got " + std::to_string(hyperfine_mhz.size()));
  for (const HalfInt fp : levels)
    if (!hyperfine_mhz.contains(fp.twice()))
      throw ValidationError(who + ": missing hyperfine entry F'=" + fp.to_string());
}

IsotopeTable::IsotopeTable(std::vector<IsotopeSpec> isotopes) : isotopes_(std::move(isotopes)) {
  if (isotopes_.empty()) throw ValidationError("isotope table is empty");
  double sum = 0.0;
  for (const auto& iso : isotopes_) {
    iso.validate();
    sum += iso.abundance;
  }
  if (std::abs(sum - 1.0) > 0.01) {
    std::ostringstream os;
    os << "isotope abundances sum to " << sum << ", expected 1 within 0.01";
    throw ValidationError(os.str());
  }
}

bool IsotopeTable::contains(int mass_number) const {
  for (const auto& iso : isotopes_)
    if (iso.mass_number == mass_number) return true;
  return false;
}

const IsotopeSpec& IsotopeTable::by_mass(int mass_number) const {
  for (const auto& iso : isotopes_)
    if (iso.mass_number == mass_number) return iso;
  throw std::domain_error("no isotope with mass number " + std::to_string(mass_number));
}

namespace {

HalfInt spin_from_json(const nlohmann::json& v) {
  const double s = v.get<double>();
  const double tw = 2.0 * s;
  const long long t = std::llround(tw);
  if (tw != static_cast<double>(t) || t < 0)
    throw ParseError("spin is not a nonnegative half-integer");
  return HalfInt::from_twice(static_cast<int>(t));
}

}  // namespace

IsotopeTable load_isotope_table(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("isotope document is not valid JSON: ") + e.what());
  }

  if (!doc.contains("isotopes") || !doc["isotopes"].is_array())
    throw ParseError("isotope document lacks an 'isotopes' array");

  std::vector<IsotopeSpec> specs;
  for (const auto& rec : doc["isotopes"]) {
    std::string who = "record " + std::to_string(specs.size());
    if (rec.contains("mass")) who = "isotope " + rec["mass"].dump();
    try {
      IsotopeSpec iso;
      iso.mass_number = rec.at("mass").get<int>();
      iso.abundance = rec.at("abundance").get<double>();
      iso.nuclear_spin = spin_from_json(rec.at("spin"));
      iso.shift_mhz = rec.at("shift_MHz").get<double>();
      for (const auto& [key, val] : rec.at("hyperfine_offsets_MHz").items())
        iso.hyperfine_mhz[std::stoi(key)] = val.get<double>();
      specs.push_back(std::move(iso));
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("malformed " + who + ": " + e.what());
    }
  }
  return IsotopeTable(std::move(specs));
}

IsotopeTable load_isotope_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open isotope file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_isotope_table(buf.str());
}

std::string save_isotope_table(const IsotopeTable& table) {
  nlohmann::json doc;
  doc["reference_isotope"] = 174;
  auto& arr = doc["isotopes"] = nlohmann::json::array();
  for (const auto& iso : table.isotopes()) {
    nlohmann::json rec;
    rec["mass"] = iso.mass_number;
    rec["abundance"] = iso.abundance;
    rec["spin"] = iso.nuclear_spin.value();
    rec["shift_MHz"] = iso.shift_mhz;
    nlohmann::json hf = nlohmann::json::object();
    for (const auto& [two_fp, mhz] : iso.hyperfine_mhz) hf[std::to_string(two_fp)] = mhz;
    rec["hyperfine_offsets_MHz"] = hf;
    arr.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

const IsotopeTable& default_isotope_table() {
  static const IsotopeTable table = load_isotope_table(detail::default_isotope_json());
  return table;
}

}  // namespace ybfr
