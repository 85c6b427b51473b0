#include "ybfr/halfint.hpp"

namespace ybfr {

HalfInt HalfInt::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const int num = std::stoi(text.substr(0, slash));
      const int den = std::stoi(text.substr(slash + 1));
      if (den == 2) return from_twice(num);
      if (den == 1) return HalfInt(num);
      throw std::invalid_argument("");
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const double v = std::stod(text);
      const double tw = 2.0 * v;
      const long long t = static_cast<long long>(tw > 0 ? tw + 0.5 : tw - 0.5);
      if (tw != static_cast<double>(t)) throw std::invalid_argument("");
      return from_twice(static_cast<int>(t));
    }
    return HalfInt(std::stoi(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a half-integer: '" + text + "'");
  }
}

}  // namespace ybfr
