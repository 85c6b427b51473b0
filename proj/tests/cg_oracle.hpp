#pragma once

// Test-only Clebsch-Gordan oracle, independent of the library's closed-form
// evaluation: coupled states are built in the product basis by repeated
// lowering from the stretched state, with Gram-Schmidt for the lower-J tops.
// Double precision; squared amplitudes are compared against exact rationals
// at 1e-12.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cg_oracle {

using State = std::map<std::pair<int, int>, double>;  // (2m1, 2m2) -> amplitude

inline double lower_coeff(int two_j, int two_m) {
  // <j, m-1| J- |j, m> = sqrt((j+m)(j-m+1)), in twice-integer bookkeeping
  return std::sqrt(0.25 * (two_j + two_m) * (two_j - two_m + 2));
}

inline State lower(const State& s, int two_j1, int two_j2) {
  State out;
  for (const auto& [key, amp] : s) {
    const auto [m1, m2] = key;
    if (m1 - 2 >= -two_j1) out[{m1 - 2, m2}] += amp * lower_coeff(two_j1, m1);
    if (m2 - 2 >= -two_j2) out[{m1, m2 - 2}] += amp * lower_coeff(two_j2, m2);
  }
  return out;
}

inline double dot(const State& a, const State& b) {
  double s = 0.0;
  for (const auto& [key, amp] : a) {
    const auto it = b.find(key);
    if (it != b.end()) s += amp * it->second;
  }
  return s;
}

inline void normalize(State& s) {
  const double n = std::sqrt(dot(s, s));
  if (n == 0.0) throw std::runtime_error("cg oracle: null state");
  for (auto& [key, amp] : s) amp /= n;
}

// |<j1 j2; m1 m2 | J, m1+m2>|^2 by ladder construction.
inline double cg_squared(int two_j1, int two_m1, int two_j2, int two_m2, int two_J) {
  const int two_M = two_m1 + two_m2;
  if (std::abs(two_M) > two_J) return 0.0;

  // coupled states |J, M> for all J >= two_J, each M >= target M
  std::map<int, std::map<int, State>> coupled;  // [2J][2M] -> state
  for (int tj = two_j1 + two_j2; tj >= std::abs(two_j1 - two_j2); tj -= 2) {
    State top;
    if (tj == two_j1 + two_j2) {
      top[{two_j1, two_j2}] = 1.0;
    } else {
      // seed in the M = tj subspace, orthogonal to all higher-J states there
      State seed;
      seed[{std::min(two_j1, tj + two_j2), tj - std::min(two_j1, tj + two_j2)}] = 1.0;
      for (int tj2 = two_j1 + two_j2; tj2 > tj; tj2 -= 2) {
        const State& other = coupled.at(tj2).at(tj);
        const double overlap = dot(seed, other);
        for (const auto& [key, amp] : other) seed[key] -= overlap * amp;
      }
      top = std::move(seed);
      normalize(top);
    }
    coupled[tj][tj] = top;
    State current = coupled[tj][tj];
    for (int tm = tj - 2; tm >= -tj; tm -= 2) {
      current = lower(current, two_j1, two_j2);
      normalize(current);
      coupled[tj][tm] = current;
    }
  }

  const State& state = coupled.at(two_J).at(two_M);
  const auto it = state.find({two_m1, two_m2});
  if (it == state.end()) return 0.0;
  return it->second * it->second;
}

}  // namespace cg_oracle
