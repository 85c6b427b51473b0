#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ybfr {

// Half-integer angular momentum quantum number, stored as twice its value so
// that 1/2, 3/2, ... stay exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // implicit: integers are half-integers

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  // Accepts "2", "5/2", "2.5".
  static HalfInt parse(const std::string& text);

 private:
  int twice_ = 0;
};

}  // namespace ybfr
