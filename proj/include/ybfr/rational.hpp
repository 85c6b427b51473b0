#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybfr {

// Exact rational arithmetic on int64 numerator/denominator, always stored in
// lowest terms with a positive denominator. Intermediate products are taken in
// 128-bit; a result that does not fit back into int64 throws std::overflow_error
// rather than silently losing exactness.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "2/3", "-1/21", "1", "0"

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  // n! as a rational; n must be in [0, 20] (the int64-exact range).
  static Rational factorial(int n);

 private:
  static Rational make(__int128 num, __int128 den);
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace ybfr
