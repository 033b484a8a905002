#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schelling {

// Exact rational arithmetic on 64-bit numerator/denominator. Values are kept
// normalized (gcd 1, denominator positive). Intermediate products use 128-bit
// integers; results that do not fit back into 64 bits throw std::overflow_error
// rather than silently wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Renders as "num/den" with the denominator always present, e.g. "3/1", "-4/3".
  std::string str() const;
  // Parses "num/den" or a bare integer. Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational from_i128(__int128 num, __int128 den);
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace schelling
