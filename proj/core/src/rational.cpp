#include "schelling/rational.hpp"

#include <charconv>
#include <limits>

namespace schelling {

namespace {

constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(__int128 value) {
  if (value < kMin64 || value > kMax64) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_i128(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.den_ +
                 static_cast<__int128>(rhs.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  *this = from_i128(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.den_ -
                 static_cast<__int128>(rhs.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  *this = from_i128(num, den);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  __int128 num = static_cast<__int128>(num_) * rhs.num_;
  __int128 den = static_cast<__int128>(den_) * rhs.den_;
  *this = from_i128(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) {
    throw std::invalid_argument("rational division by zero");
  }
  __int128 num = static_cast<__int128>(num_) * rhs.den_;
  __int128 den = static_cast<__int128>(den_) * rhs.num_;
  *this = from_i128(num, den);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace schelling
