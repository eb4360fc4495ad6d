#include "fse/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fse {
namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rational from128(__int128 num, __int128 den) {
  const __int128 g = gcd128(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = INT64_MAX;
  if (abs128(num) > kMax || abs128(den) > kMax) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& other) const {
  return from128(static_cast<__int128>(num_) * other.den_ +
                     static_cast<__int128>(other.num_) * den_,
                 static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
  return from128(static_cast<__int128>(num_) * other.den_ -
                     static_cast<__int128>(other.num_) * den_,
                 static_cast<__int128>(den_) * other.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

bool operator<=(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=
         static_cast<__int128>(b.num_) * a.den_;
}

}  // namespace fse
