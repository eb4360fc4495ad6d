#pragma once

#include <cstdint>
#include <string>

namespace fse {

/// Exact ratio of 64-bit integers, stored normalized with a positive
/// denominator. Consistency rates are ratios of example counts, so keeping
/// the exact form end to end lets golden values like 1/4 compare with zero
/// tolerance; doubles are produced only for display.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;
  std::string to_string() const;  // "num/den"

  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace fse
