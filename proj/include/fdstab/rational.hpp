#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fdstab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den, den > 0, kept in lowest terms.
///
/// Backed by arbitrary precision integers, so sums of many published
/// fractions stay exact instead of overflowing.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1);
  explicit Rational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  /// Accepts "p/q", an integer, or a decimal literal. Decimal literals are
  /// read as exact base-10 fractions ("0.1" is 1/10); exponent forms go
  /// through double.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double value);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  /// Correctly rounded when numerator and denominator are below 2^53.
  double to_double() const;
  std::string str() const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-value_); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

}  // namespace fdstab
