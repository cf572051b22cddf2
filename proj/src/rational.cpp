#include "fdstab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace fdstab {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mp::cpp_rational(num);
  value_ /= den;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.value_ / b.value_);
}

double Rational::to_double() const {
  static const BigInt kExact = BigInt(1) << 53;
  const BigInt n = num();
  const BigInt d = den();
  if (mp::abs(n) <= kExact && d <= kExact) {
    return n.convert_to<double>() / d.convert_to<double>();
  }
  return value_.convert_to<double>();
}

std::string Rational::str() const {
  if (den() == 1) return num().str();
  return num().str() + "/" + den().str();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw std::domain_error("Rational: non-finite value");
  int exp = 0;
  const double mant = std::frexp(value, &exp);
  // value = m * 2^(exp-53) with m an integer of at most 53 bits
  const auto m = static_cast<long long>(std::ldexp(mant, 53));
  const int shift = exp - 53;
  mp::cpp_rational r(m);
  if (shift >= 0) {
    r *= mp::cpp_rational(BigInt(1) << shift);
  } else {
    r /= mp::cpp_rational(BigInt(1) << -shift);
  }
  return Rational(r);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("cannot parse rational '" +
                                 std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw fail();

  auto parse_int = [&](std::string_view s) -> BigInt {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
      digits.remove_prefix(1);
    if (digits.empty()) throw fail();
    for (char c : digits)
      if (c < '0' || c > '9') throw fail();
    BigInt v{std::string(digits)};
    return (!s.empty() && s.front() == '-') ? BigInt(-v) : v;
  };

  if (text.find_first_of("eE") != std::string_view::npos) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(std::string(text), &used);
    } catch (const std::exception&) {
      throw fail();
    }
    if (used != text.size()) throw fail();
    return from_double(v);
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt n = parse_int(text.substr(0, slash));
    BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(mp::cpp_rational(n, d));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
      whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw fail();
    BigInt w = whole.empty() ? BigInt(0) : parse_int(whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))
      throw fail();
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    mp::cpp_rational r = mp::cpp_rational(w) + mp::cpp_rational(f, scale);
    return Rational(neg ? mp::cpp_rational(-r) : r);
  }
  return Rational(mp::cpp_rational(parse_int(text)));
}

}  // namespace fdstab
