#include "fdstab/builtins.hpp"

#include <stdexcept>

namespace fdstab {

namespace {

Scheme trimmed(std::string name, int r, std::vector<Rational> coeffs, Rational lambda,
               Rational velocity) {
  int p = static_cast<int>(coeffs.size()) - r - 1;
  while (r > 0 && coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    --r;
  }
  while (p > 0 && coeffs.back().is_zero()) {
    coeffs.pop_back();
    --p;
  }
  return Scheme(std::move(name), r, p, std::move(coeffs), std::move(lambda),
                std::move(velocity));
}

Scheme long_stencil(std::string name, std::vector<Rational> coeffs) {
  return Scheme(std::move(name), 7, 7, std::move(coeffs), Rational(1), Rational(1));
}

}  // namespace

Scheme three_point(double lam_a, double nu, double lambda, std::string name) {
  const Rational la = Rational::from_double(lam_a);
  const Rational v = Rational::from_double(nu);
  const Rational half(1, 2);
  const Rational lam = Rational::from_double(lambda);
  std::vector<Rational> c{(la + v) * half, Rational(1) - v, (v - la) * half};
  return trimmed(std::move(name), 1, std::move(c), lam, la / lam);
}

Scheme identity_scheme() { return Scheme("identity", 0, 0, {Rational(1)}, Rational(1), Rational(0)); }

Scheme coeff1() {
  return long_stencil("coeff1", {
      Rational(20133, 704759), Rational(-30443, 894654), Rational(20476, 371655),
      Rational(12703, 838076), Rational(75599, 770583), Rational(31384, 945409),
      Rational(-4015, 85641),  Rational(261251, 274289), Rational(53837, 928392),
      Rational(-27478, 587215), Rational(-54064, 714213), Rational(-27635, 674698),
      Rational(-31244, 798847), Rational(23091, 711760), Rational(1864, 178339),
  });
}

Scheme coeff1_as_printed() {
  auto c = coeff1().exact_coefficients();
  c[1] = Rational(-30433, 894654);
  return long_stencil("coeff1-printed", std::move(c));
}

Scheme coeff2() {
  return long_stencil("coeff2", {
      Rational(17151, 869039), Rational(-9591, 473236), Rational(55269, 926798),
      Rational(-1854, 92119),  Rational(8983, 71254),   Rational(32579, 620922),
      Rational(-47474, 813983), Rational(739673, 796040), Rational(2966, 34841),
      Rational(-19830, 397889), Rational(-71152, 650153), Rational(-21338, 716071),
      Rational(-10189, 548431), Rational(19029, 761263), Rational(8820, 964529),
  });
}

std::vector<std::string> builtin_names() {
  return {"identity", "three-point", "lax-friedrichs", "upwind", "lax-wendroff",
          "coeff1", "coeff1-printed", "coeff2"};
}

Scheme builtin(std::string_view name, const BuiltinParams& params) {
  const double la = params.lam_a;
  if (name == "identity") return identity_scheme();
  if (name == "three-point") {
    if (!params.nu) throw std::invalid_argument("three-point needs nu");
    return three_point(la, *params.nu, params.lambda, "three-point");
  }
  if (name == "lax-friedrichs") return three_point(la, 1.0, params.lambda, "lax-friedrichs");
  if (name == "upwind") return three_point(la, la, params.lambda, "upwind");
  if (name == "lax-wendroff") {
    // nu = (lam_a)^2 exactly, not its rounded double
    const Rational r = Rational::from_double(la);
    const Rational lam = Rational::from_double(params.lambda);
    const Rational nu = r * r;
    const Rational half(1, 2);
    std::vector<Rational> c{(r + nu) * half, Rational(1) - nu, (nu - r) * half};
    return trimmed("lax-wendroff", 1, std::move(c), lam, r / lam);
  }
  if (name == "coeff1") return coeff1();
  if (name == "coeff1-printed") return coeff1_as_printed();
  if (name == "coeff2") return coeff2();
  throw std::invalid_argument("unknown builtin scheme '" + std::string(name) + "'");
}

std::optional<BuiltinInfo> builtin_info(std::string_view name) {
  if (name == "coeff1") {
    return BuiltinInfo{"coeff1",
                       "r = p = 7, designed for k = 1; a_{-6} = -30443/894654",
                       1e-10,
                       {0.0, 0.288, -0.288, 0.82, -0.82},
                       {1.0, -1.0, -1.0, 1.0, 1.0}};
  }
  if (name == "coeff1-printed") {
    return BuiltinInfo{"coeff1-printed",
                       "coeff1 with a_{-6} = -30433/894654 as typeset",
                       1e-4,
                       {0.0, 0.288, -0.288, 0.82, -0.82},
                       {1.0, -1.0, -1.0, 1.0, 1.0}};
  }
  if (name == "coeff2") {
    return BuiltinInfo{"coeff2", "r = p = 7, designed for k = 2", 1e-10,
                       {0.0, 0.3, -0.3, 0.8, -0.8},
                       {1.0, -1.0, -1.0, 1.0, 1.0}};
  }
  for (const char* n : {"identity", "three-point", "lax-friedrichs", "upwind", "lax-wendroff"}) {
    if (name == n) return BuiltinInfo{n, "three-point family member", 0.0, {}, {}};
  }
  return std::nullopt;
}

}  // namespace fdstab
