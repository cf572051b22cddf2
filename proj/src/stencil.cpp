#include "fdstab/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fdstab/kernels.hpp"

namespace fdstab {

using std::numbers::pi;

Scheme::Scheme(std::string name, int r, int p, std::vector<Rational> coefficients,
               Rational lambda, Rational velocity)
    : name_(std::move(name)),
      r_(r),
      p_(p),
      exact_(std::move(coefficients)),
      exact_lambda_(std::move(lambda)),
      exact_velocity_(std::move(velocity)) {
  if (r_ < 0 || p_ < 0) throw std::invalid_argument("scheme: r and p must be >= 0");
  if (exact_.size() != static_cast<std::size_t>(r_ + p_ + 1))
    throw std::invalid_argument("scheme '" + name_ + "': expected " +
                                std::to_string(r_ + p_ + 1) + " coefficients, got " +
                                std::to_string(exact_.size()));
  if (r_ > 0 && exact_.front().is_zero())
    throw std::invalid_argument("scheme '" + name_ + "': a_{-r} must be nonzero");
  if (p_ > 0 && exact_.back().is_zero())
    throw std::invalid_argument("scheme '" + name_ + "': a_p must be nonzero");
  if (exact_lambda_.sign() <= 0)
    throw std::invalid_argument("scheme '" + name_ + "': lambda must be positive");

  coeffs_.reserve(exact_.size());
  for (const auto& c : exact_) coeffs_.push_back(c.to_double());
  lambda_ = exact_lambda_.to_double();
  velocity_ = exact_velocity_.to_double();
}

double Scheme::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ConsistencyResiduals consistency_residuals(const Scheme& scheme) {
  Rational sum0;
  Rational sum1;
  for (int l = -scheme.r(); l <= scheme.p(); ++l) {
    sum0 += scheme.exact_coeff(l);
    sum1 += Rational(l) * scheme.exact_coeff(l);
  }
  ConsistencyResiduals res;
  res.exact_r0 = sum0 - Rational(1);
  res.exact_r1 = sum1 + scheme.exact_lambda() * scheme.exact_velocity();
  res.r0 = res.exact_r0.to_double();
  res.r1 = res.exact_r1.to_double();
  return res;
}

std::complex<double> symbol(const Scheme& scheme, double theta) {
  std::complex<double> c{0.0, 0.0};
  for (int l = -scheme.r(); l <= scheme.p(); ++l)
    c += scheme.coeff(l) * std::polar(1.0, l * theta);
  return c;
}

std::complex<double> symbol_derivative(const Scheme& scheme, double theta) {
  std::complex<double> c{0.0, 0.0};
  for (int l = -scheme.r(); l <= scheme.p(); ++l)
    c += std::complex<double>(0.0, l * scheme.coeff(l)) * std::polar(1.0, l * theta);
  return c;
}

AmplificationSample amplification_factor(const Scheme& scheme, double theta) {
  AmplificationSample s;
  s.theta = theta;
  s.value = symbol(scheme, theta);
  s.modulus = std::abs(s.value);
  return s;
}

double wrap_angle(double theta) {
  double t = std::remainder(theta, 2.0 * pi);  // in [-pi, pi]
  if (t <= -pi) t += 2.0 * pi;
  return t;
}

namespace {

// d|C|^2/dtheta = 2 Re(conj(C) C')
double modulus_slope(const Scheme& s, double theta) {
  return 2.0 * std::real(std::conj(symbol(s, theta)) * symbol_derivative(s, theta));
}

// Bisection on the sign change (+ to -) of d|C|^2/dtheta inside [lo, hi].
// Falls back to the better endpoint when the bracket carries no sign change.
double refine_maximum(const Scheme& s, double lo, double hi, double tol) {
  double glo = modulus_slope(s, lo);
  double ghi = modulus_slope(s, hi);
  if (!(glo >= 0.0 && ghi <= 0.0)) {
    double mid = 0.5 * (lo + hi);
    double best = mid;
    double best_val = std::norm(symbol(s, mid));
    for (double t : {lo, hi}) {
      double v = std::norm(symbol(s, t));
      if (v > best_val) {
        best_val = v;
        best = t;
      }
    }
    return best;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (modulus_slope(s, mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

VonNeumannResult von_neumann_sup(const Scheme& scheme, int n_samples, double refine_tol) {
  if (n_samples < std::max(4 * (scheme.r() + scheme.p()), 8))
    throw std::invalid_argument("von_neumann_sup: n_samples must be >= 4(r+p)");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("von_neumann_sup: refine_tol must be > 0");

  // theta_i = -pi + 2 pi (i+1)/N, i = 0..N-1, so the last sample is pi.
  const std::size_t n = static_cast<std::size_t>(n_samples);
  const double h = 2.0 * pi / static_cast<double>(n_samples);
  std::vector<double> mod2(n);
  kernels::sample_symbol_modulus2(scheme.coefficients(), scheme.r(), -pi + h, h, mod2);

  const auto [mn, mx] = std::minmax_element(mod2.begin(), mod2.end());
  VonNeumannResult out;
  if (std::sqrt(*mx) - std::sqrt(*mn) <= refine_tol) {
    out.flat = true;
    out.sup = std::sqrt(*mx);
    out.argmax_thetas = {0.0};
    return out;
  }

  struct Candidate {
    double theta;
    double modulus;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = mod2[(i + n - 1) % n];
    const double next = mod2[(i + 1) % n];
    if (mod2[i] > prev && mod2[i] >= next) {
      const double centre = -pi + h * static_cast<double>(i + 1);
      double t = refine_maximum(scheme, centre - h, centre + h, std::min(refine_tol, 1e-13));
      t = wrap_angle(t);
      // 0 and pi are critical points of |C| for real coefficients; flat maxima
      // there leave the bisection stuck in rounding noise.
      for (double anchor : {0.0, pi}) {
        if (std::abs(wrap_angle(t - anchor)) < h &&
            std::abs(symbol(scheme, anchor)) >= std::abs(symbol(scheme, t)) - 1e-15)
          t = anchor;
      }
      cands.push_back({t, std::abs(symbol(scheme, t))});
    }
  }
  for (const auto& c : cands) out.sup = std::max(out.sup, c.modulus);
  for (const auto& c : cands) {
    if (c.modulus < out.sup - refine_tol) continue;
    bool dup = std::any_of(out.argmax_thetas.begin(), out.argmax_thetas.end(), [&](double t) {
      return std::abs(wrap_angle(t - c.theta)) < 2.0 * h;
    });
    if (!dup) out.argmax_thetas.push_back(c.theta);
  }
  std::sort(out.argmax_thetas.begin(), out.argmax_thetas.end());
  return out;
}

double group_velocity(const Scheme& scheme, double theta) {
  const auto c = symbol(scheme, theta);
  if (std::abs(c) == 0.0)
    throw std::domain_error("group velocity undefined where the amplification factor vanishes");
  return -std::imag(symbol_derivative(scheme, theta) / c) / scheme.lambda();
}

std::vector<WaveMode> unimodular_modes(const Scheme& scheme, double tol, int n_samples) {
  const auto vn = von_neumann_sup(scheme, n_samples, std::min(tol, 1e-12));
  if (vn.sup > 1.0 + tol)
    throw std::domain_error("scheme '" + scheme.name() + "' violates the von Neumann condition (sup |C| = " +
                            std::to_string(vn.sup) + "); it is l2-unstable on Z");
  if (vn.flat)
    throw std::domain_error("scheme '" + scheme.name() +
                            "' has |C| constant on the circle; unimodular modes are not isolated");

  // Every local maximum reaching 1 - tol is a tangency point, not just the
  // global ones, so rerun the candidate search with a loose acceptance band.
  const auto loose = von_neumann_sup(scheme, n_samples, vn.sup - (1.0 - tol));
  std::vector<WaveMode> modes;
  for (double t : loose.argmax_thetas) {
    WaveMode m;
    m.theta = t;
    m.z = symbol(scheme, t);
    if (std::abs(m.z) < 1.0 - tol) continue;
    m.kappa = std::polar(1.0, t);
    m.group_velocity = group_velocity(scheme, t);
    m.tolerance = std::abs(std::abs(m.z) - 1.0);
    modes.push_back(m);
  }
  std::sort(modes.begin(), modes.end(),
            [](const WaveMode& a, const WaveMode& b) { return a.theta < b.theta; });
  return modes;
}

}  // namespace fdstab
