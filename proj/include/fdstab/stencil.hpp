#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fdstab/rational.hpp"

namespace fdstab {

/// One-step explicit scheme u_j^{n+1} = sum_{l=-r}^{p} a_l u_{j+l}^n for the
/// transport equation u_t + a u_x = 0 with CFL ratio lambda = dt/dx.
///
/// Coefficients are held as exact rationals; the double copies are produced
/// once, in the constructor, and every numerical routine downstream reads
/// those copies.
class Scheme {
 public:
  Scheme(std::string name, int r, int p, std::vector<Rational> coefficients,
         Rational lambda, Rational velocity);

  const std::string& name() const { return name_; }
  int r() const { return r_; }
  int p() const { return p_; }
  int width() const { return r_ + p_ + 1; }

  /// a_l for l in [-r, p].
  double coeff(int l) const { return coeffs_[static_cast<std::size_t>(l + r_)]; }
  const Rational& exact_coeff(int l) const {
    return exact_[static_cast<std::size_t>(l + r_)];
  }
  /// Coefficients ordered l = -r ... p.
  const std::vector<double>& coefficients() const { return coeffs_; }
  const std::vector<Rational>& exact_coefficients() const { return exact_; }

  double lambda() const { return lambda_; }
  double velocity() const { return velocity_; }
  const Rational& exact_lambda() const { return exact_lambda_; }
  const Rational& exact_velocity() const { return exact_velocity_; }

  double max_abs_coeff() const;

 private:
  std::string name_;
  int r_;
  int p_;
  std::vector<Rational> exact_;
  std::vector<double> coeffs_;
  Rational exact_lambda_;
  Rational exact_velocity_;
  double lambda_;
  double velocity_;
};

struct ConsistencyResiduals {
  /// sum a_l - 1
  double r0 = 0.0;
  /// sum l a_l + lambda a
  double r1 = 0.0;
  Rational exact_r0;
  Rational exact_r1;
};

ConsistencyResiduals consistency_residuals(const Scheme& scheme);

struct AmplificationSample {
  double theta = 0.0;
  std::complex<double> value;
  double modulus = 0.0;
};

/// C(theta) = sum_l a_l e^{i l theta}
std::complex<double> symbol(const Scheme& scheme, double theta);
/// dC/dtheta
std::complex<double> symbol_derivative(const Scheme& scheme, double theta);

AmplificationSample amplification_factor(const Scheme& scheme, double theta);

struct VonNeumannResult {
  double sup = 0.0;
  /// Local maximizers of |C| within refine_tol of sup, sorted.
  std::vector<double> argmax_thetas;
  /// True when |C| is constant to within refine_tol over the samples.
  bool flat = false;
};

/// Global maximum of |C| over (-pi, pi]: dense sampling, then derivative
/// bisection around every sampled local maximum.
VonNeumannResult von_neumann_sup(const Scheme& scheme, int n_samples = 1 << 14,
                                 double refine_tol = 1e-12);

/// v_g(theta) = -(1/lambda) Im(C'(theta) / C(theta)). Throws
/// std::domain_error where C vanishes.
double group_velocity(const Scheme& scheme, double theta);

struct WaveMode {
  double theta = 0.0;
  std::complex<double> z;
  std::complex<double> kappa;
  double group_velocity = 0.0;
  /// | |z| - 1 | at the located tangency point.
  double tolerance = 0.0;
};

/// Tangency points of the symbol curve with the unit circle. Throws
/// std::domain_error when the scheme violates the von Neumann condition by
/// more than tol, or when |C| == 1 identically (no isolated modes).
std::vector<WaveMode> unimodular_modes(const Scheme& scheme, double tol = 1e-8,
                                       int n_samples = 1 << 14);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

}  // namespace fdstab
