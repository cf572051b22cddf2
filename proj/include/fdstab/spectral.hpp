#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fdstab/operator.hpp"
#include "fdstab/stencil.hpp"

namespace fdstab {

/// Largest dimension the dense eigensolver is used for.
inline constexpr Eigen::Index kDenseEigenMax = 2500;

/// Raised when an iterative method runs out of budget; carries what it had.
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, double best_estimate, double residual)
      : std::runtime_error(what), best_estimate_(best_estimate), residual_(residual) {}
  double best_estimate() const { return best_estimate_; }
  double residual() const { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

enum class EigenMethod { Auto, Dense, Iterative };

struct SpectralReport {
  double rho = 0.0;
  /// Sorted by decreasing modulus.
  std::vector<std::complex<double>> leading_eigenvalues;
  EigenMethod method = EigenMethod::Dense;
  /// ||A v - z v|| / ||v|| for the dominant pair.
  double residual = 0.0;
  int iterations = 0;
};

std::string to_string(EigenMethod m);

/// All eigenvalues through a dense nonsymmetric solver (n <= kDenseEigenMax).
std::vector<std::complex<double>> dense_eigen_oracle(const Eigen::MatrixXd& A);

/// Spectral radius. Auto uses the dense solver up to kDenseEigenMax and
/// subspace iteration with Rayleigh-Ritz projection beyond; the projected
/// problem resolves dominant complex-conjugate pairs.
SpectralReport spectral_radius(const Eigen::MatrixXd& A, double tol = 1e-8,
                               EigenMethod method = EigenMethod::Auto, int n_leading = 6);
inline SpectralReport spectral_radius(const IterationMatrix& A, double tol = 1e-8,
                                      EigenMethod method = EigenMethod::Auto, int n_leading = 6) {
  return spectral_radius(A.entries, tol, method, n_leading);
}

struct SubspaceOptions {
  int block_size = 12;
  int max_iterations = 20000;
  unsigned seed = 12345;
};

SpectralReport subspace_iteration(const Eigen::MatrixXd& A, double tol, int n_leading = 6,
                                  const SubspaceOptions& opts = {});

/// Largest singular value: dense SVD for moderate n, power iteration on
/// A^T A otherwise.
double operator_norm(const Eigen::MatrixXd& A, double tol = 1e-12);
inline double operator_norm(const IterationMatrix& A, double tol = 1e-12) {
  return operator_norm(A.entries, tol);
}

struct PowerBoundResult {
  double sup_norm = 0.0;
  int argmax_n = 0;
  /// series[n-1] = ||A^n||_2, n = 1..n_max
  std::vector<double> series;
};

/// ||A^n||_2 for n = 1..n_max; powers are renormalised every step and the
/// scale carried in log form.
PowerBoundResult power_bound_probe(const Eigen::MatrixXd& A, int n_max);
inline PowerBoundResult power_bound_probe(const IterationMatrix& A, int n_max) {
  return power_bound_probe(A.entries, n_max);
}

struct RhoScanRow {
  int J = 0;
  double rho = 0.0;
  /// J (rho - 1)
  double excess = 0.0;
  /// (rho - 1) / dx with dx = 1/(J+1)
  double rate = 0.0;
};

/// Independent dense solves for each J, run in parallel. No monotonicity in
/// J is implied; the excess is often very sensitive to J.
std::vector<RhoScanRow> rho_vs_J_scan(const Scheme& scheme, int k, const std::vector<int>& J_list,
                                      double tol = 1e-8);

}  // namespace fdstab
