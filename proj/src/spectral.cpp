#include "fdstab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fdstab {

namespace {

using cd = std::complex<double>;

void sort_by_modulus(std::vector<cd>& v) {
  std::stable_sort(v.begin(), v.end(), [](const cd& a, const cd& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });
}

double pair_residual(const Eigen::MatrixXd& A, const Eigen::VectorXcd& v, cd z) {
  const Eigen::VectorXcd Av = A.cast<cd>() * v;
  return (Av - z * v).norm() / v.norm();
}

}  // namespace

std::string to_string(EigenMethod m) {
  switch (m) {
    case EigenMethod::Auto: return "auto";
    case EigenMethod::Dense: return "dense";
    case EigenMethod::Iterative: return "iterative";
  }
  return "?";
}

std::vector<cd> dense_eigen_oracle(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("dense_eigen_oracle: matrix not square");
  if (A.rows() > kDenseEigenMax)
    throw std::invalid_argument("dense_eigen_oracle: n exceeds " + std::to_string(kDenseEigenMax));
  if (A.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NumericFailure("dense eigensolver did not converge", 0.0, 0.0);
  std::vector<cd> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  sort_by_modulus(out);
  return out;
}

namespace {

SpectralReport dense_report(const Eigen::MatrixXd& A, double tol, int n_leading) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) throw NumericFailure("dense eigensolver did not converge", 0.0, 0.0);
  const auto& ev = es.eigenvalues();
  Eigen::Index top = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (std::abs(ev[i]) > std::abs(ev[top])) top = i;

  SpectralReport rep;
  rep.method = EigenMethod::Dense;
  rep.rho = std::abs(ev[top]);
  rep.residual = pair_residual(A, es.eigenvectors().col(top), ev[top]);
  std::vector<cd> all(ev.data(), ev.data() + ev.size());
  sort_by_modulus(all);
  all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(n_leading, 1))));
  rep.leading_eigenvalues = std::move(all);
  if (rep.residual > tol * std::max(1.0, rep.rho))
    throw NumericFailure("dense eigenpair residual above tolerance", rep.rho, rep.residual);
  return rep;
}

}  // namespace

SpectralReport subspace_iteration(const Eigen::MatrixXd& A, double tol, int n_leading,
                                  const SubspaceOptions& opts) {
  const Eigen::Index n = A.rows();
  if (n == 0) throw std::invalid_argument("subspace_iteration: empty matrix");
  const Eigen::Index m = std::min<Eigen::Index>(n, std::max(opts.block_size, 2));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd Q(n, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < n; ++i) Q(i, j) = gauss(rng);
  Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Q).householderQ() * Eigen::MatrixXd::Identity(n, m);

  SpectralReport rep;
  rep.method = EigenMethod::Iterative;
  double best_rho = 0.0;
  double best_res = std::numeric_limits<double>::infinity();
  constexpr int kCheckEvery = 5;

  for (int it = 1; it <= opts.max_iterations; ++it) {
    Eigen::MatrixXd Z = A * Q;
    if (it % kCheckEvery == 0 || it == opts.max_iterations) {
      // Rayleigh-Ritz on span(Q): H = Q^T A Q
      const Eigen::MatrixXd H = Q.transpose() * Z;
      Eigen::EigenSolver<Eigen::MatrixXd> es(H, true);
      const auto& ritz = es.eigenvalues();
      Eigen::Index top = 0;
      for (Eigen::Index i = 1; i < ritz.size(); ++i)
        if (std::abs(ritz[i]) > std::abs(ritz[top])) top = i;
      const Eigen::VectorXcd y = Q.cast<cd>() * es.eigenvectors().col(top);
      const double res = pair_residual(A, y, ritz[top]);
      if (res < best_res) {
        best_res = res;
        best_rho = std::abs(ritz[top]);
      }
      if (res <= tol * std::max(1.0, std::abs(ritz[top]))) {
        rep.rho = std::abs(ritz[top]);
        rep.residual = res;
        rep.iterations = it;
        std::vector<cd> all(ritz.data(), ritz.data() + ritz.size());
        sort_by_modulus(all);
        all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(n_leading, 1))));
        rep.leading_eigenvalues = std::move(all);
        return rep;
      }
    }
    Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Z).householderQ() * Eigen::MatrixXd::Identity(n, m);
  }
  throw NumericFailure("subspace iteration did not converge", best_rho, best_res);
}

SpectralReport spectral_radius(const Eigen::MatrixXd& A, double tol, EigenMethod method,
                               int n_leading) {
  if (A.rows() != A.cols()) throw std::invalid_argument("spectral_radius: matrix not square");
  if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be > 0");
  if (method == EigenMethod::Auto)
    method = A.rows() <= kDenseEigenMax ? EigenMethod::Dense : EigenMethod::Iterative;
  if (method == EigenMethod::Dense) {
    if (A.rows() > kDenseEigenMax)
      throw std::invalid_argument("spectral_radius: n too large for the dense path");
    return dense_report(A, tol, n_leading);
  }
  return subspace_iteration(A, tol, n_leading);
}

double operator_norm(const Eigen::MatrixXd& A, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("operator_norm: tol must be > 0");
  if (A.size() == 0) return 0.0;
  if (A.rows() <= 1200 && A.cols() <= 1200) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    return svd.singularValues()(0);
  }
  // Power iteration on A^T A with a deterministic start.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(A.cols()).normalized();
  double sigma = 0.0;
  for (int it = 0; it < 100000; ++it) {
    Eigen::VectorXd w = A.transpose() * (A * v);
    const double lam = w.norm();
    if (lam == 0.0) return 0.0;
    v = w / lam;
    const double next = std::sqrt(lam);
    if (std::abs(next - sigma) <= tol * next) return next;
    sigma = next;
  }
  throw NumericFailure("operator_norm: power iteration did not converge", sigma, 0.0);
}

PowerBoundResult power_bound_probe(const Eigen::MatrixXd& A, int n_max) {
  if (n_max < 1) throw std::invalid_argument("power_bound_probe: n_max must be >= 1");
  PowerBoundResult out;
  out.series.reserve(static_cast<std::size_t>(n_max));
  Eigen::MatrixXd P = A;  // A^n / exp(log_scale)
  double log_scale = 0.0;
  bool zero = false;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1 && !zero) P = P * A;
    double s = 0.0;
    if (!zero) {
      Eigen::BDCSVD<Eigen::MatrixXd> svd(P);
      s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
    if (s == 0.0) {
      zero = true;
      out.series.push_back(0.0);
      continue;
    }
    const double log_norm = log_scale + std::log(s);
    if (log_norm > std::log(std::numeric_limits<double>::max()))
      throw NumericFailure("power_bound_probe: ||A^n|| overflows at n = " + std::to_string(n),
                           static_cast<double>(n), log_norm);
    out.series.push_back(std::exp(log_norm));
    P /= s;
    log_scale = log_norm;
  }
  const auto it = std::max_element(out.series.begin(), out.series.end());
  out.sup_norm = *it;
  out.argmax_n = static_cast<int>(it - out.series.begin()) + 1;
  return out;
}

std::vector<RhoScanRow> rho_vs_J_scan(const Scheme& scheme, int k, const std::vector<int>& J_list,
                                      double tol) {
  std::vector<RhoScanRow> rows(J_list.size());
  // Validate up front so the parallel loop cannot throw.
  for (int J : J_list) IntervalStepper(scheme, k, J);
  const auto n = static_cast<std::ptrdiff_t>(J_list.size());
  std::vector<std::string> errors(J_list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const int J = J_list[u];
    try {
      const auto A = assemble_matrix(scheme, k, J);
      const auto rep = spectral_radius(A, tol);
      rows[u] = {J, rep.rho, J * (rep.rho - 1.0), (rep.rho - 1.0) * (J + 1)};
    } catch (const std::exception& e) {
      errors[u] = e.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw NumericFailure("rho scan failed at J = " + std::to_string(J_list[i]) + ": " + errors[i], 0.0, 0.0);
  return rows;
}

}  // namespace fdstab
