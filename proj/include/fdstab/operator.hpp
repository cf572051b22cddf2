#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fdstab/boundary.hpp"
#include "fdstab/stencil.hpp"

namespace fdstab {

/// Uniform grid x_j = j dx on [0, L], j = 0..J+1, with dt = lambda dx.
struct Grid {
  int J = 0;
  double L = 1.0;
  double dx = 0.0;
  double dt = 0.0;

  static Grid make(int J, double lambda, double L = 1.0);

  std::size_t size() const { return static_cast<std::size_t>(J) + 1; }
  double x(int j) const { return j * dx; }
};

using StateVector = std::vector<double>;

/// Largest J for which a dense iteration matrix is built.
inline constexpr int kMaxDenseJ = 20000;

/// One step of the interval scheme: Dirichlet zeros on the left, order-k
/// extrapolated ghosts on the right, both rebuilt from u on every call.
class IntervalStepper {
 public:
  IntervalStepper(const Scheme& scheme, int k, int J);

  int J() const { return J_; }
  int k() const { return k_; }
  std::size_t size() const { return static_cast<std::size_t>(J_) + 1; }
  std::size_t scratch_size() const { return size() + static_cast<std::size_t>(r_ + p_); }

  /// out = A u. scratch must hold scratch_size() doubles; u and out must not
  /// alias.
  void apply(std::span<const double> u, std::span<double> out, std::span<double> scratch) const;

  StateVector step(std::span<const double> u) const;

 private:
  std::vector<double> coeffs_;
  std::vector<double> ghost_weights_;  // p x k, row-major
  int r_;
  int p_;
  int k_;
  int J_;
};

/// Throws std::invalid_argument when the grid cannot host the stencil or
/// the closure (J + 1 < k or J + 1 < r + p).
StateVector step_interval(const Scheme& scheme, int k, std::span<const double> u);

struct IterationMatrix {
  Eigen::MatrixXd entries;
  std::string scheme_name;
  int k = 0;
  int J = 0;

  Eigen::Index n() const { return entries.rows(); }
};

/// Column j of A is the stepper applied to e_j; columns are filled in
/// parallel.
IterationMatrix assemble_matrix(const Scheme& scheme, int k, int J);

/// Finite-support sequence on Z: values[i] sits at index offset + i.
struct LatticeSequence {
  std::int64_t offset = 0;
  std::vector<double> values;

  bool empty() const { return values.empty(); }
  std::int64_t first() const { return offset; }
  std::int64_t last() const { return offset + static_cast<std::int64_t>(values.size()) - 1; }
  double at(std::int64_t j) const;
  double norm() const;
};

/// Convolution (T u)_j = sum_l a_l u_{j+l} on Z. Support [m, M] -> [m-p, M+r].
LatticeSequence step_lattice(const Scheme& scheme, const LatticeSequence& u);

/// Half-line scheme on j >= 0 with zero left ghosts. Input support must lie
/// in [0, inf).
LatticeSequence step_halfline_inflow(const Scheme& scheme, const LatticeSequence& u);

/// Half-line scheme on j <= J with order-k extrapolated right ghosts. Input
/// support must lie in (-inf, J].
LatticeSequence step_halfline_outflow(const Scheme& scheme, int k, std::int64_t J,
                                      const LatticeSequence& u);

struct HalflineRun {
  /// Plain l2 norms sqrt(sum u_j^2), index n = after n steps (0 = initial).
  std::vector<double> norms;
  LatticeSequence final_state;
};

/// n_steps of the inflow problem on a window preallocated from the horizon
/// (support grows by at most r per step), so nothing ever reaches an
/// artificial right edge. Throws std::logic_error if the window is exceeded.
HalflineRun run_halfline_inflow(const Scheme& scheme, const LatticeSequence& u0, int n_steps);

/// Same for the outflow problem; support grows left by at most p per step.
HalflineRun run_halfline_outflow(const Scheme& scheme, int k, std::int64_t J,
                                 const LatticeSequence& u0, int n_steps);

}  // namespace fdstab
