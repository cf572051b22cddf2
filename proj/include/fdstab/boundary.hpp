#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fdstab {

/// Largest extrapolation order accepted; binomials stay exact in 64 bits.
inline constexpr int kMaxExtrapolationOrder = 30;

/// Homogeneous Dirichlet inflow on the left, order-k extrapolation
/// (D_-^k u = 0 at every right ghost) on the outflow side.
struct BoundaryConfig {
  int k = 1;
  int left_ghost_count = 0;
  int right_ghost_count = 0;

  BoundaryConfig(int k, int r, int p);

  /// Throws std::invalid_argument unless J + 1 >= k.
  void check_grid(int J) const;
};

std::int64_t binomial(int n, int k);

/// (D_-^k u)_j from values[last - i] = u_{j - i}, i = 0..k.
double backward_difference(std::span<const double> values, int k);

/// Ghosts u_{J+1..J+p} solving D_-^k u_{J+mu} = 0 in increasing mu. Only the
/// last k entries of interior_tail (u_{J+1-k} .. u_J) are read.
std::vector<double> fill_right_ghosts(std::span<const double> interior_tail, int p, int k);

std::vector<double> fill_left_ghosts(int r);

/// p x k matrix W (row-major) with ghost mu = sum_i W[mu-1][i] * tail[i];
/// the closure is linear, so steppers precompute it once.
std::vector<double> right_ghost_weights(int p, int k);

}  // namespace fdstab
