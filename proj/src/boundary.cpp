#include "fdstab/boundary.hpp"

#include <stdexcept>
#include <string>

namespace fdstab {

namespace {
void check_order(int k) {
  if (k < 0 || k > kMaxExtrapolationOrder)
    throw std::invalid_argument("extrapolation order must be in [0, " +
                                std::to_string(kMaxExtrapolationOrder) + "], got " +
                                std::to_string(k));
}
}  // namespace

BoundaryConfig::BoundaryConfig(int k_, int r, int p)
    : k(k_), left_ghost_count(r), right_ghost_count(p) {
  if (k < 1) throw std::invalid_argument("extrapolation order k must be >= 1");
  check_order(k);
  if (r < 0 || p < 0) throw std::invalid_argument("ghost counts must be >= 0");
}

void BoundaryConfig::check_grid(int J) const {
  if (J + 1 < k)
    throw std::invalid_argument("grid too small: need J + 1 >= k (J = " + std::to_string(J) +
                                ", k = " + std::to_string(k) + ")");
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double backward_difference(std::span<const double> values, int k) {
  check_order(k);
  if (values.size() < static_cast<std::size_t>(k) + 1)
    throw std::invalid_argument("backward_difference: need k + 1 values");
  const std::size_t last = values.size() - 1;
  double sum = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum += sign * static_cast<double>(binomial(k, i)) * values[last - static_cast<std::size_t>(i)];
  }
  return sum;
}

std::vector<double> fill_right_ghosts(std::span<const double> interior_tail, int p, int k) {
  if (k < 1) throw std::invalid_argument("extrapolation order k must be >= 1");
  check_order(k);
  if (p < 0) throw std::invalid_argument("ghost count must be >= 0");
  if (interior_tail.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("fill_right_ghosts: interior tail shorter than k");

  // buf = u_{J+1-k}, ..., u_J, then ghosts appended in order
  std::vector<double> buf(interior_tail.end() - k, interior_tail.end());
  buf.reserve(static_cast<std::size_t>(k + p));
  for (int mu = 1; mu <= p; ++mu) {
    const std::size_t pos = buf.size();
    double g = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      g -= sign * static_cast<double>(binomial(k, i)) * buf[pos - static_cast<std::size_t>(i)];
    }
    buf.push_back(g);
  }
  return {buf.begin() + k, buf.end()};
}

std::vector<double> fill_left_ghosts(int r) {
  if (r < 0) throw std::invalid_argument("ghost count must be >= 0");
  return std::vector<double>(static_cast<std::size_t>(r), 0.0);
}

std::vector<double> right_ghost_weights(int p, int k) {
  std::vector<double> w(static_cast<std::size_t>(p) * static_cast<std::size_t>(k), 0.0);
  std::vector<double> unit(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < k; ++i) {
    unit.assign(unit.size(), 0.0);
    unit[static_cast<std::size_t>(i)] = 1.0;
    const auto g = fill_right_ghosts(unit, p, k);
    for (int mu = 0; mu < p; ++mu)
      w[static_cast<std::size_t>(mu * k + i)] = g[static_cast<std::size_t>(mu)];
  }
  return w;
}

}  // namespace fdstab
