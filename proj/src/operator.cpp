#include "fdstab/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdstab/kernels.hpp"

namespace fdstab {

Grid Grid::make(int J, double lambda, double L) {
  if (J < 1) throw std::invalid_argument("grid: J must be >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("grid: L must be positive");
  if (!(lambda > 0.0)) throw std::invalid_argument("grid: lambda must be positive");
  Grid g;
  g.J = J;
  g.L = L;
  g.dx = L / static_cast<double>(J + 1);
  g.dt = lambda * g.dx;
  return g;
}

IntervalStepper::IntervalStepper(const Scheme& scheme, int k, int J)
    : coeffs_(scheme.coefficients()), r_(scheme.r()), p_(scheme.p()), k_(k), J_(J) {
  BoundaryConfig bc(k, r_, p_);
  bc.check_grid(J);
  if (J + 1 < r_ + p_)
    throw std::invalid_argument("grid too small: stencil wider than the domain (J + 1 < r + p)");
  ghost_weights_ = right_ghost_weights(p_, k_);
}

void IntervalStepper::apply(std::span<const double> u, std::span<double> out,
                            std::span<double> scratch) const {
  const std::size_t n = size();
  const auto r = static_cast<std::size_t>(r_);
  const auto p = static_cast<std::size_t>(p_);
  const auto k = static_cast<std::size_t>(k_);
  if (u.size() != n || out.size() != n || scratch.size() < n + r + p)
    throw std::invalid_argument("IntervalStepper::apply: size mismatch");

  std::fill(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(r), 0.0);
  std::copy(u.begin(), u.end(), scratch.begin() + static_cast<std::ptrdiff_t>(r));
  const double* tail = u.data() + (n - k);
  for (std::size_t mu = 0; mu < p; ++mu) {
    double g = 0.0;
    for (std::size_t i = 0; i < k; ++i) g += ghost_weights_[mu * k + i] * tail[i];
    scratch[r + n + mu] = g;
  }
  kernels::stencil_apply(coeffs_, scratch.first(n + r + p), out);
}

StateVector IntervalStepper::step(std::span<const double> u) const {
  StateVector out(size());
  std::vector<double> scratch(scratch_size());
  apply(u, out, scratch);
  return out;
}

StateVector step_interval(const Scheme& scheme, int k, std::span<const double> u) {
  if (u.empty()) throw std::invalid_argument("step_interval: empty state");
  IntervalStepper stepper(scheme, k, static_cast<int>(u.size()) - 1);
  return stepper.step(u);
}

IterationMatrix assemble_matrix(const Scheme& scheme, int k, int J) {
  if (J > kMaxDenseJ)
    throw std::invalid_argument("assemble_matrix: J exceeds dense limit " + std::to_string(kMaxDenseJ));
  const IntervalStepper stepper(scheme, k, J);
  const auto n = static_cast<Eigen::Index>(stepper.size());
  IterationMatrix A;
  A.entries = Eigen::MatrixXd::Zero(n, n);
  A.scheme_name = scheme.name();
  A.k = k;
  A.J = J;
  double* data = A.entries.data();
#pragma omp parallel
  {
    std::vector<double> unit(static_cast<std::size_t>(n), 0.0);
    std::vector<double> scratch(stepper.scratch_size());
#pragma omp for schedule(static)
    for (Eigen::Index j = 0; j < n; ++j) {
      unit[static_cast<std::size_t>(j)] = 1.0;
      std::span<double> col(data + j * n, static_cast<std::size_t>(n));
      stepper.apply(unit, col, scratch);
      unit[static_cast<std::size_t>(j)] = 0.0;
    }
  }
  return A;
}

double LatticeSequence::at(std::int64_t j) const {
  if (values.empty() || j < first() || j > last()) return 0.0;
  return values[static_cast<std::size_t>(j - offset)];
}

double LatticeSequence::norm() const { return std::sqrt(kernels::sum_squares(values)); }

namespace {

// out_j = sum_l a_l u_{j+l} for j in [lo, hi], reading u through `value`.
template <class Get>
LatticeSequence convolve_range(const Scheme& s, std::int64_t lo, std::int64_t hi, Get&& value) {
  LatticeSequence out;
  if (hi < lo) return out;
  out.offset = lo;
  out.values.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) {
    double acc = 0.0;
    for (int l = -s.r(); l <= s.p(); ++l) acc += s.coeff(l) * value(j + l);
    out.values[static_cast<std::size_t>(j - lo)] = acc;
  }
  return out;
}

}  // namespace

LatticeSequence step_lattice(const Scheme& scheme, const LatticeSequence& u) {
  if (u.empty()) return {};
  return convolve_range(scheme, u.first() - scheme.p(), u.last() + scheme.r(),
                        [&](std::int64_t i) { return u.at(i); });
}

LatticeSequence step_halfline_inflow(const Scheme& scheme, const LatticeSequence& u) {
  if (u.empty()) return {};
  if (u.first() < 0) throw std::invalid_argument("step_halfline_inflow: support must be in j >= 0");
  return convolve_range(scheme, std::max<std::int64_t>(0, u.first() - scheme.p()),
                        u.last() + scheme.r(), [&](std::int64_t i) { return u.at(i); });
}

LatticeSequence step_halfline_outflow(const Scheme& scheme, int k, std::int64_t J,
                                      const LatticeSequence& u) {
  if (u.empty()) return {};
  if (u.last() > J) throw std::invalid_argument("step_halfline_outflow: support must be in j <= J");
  BoundaryConfig bc(k, scheme.r(), scheme.p());
  std::vector<double> tail(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) tail[static_cast<std::size_t>(i)] = u.at(J - k + 1 + i);
  const auto ghosts = fill_right_ghosts(tail, scheme.p(), k);
  return convolve_range(scheme, u.first() - scheme.p(), J, [&](std::int64_t i) {
    return i <= J ? u.at(i) : ghosts[static_cast<std::size_t>(i - J - 1)];
  });
}

HalflineRun run_halfline_inflow(const Scheme& scheme, const LatticeSequence& u0, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  if (!u0.empty() && u0.first() < 0)
    throw std::invalid_argument("run_halfline_inflow: support must be in j >= 0");
  const std::int64_t r = scheme.r();
  const std::int64_t p = scheme.p();
  const std::int64_t hi0 = u0.empty() ? 0 : u0.last();
  const std::int64_t window = hi0 + r * n_steps + 1;  // j = 0 .. window-1

  // cur/next hold j = -r .. window-1+p so the stencil never bounds-checks
  const auto total = static_cast<std::size_t>(window + r + p);
  std::vector<double> cur(total, 0.0), next(total, 0.0);
  for (std::size_t i = 0; i < u0.values.size(); ++i)
    cur[static_cast<std::size_t>(u0.offset + r) + i] = u0.values[i];

  HalflineRun run;
  run.norms.reserve(static_cast<std::size_t>(n_steps) + 1);
  auto interior = [&](std::vector<double>& v) {
    return std::span<const double>(v).subspan(static_cast<std::size_t>(r),
                                              static_cast<std::size_t>(window));
  };
  run.norms.push_back(std::sqrt(kernels::sum_squares(interior(cur))));
  std::int64_t hi = hi0;
  for (int n = 0; n < n_steps; ++n) {
    const std::int64_t new_hi = hi + r;
    if (new_hi >= window) throw std::logic_error("half-line inflow window exhausted");
    const auto len = static_cast<std::size_t>(new_hi + 1);
    kernels::stencil_apply(scheme.coefficients(),
                           std::span<const double>(cur).first(len + static_cast<std::size_t>(r + p)),
                           std::span<double>(next).subspan(static_cast<std::size_t>(r), len));
    std::swap(cur, next);
    hi = new_hi;
    run.norms.push_back(std::sqrt(kernels::sum_squares(interior(cur))));
  }
  run.final_state.offset = 0;
  run.final_state.values.assign(cur.begin() + r, cur.begin() + r + hi + 1);
  return run;
}

HalflineRun run_halfline_outflow(const Scheme& scheme, int k, std::int64_t J,
                                 const LatticeSequence& u0, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
  if (!u0.empty() && u0.last() > J)
    throw std::invalid_argument("run_halfline_outflow: support must be in j <= J");
  BoundaryConfig bc(k, scheme.r(), scheme.p());
  const std::int64_t r = scheme.r();
  const std::int64_t p = scheme.p();
  const std::int64_t lo0 = u0.empty() ? J : std::min(u0.first(), J - k + 1);
  const std::int64_t base = lo0 - p * n_steps;  // leftmost index ever reached
  const std::int64_t window = J - base + 1;     // j = base .. J

  // buffers hold j = base - r .. J + p
  const auto total = static_cast<std::size_t>(window + r + p);
  const auto idx = [&](std::int64_t j) { return static_cast<std::size_t>(j - base + r); };
  std::vector<double> cur(total, 0.0), next(total, 0.0);
  for (std::size_t i = 0; i < u0.values.size(); ++i)
    cur[idx(u0.offset) + i] = u0.values[i];

  const auto weights = right_ghost_weights(static_cast<int>(p), k);
  const auto ku = static_cast<std::size_t>(k);
  auto fill_ghosts = [&](std::vector<double>& v) {
    const double* tail = v.data() + idx(J - k + 1);
    for (std::size_t mu = 0; mu < static_cast<std::size_t>(p); ++mu) {
      double g = 0.0;
      for (std::size_t i = 0; i < ku; ++i) g += weights[mu * ku + i] * tail[i];
      v[idx(J) + 1 + mu] = g;
    }
  };
  auto interior_norm = [&](const std::vector<double>& v) {
    return std::sqrt(kernels::sum_squares(
        std::span<const double>(v).subspan(idx(base), static_cast<std::size_t>(window))));
  };

  HalflineRun run;
  run.norms.reserve(static_cast<std::size_t>(n_steps) + 1);
  run.norms.push_back(interior_norm(cur));
  std::int64_t lo = lo0;
  for (int n = 0; n < n_steps; ++n) {
    const std::int64_t new_lo = lo - p;
    if (new_lo < base) throw std::logic_error("half-line outflow window exhausted");
    fill_ghosts(cur);
    const auto len = static_cast<std::size_t>(J - new_lo + 1);
    kernels::stencil_apply(scheme.coefficients(),
                           std::span<const double>(cur).subspan(idx(new_lo) - static_cast<std::size_t>(r),
                                                                len + static_cast<std::size_t>(r + p)),
                           std::span<double>(next).subspan(idx(new_lo), len));
    std::swap(cur, next);
    lo = new_lo;
    run.norms.push_back(interior_norm(cur));
  }
  run.final_state.offset = lo;
  run.final_state.values.assign(cur.begin() + static_cast<std::ptrdiff_t>(idx(lo)),
                                cur.begin() + static_cast<std::ptrdiff_t>(idx(J) + 1));
  return run;
}

}  // namespace fdstab
