#include "fdstab/simulate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fdstab/kernels.hpp"

namespace fdstab {

InitialCondition InitialCondition::gaussian(double center, double width) {
  InitialCondition ic;
  ic.kind = IcKind::Gaussian;
  ic.center = center;
  ic.width = width;
  return ic;
}

InitialCondition InitialCondition::wavepacket(double theta, double center, double width) {
  InitialCondition ic = gaussian(center, width);
  ic.kind = IcKind::Wavepacket;
  ic.packet_theta = theta;
  return ic;
}

InitialCondition InitialCondition::function(ScalarFunction f) {
  InitialCondition ic;
  ic.kind = IcKind::Custom;
  ic.custom = std::move(f);
  return ic;
}

double InitialCondition::eval(double x, const Grid& grid) const {
  const double d = x - center;
  switch (kind) {
    case IcKind::Gaussian: return std::exp(-width * d * d);
    case IcKind::Wavepacket: return std::cos(packet_theta / grid.dx * d) * std::exp(-width * d * d);
    case IcKind::Custom:
      if (!custom) throw std::invalid_argument("custom initial condition has no function");
      return custom(x);
  }
  return 0.0;
}

std::string InitialCondition::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case IcKind::Gaussian: os << "gaussian(center=" << center << ",width=" << width << ")"; break;
    case IcKind::Wavepacket:
      os << "wavepacket(theta=" << packet_theta << ",center=" << center << ",width=" << width << ")";
      break;
    case IcKind::Custom: os << "custom"; break;
  }
  os << (sampling == Sampling::Point ? ",point" : ",cell_average");
  return os.str();
}

StateVector build_initial(const InitialCondition& ic, const Grid& grid) {
  StateVector u(grid.size());
  if (ic.sampling == Sampling::Point) {
    const double shift = ic.center / grid.dx;
    for (int j = 0; j <= grid.J; ++j) {
      const double x = grid.x(j);
      if (ic.kind == IcKind::Wavepacket) {
        const double d = x - ic.center;
        u[static_cast<std::size_t>(j)] =
            std::cos(ic.packet_theta * (j - shift)) * std::exp(-ic.width * d * d);
      } else {
        u[static_cast<std::size_t>(j)] = ic.eval(x, grid);
      }
    }
    return u;
  }
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double x) { return ic.eval(x, grid); };
  for (int j = 0; j <= grid.J; ++j) {
    const double a = grid.x(j);
    const double b = (j == grid.J) ? grid.L : grid.x(j + 1);
    const double integral = gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-10);
    u[static_cast<std::size_t>(j)] = integral / (b - a);
  }
  return u;
}

double grid_l2_norm(std::span<const double> u, double dx) {
  return std::sqrt(dx * kernels::sum_squares(u));
}

std::optional<double> SimulationRecord::ln_l2_norm(std::size_t n) const {
  const double v = l2_norms.at(n);
  if (!(v > 0.0) || !std::isfinite(v)) return std::nullopt;
  return std::log(v);
}

SimulationRecord run(const Scheme& scheme, int k, const Grid& grid, const StateVector& u0,
                     int n_steps, int snapshot_stride, std::string ic_description) {
  if (n_steps < 1) throw std::invalid_argument("run: n_steps must be >= 1");
  if (u0.size() != grid.size()) throw std::invalid_argument("run: initial state does not match grid");
  const IntervalStepper stepper(scheme, k, grid.J);

  SimulationRecord rec;
  rec.dt = grid.dt;
  rec.scheme_name = scheme.name();
  rec.k = k;
  rec.J = grid.J;
  rec.ic = std::move(ic_description);
  rec.l2_norms.reserve(static_cast<std::size_t>(n_steps) + 1);

  StateVector cur = u0;
  StateVector next(cur.size());
  std::vector<double> scratch(stepper.scratch_size());
  const double norm0 = grid_l2_norm(cur, grid.dx);
  rec.l2_norms.push_back(norm0);
  if (snapshot_stride > 0) rec.snapshots.emplace_back(0, cur);
  const double limit = norm0 > 0.0 ? kOverflowFactor * norm0 : kOverflowFactor;

  for (int n = 1; n <= n_steps; ++n) {
    stepper.apply(cur, next, scratch);
    std::swap(cur, next);
    const double norm = grid_l2_norm(cur, grid.dx);
    if (!std::isfinite(norm) || norm > limit) {
      rec.truncated = true;
      break;
    }
    rec.l2_norms.push_back(norm);
    if (snapshot_stride > 0 && n % snapshot_stride == 0) rec.snapshots.emplace_back(n, cur);
  }
  return rec;
}

SimulationRecord run(const Scheme& scheme, int k, const Grid& grid, const InitialCondition& ic,
                     int n_steps, int snapshot_stride) {
  return run(scheme, k, grid, build_initial(ic, grid), n_steps, snapshot_stride, ic.describe());
}

RegressionResult growth_slope(const SimulationRecord& record, double t_start, double t_end) {
  std::vector<double> ts, ys;
  for (std::size_t n = 0; n < record.l2_norms.size(); ++n) {
    const double t = record.time(n);
    if (t < t_start || t > t_end) continue;
    if (auto y = record.ln_l2_norm(n)) {
      ts.push_back(t);
      ys.push_back(*y);
    }
  }
  if (ts.size() < 10)
    throw std::invalid_argument("growth_slope: window holds fewer than 10 usable samples");

  const auto m = static_cast<double>(ts.size());
  long double st = 0, sy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sy += ys[i];
  }
  const long double tbar = st / m;
  const long double ybar = sy / m;
  long double stt = 0, sty = 0, syy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const long double dt = ts[i] - tbar;
    const long double dy = ys[i] - ybar;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  RegressionResult res;
  res.samples = ts.size();
  res.t_start = ts.front();
  res.t_end = ts.back();
  res.slope = static_cast<double>(sty / stt);
  res.intercept = static_cast<double>(ybar - sty / stt * tbar);
  if (syy > 0) res.r_squared = static_cast<double>((sty * sty) / (stt * syy));
  return res;
}

std::pair<double, double> default_window(const SimulationRecord& record, double L) {
  const double t_end = record.time(static_cast<std::size_t>(record.steps_completed()));
  return {std::max(0.5 * t_end, 2.0 * L), t_end};
}

StateVector exact_solution(const ScalarFunction& f, double a, double t, const Grid& grid) {
  if (t < 0.0) throw std::invalid_argument("exact_solution: t must be >= 0");
  StateVector u(grid.size());
  for (int j = 0; j <= grid.J; ++j) {
    const double s = grid.x(j) - a * t;
    u[static_cast<std::size_t>(j)] = s < 0.0 ? 0.0 : f(s);
  }
  return u;
}

double lemma1_identity_residual(std::span<const double> u, double lam_a, double nu) {
  if (u.size() < 2) throw std::invalid_argument("lemma1_identity_residual: need J >= 1");
  const std::size_t n = u.size();
  const double am = 0.5 * (lam_a + nu);
  const double a0 = 1.0 - nu;
  const double ap = 0.5 * (nu - lam_a);
  // u_{-1} = 0, u_{J+1} = u_J
  auto U = [&](std::ptrdiff_t j) -> double {
    if (j < 0) return 0.0;
    if (j >= static_cast<std::ptrdiff_t>(n)) return u[n - 1];
    return u[static_cast<std::size_t>(j)];
  };
  double lhs = 0.0;
  double first = 0.0;   // sum (D_- u_j)^2 + (D_+ u_j)^2
  double second = 0.0;  // sum (D_+ D_- u_j)^2
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
    const double v = am * U(j - 1) + a0 * U(j) + ap * U(j + 1);
    lhs += v * v - U(j) * U(j);
    const double dm = U(j) - U(j - 1);
    const double dp = U(j + 1) - U(j);
    first += dm * dm + dp * dp;
    const double dd = U(j + 1) - 2.0 * U(j) + U(j - 1);
    second += dd * dd;
  }
  const double la2 = lam_a * lam_a;
  const double rhs = -0.5 * (nu - la2) * first + 0.25 * (nu * nu - la2) * second -
                     lam_a * u[n - 1] * u[n - 1] - 0.5 * nu * (1.0 - lam_a) * u[0] * u[0];
  return std::abs(lhs - rhs);
}

std::vector<ConvergenceRow> convergence_check(const Scheme& scheme, int k, const ScalarFunction& f,
                                              double t_final, const std::vector<int>& J_list,
                                              double L) {
  std::vector<ConvergenceRow> rows;
  for (int J : J_list) {
    const Grid grid = Grid::make(J, scheme.lambda(), L);
    const int steps = static_cast<int>(std::lround(t_final / grid.dt));
    StateVector u(grid.size());
    for (int j = 0; j <= J; ++j) u[static_cast<std::size_t>(j)] = f(grid.x(j));
    const IntervalStepper stepper(scheme, k, J);
    StateVector next(u.size());
    std::vector<double> scratch(stepper.scratch_size());
    for (int n = 0; n < steps; ++n) {
      stepper.apply(u, next, scratch);
      std::swap(u, next);
    }
    const auto exact = exact_solution(f, scheme.velocity(), steps * grid.dt, grid);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= exact[i];
    rows.push_back({J, steps, grid_l2_norm(u, grid.dx)});
  }
  return rows;
}

}  // namespace fdstab
