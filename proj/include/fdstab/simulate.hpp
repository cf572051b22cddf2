#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdstab/operator.hpp"
#include "fdstab/stencil.hpp"

namespace fdstab {

using ScalarFunction = std::function<double(double)>;

enum class IcKind { Gaussian, Wavepacket, Custom };
enum class Sampling { Point, CellAverage };

/// gaussian:   f(x) = exp(-width (x - center)^2)
/// wavepacket: f(x) = cos((theta/dx)(x - center)) exp(-width (x - center)^2)
struct InitialCondition {
  IcKind kind = IcKind::Gaussian;
  double center = 0.5;
  double width = 50.0;
  /// Grid frequency theta (radians per cell), wavepacket only.
  double packet_theta = 0.0;
  Sampling sampling = Sampling::Point;
  ScalarFunction custom;

  static InitialCondition gaussian(double center = 0.5, double width = 50.0);
  static InitialCondition wavepacket(double theta, double center = 0.5, double width = 50.0);
  static InitialCondition function(ScalarFunction f);

  /// f(x); depends on the grid only for wave packets.
  double eval(double x, const Grid& grid) const;
  std::string describe() const;
};

/// Point samples f(x_j) or cell averages over [x_j, x_{j+1}] (adaptive
/// Gauss-Kronrod, relative tolerance 1e-10). Point-sampled wave packets are
/// evaluated as cos(theta (j - center/dx)) so the phase is exact on the grid.
StateVector build_initial(const InitialCondition& ic, const Grid& grid);

struct SimulationRecord {
  /// sqrt(dx sum_j u_j^2) after n steps, n = 0..steps_completed.
  std::vector<double> l2_norms;
  std::vector<std::pair<int, StateVector>> snapshots;
  double dt = 0.0;
  bool truncated = false;
  std::string scheme_name;
  int k = 0;
  int J = 0;
  std::string ic;

  int steps_completed() const { return static_cast<int>(l2_norms.size()) - 1; }
  double time(std::size_t n) const { return static_cast<double>(n) * dt; }
  /// ln of the norm; empty when the norm is zero.
  std::optional<double> ln_l2_norm(std::size_t n) const;
};

/// Stop once the norm exceeds this multiple of the initial norm.
inline constexpr double kOverflowFactor = 1e300;

/// Advances u0 n_steps times, recording the norm every step and the state
/// every snapshot_stride steps (0 disables snapshots). Deterministic.
SimulationRecord run(const Scheme& scheme, int k, const Grid& grid, const StateVector& u0,
                     int n_steps, int snapshot_stride = 0, std::string ic_description = "custom");
SimulationRecord run(const Scheme& scheme, int k, const Grid& grid, const InitialCondition& ic,
                     int n_steps, int snapshot_stride = 0);

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
  /// Empty when ln-norm is constant over the window.
  std::optional<double> r_squared;
  std::size_t samples = 0;
};

/// Least squares fit of ln||u^n|| against n dt over [t_start, t_end].
/// Throws std::invalid_argument with fewer than 10 usable samples.
RegressionResult growth_slope(const SimulationRecord& record, double t_start, double t_end);

/// Last half of the run, starting no earlier than two domain traversals
/// (t = 2L).
std::pair<double, double> default_window(const SimulationRecord& record, double L = 1.0);

/// u(t, x_j) = f(x_j - a t), with f taken as zero for negative arguments.
StateVector exact_solution(const ScalarFunction& f, double a, double t, const Grid& grid);

/// One three-point step with u_{-1} = 0, u_{J+1} = u_J, and the summed energy
/// identity for it; returns |LHS - RHS|. Holds for every real (lam_a, nu).
double lemma1_identity_residual(std::span<const double> u, double lam_a, double nu);

struct ConvergenceRow {
  int J = 0;
  int steps = 0;
  double l2_error = 0.0;
};

/// Runs point-sampled f to the step nearest t_final on each grid and measures
/// the dx-weighted l2 distance to the exact solution.
std::vector<ConvergenceRow> convergence_check(const Scheme& scheme, int k, const ScalarFunction& f,
                                              double t_final, const std::vector<int>& J_list,
                                              double L = 1.0);

/// sqrt(dx sum u_j^2)
double grid_l2_norm(std::span<const double> u, double dx);

}  // namespace fdstab
