#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdstab/stencil.hpp"

namespace fdstab {

/// Parameters for the parametrised builtins. Only the three-point family
/// reads them; coeff1/coeff2 ignore lam_a and nu.
struct BuiltinParams {
  double lam_a = 0.5;
  /// Numerical viscosity; required by "three-point", derived for the named
  /// members of the family.
  std::optional<double> nu;
  double lambda = 1.0;
};

/// Measured facts recorded with each builtin.
struct BuiltinInfo {
  std::string name;
  std::string description;
  /// Bound on |r0|, |r1| that the builtin's published coefficients meet.
  double residual_tol = 0.0;
  /// Designed unimodular frequencies (multiples of pi) and their group
  /// velocities, for the two long-stencil examples.
  std::vector<double> design_theta_over_pi;
  std::vector<double> design_group_velocity;
};

/// a_{-1} = (lam_a + nu)/2, a_0 = 1 - nu, a_1 = (nu - lam_a)/2, with zero end
/// coefficients trimmed (upwind has p = 0). Parameters are converted to exact
/// rationals from their double values.
Scheme three_point(double lam_a, double nu, double lambda = 1.0,
                   std::string name = "three-point");

Scheme identity_scheme();

/// r = p = 7 example with first-order extrapolation instabilities.
Scheme coeff1();
/// coeff1 with a_{-6} exactly as typeset (-30433/894654); kept for
/// comparison, it misses consistency by about 1e-5.
Scheme coeff1_as_printed();
/// r = p = 7 example with second-order extrapolation instabilities.
Scheme coeff2();

/// Names accepted by builtin().
std::vector<std::string> builtin_names();

/// Throws std::invalid_argument for unknown names or a three-point request
/// without nu.
Scheme builtin(std::string_view name, const BuiltinParams& params = {});

std::optional<BuiltinInfo> builtin_info(std::string_view name);

}  // namespace fdstab
