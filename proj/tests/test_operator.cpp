#include <cmath>
#include <random>

#include "doctest.h"
#include "fdstab/builtins.hpp"
#include "fdstab/operator.hpp"
#include "fdstab/spectral.hpp"

using namespace fdstab;

namespace {

Eigen::VectorXd random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1, 1);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

// Tridiagonal reference built directly from the three coefficients.
Eigen::MatrixXd three_point_reference(const Scheme& s, int k, int J) {
  const double am = s.coeff(-1), a0 = s.coeff(0), ap = s.coeff(1);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(J + 1, J + 1);
  for (int j = 0; j <= J; ++j) {
    if (j > 0) A(j, j - 1) = am;
    A(j, j) = a0;
    if (j < J) A(j, j + 1) = ap;
  }
  if (k == 1) {
    A(J, J) = a0 + ap;
  } else {
    A(J, J - 1) = am - ap;
    A(J, J) = a0 + 2 * ap;
  }
  return A;
}

}  // namespace

TEST_CASE("grid") {
  const Grid g = Grid::make(994, 1.0);
  CHECK(g.dx == 1.0 / 995);
  CHECK(g.dt == g.dx);
  CHECK(g.size() == 995);
  CHECK_THROWS(Grid::make(0, 1.0));
}

TEST_CASE("identity scheme assembles the identity") {
  const auto A = assemble_matrix(identity_scheme(), 1, 10);
  CHECK(A.entries == Eigen::MatrixXd::Identity(11, 11));
}

TEST_CASE("upwind with lam_a = 1 is a shift") {
  const Scheme up = builtin("upwind", {.lam_a = 1.0});
  const auto A = assemble_matrix(up, 1, 6);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(7, 7);
  for (int j = 1; j <= 6; ++j) S(j, j - 1) = 1.0;
  CHECK(A.entries == S);
}

TEST_CASE("three-point matrices match the closed form displays") {
  for (const Scheme& s : {builtin("lax-friedrichs", {.lam_a = 0.5}), builtin("lax-wendroff", {.lam_a = 0.5}),
                          three_point(0.3, 0.7), three_point(0.8, 0.9)}) {
    for (int k : {1, 2}) {
      for (int J = 4; J <= 12; ++J) {
        CHECK(assemble_matrix(s, k, J).entries == three_point_reference(s, k, J));
      }
    }
  }
}

TEST_CASE("last column sees the extrapolated ghost") {
  const Scheme lw = builtin("lax-wendroff", {.lam_a = 0.5});
  const int J = 8;
  StateVector e(J + 1, 0.0);
  e[J] = 1.0;
  const auto out = step_interval(lw, 1, e);
  CHECK(out[J] == lw.coeff(0) + lw.coeff(1));
  CHECK(out[J - 1] == lw.coeff(1));
}

TEST_CASE("matrix and matrix-free agree") {
  std::mt19937_64 rng(31);
  for (const auto& [s, k, J] : {std::tuple{coeff1(), 1, 60}, std::tuple{coeff2(), 2, 45},
                                std::tuple{coeff2(), 3, 30}, std::tuple{builtin("lax-wendroff", {.lam_a = 0.5}), 2, 20}}) {
    const auto A = assemble_matrix(s, k, J);
    const IntervalStepper st(s, k, J);
    for (int t = 0; t < 100; ++t) {
      const Eigen::VectorXd x = random_vector(J + 1, rng);
      const Eigen::VectorXd y = A.entries * x;
      const auto z = st.step(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
      double err = 0;
      for (int j = 0; j <= J; ++j) err = std::max(err, std::abs(y(j) - z[static_cast<std::size_t>(j)]));
      CHECK(err <= 1e-13);
    }
  }
}

TEST_CASE("interior rows are Toeplitz") {
  const Scheme s = coeff1();
  const int J = 40;
  const auto A = assemble_matrix(s, 1, J);
  for (int j = s.r(); j <= J - s.p(); ++j)
    for (int l = -s.r(); l <= s.p(); ++l) CHECK(A.entries(j, j + l) == s.coeff(l));
}

TEST_CASE("grid too small") {
  CHECK_THROWS_AS(IntervalStepper(coeff1(), 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(IntervalStepper(builtin("lax-wendroff"), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(step_interval(builtin("lax-wendroff"), 1, StateVector{1.0}), std::invalid_argument);
}

TEST_CASE("lattice step") {
  const Scheme s = coeff2();
  LatticeSequence delta{0, {1.0}};
  const auto out = step_lattice(s, delta);
  CHECK(out.first() == -s.p());
  CHECK(out.last() == s.r());
  // (T delta)_j = a_{-j}: the coefficients read backwards
  for (int j = -s.p(); j <= s.r(); ++j) CHECK(out.at(j) == s.coeff(-j));
  CHECK(out.at(100) == 0.0);

  // Contraction on Z for a von Neumann stable scheme.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1, 1);
  const Scheme lw = builtin("lax-wendroff", {.lam_a = 0.5});
  for (int t = 0; t < 50; ++t) {
    LatticeSequence u{-5, std::vector<double>(20)};
    for (auto& v : u.values) v = d(rng);
    CHECK(step_lattice(lw, u).norm() <= u.norm() * (1 + 1e-14));
  }
}

TEST_CASE("half-line inflow") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(-1, 1);
  const Scheme lf = builtin("lax-friedrichs", {.lam_a = 0.5});
  LatticeSequence u{0, std::vector<double>(10)};
  for (auto& v : u.values) v = d(rng);
  const auto run = run_halfline_inflow(lf, u, 200);
  REQUIRE(run.norms.size() == 201);
  for (std::size_t n = 1; n < run.norms.size(); ++n) CHECK(run.norms[n] <= run.norms[n - 1] * (1 + 1e-14));
  CHECK_THROWS(step_halfline_inflow(lf, LatticeSequence{-1, {1.0}}));

  // Agrees with the interval scheme while the support stays away from J.
  const int J = 400;
  StateVector w(J + 1, 0.0);
  for (std::size_t i = 0; i < u.values.size(); ++i) w[i] = u.values[i];
  LatticeSequence h = u;
  for (int n = 0; n < 50; ++n) {
    w = step_interval(lf, 1, w);
    h = step_halfline_inflow(lf, h);
  }
  for (int j = 0; j <= 100; ++j) CHECK(w[static_cast<std::size_t>(j)] == doctest::Approx(h.at(j)).epsilon(1e-13).scale(1.0));
}

TEST_CASE("half-line outflow") {
  const Scheme s = builtin("lax-wendroff", {.lam_a = 0.5});
  // Constants are preserved away from the left front.
  LatticeSequence c{-100, std::vector<double>(101, 1.0)};
  const auto out = step_halfline_outflow(s, 2, 0, c);
  CHECK(out.last() == 0);
  for (std::int64_t j = -90; j <= 0; ++j) CHECK(out.at(j) == doctest::Approx(1.0));
  CHECK_THROWS(step_halfline_outflow(s, 1, 0, LatticeSequence{0, {1.0, 1.0}}));

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-1, 1);
  LatticeSequence u{-10, std::vector<double>(11)};
  for (auto& v : u.values) v = d(rng);
  const auto run = run_halfline_outflow(coeff2(), 2, 0, u, 200);
  CHECK(run.norms.size() == 201);
  CHECK(run.final_state.last() == 0);
}
