#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fdstab/builtins.hpp"
#include "fdstab/simulate.hpp"

using namespace fdstab;

TEST_CASE("initial conditions") {
  const Grid g = Grid::make(99, 1.0);
  const auto u = build_initial(InitialCondition::gaussian(), g);
  REQUIRE(u.size() == 100);
  CHECK(u[0] == doctest::Approx(std::exp(-50 * 0.25)));
  double peak = 0;
  for (double v : u) peak = std::max(peak, v);
  CHECK(peak == doctest::Approx(std::exp(-50 * (0.5 - 0.5) * (0.5 - 0.5))).epsilon(0.01));

  // packet with theta = pi alternates in sign around the centre
  const Grid g2 = Grid::make(9, 1.0);
  const auto w = build_initial(InitialCondition::wavepacket(std::numbers::pi, 0.5, 0.0), g2);
  CHECK(w[5] == doctest::Approx(1.0));
  CHECK(w[4] == doctest::Approx(-1.0));
  CHECK(w[6] == doctest::Approx(-1.0));

  auto ic = InitialCondition::function([](double x) { return x * x; });
  ic.sampling = Sampling::CellAverage;
  const auto c = build_initial(ic, g2);
  // average of x^2 over [x_j, x_{j+1}]
  for (int j = 0; j <= 9; ++j) {
    const double a = g2.x(j), b = g2.x(j + 1);
    CHECK(c[j] == doctest::Approx((b * b * b - a * a * a) / (3 * g2.dx)).epsilon(1e-10));
  }
  auto lin = InitialCondition::function([](double x) { return x; });
  lin.sampling = Sampling::CellAverage;
  const auto cl = build_initial(lin, g2);
  for (int j = 0; j <= 9; ++j) CHECK(cl[j] == doctest::Approx((g2.x(j) + g2.x(j + 1)) / 2).epsilon(1e-12));
  CHECK_THROWS(build_initial(InitialCondition::function(nullptr), g2));
}

TEST_CASE("upwind with lam_a = 1 transports exactly") {
  const Scheme up = builtin("upwind", {.lam_a = 1.0});
  const Grid g = Grid::make(50, 1.0);
  auto f = [](double x) { return std::sin(3 * x) + x; };
  const auto u0 = build_initial(InitialCondition::function(f), g);
  const auto rec = run(up, 1, g, u0, 60, 1);
  for (int n : {1, 10, 30}) {
    const auto ex = exact_solution(f, 1.0, n * g.dt, g);
    const auto& snap = rec.snapshots[static_cast<std::size_t>(n)];
    REQUIRE(snap.first == n);
    for (int j = 0; j <= g.J; ++j) CHECK(std::abs(snap.second[j] - ex[j]) <= 1e-12);
  }
  CHECK(rec.l2_norms[51] == 0.0);
  CHECK(rec.steps_completed() == 60);
}

TEST_CASE("exact solution") {
  const Grid g = Grid::make(9, 1.0);
  const auto u = exact_solution([](double) { return 1.0; }, 1.0, 0.35, g);
  for (int j = 0; j <= 9; ++j) CHECK(u[j] == (g.x(j) - 0.35 < 0 ? 0.0 : 1.0));
  CHECK_THROWS(exact_solution([](double) { return 1.0; }, 1.0, -1.0, g));
}

TEST_CASE("growth slope") {
  SimulationRecord rec;
  rec.dt = 0.01;
  for (int n = 0; n <= 1000; ++n) rec.l2_norms.push_back(std::exp(0.3 * n * rec.dt + 1.0));
  const auto fit = growth_slope(rec, 2.0, 8.0);
  CHECK(fit.slope == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(fit.r_squared);
  CHECK(*fit.r_squared == doctest::Approx(1.0));
  CHECK(fit.samples == 601);

  SimulationRecord flat;
  flat.dt = 1.0;
  flat.l2_norms.assign(50, 2.0);
  const auto ff = growth_slope(flat, 0.0, 49.0);
  CHECK(ff.slope == 0.0);
  CHECK_FALSE(ff.r_squared.has_value());
  CHECK_THROWS(growth_slope(flat, 0.0, 3.0));

  // zero norms have no logarithm and drop out of the fit
  rec.l2_norms[500] = 0.0;
  CHECK_FALSE(rec.ln_l2_norm(500).has_value());
  CHECK(growth_slope(rec, 2.0, 8.0).samples == 600);

  SimulationRecord w;
  w.dt = 0.001;
  w.l2_norms.assign(10001, 1.0);
  const auto [t0, t1] = default_window(w);
  CHECK(t0 == doctest::Approx(5.0));
  CHECK(t1 == doctest::Approx(10.0));
}

TEST_CASE("energy identity for the three-point scheme") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1, 1), par(-0.5, 1.5);
  std::uniform_int_distribution<int> size(2, 60);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> u(static_cast<std::size_t>(size(rng)));
    double nrm = 0;
    for (auto& v : u) {
      v = d(rng);
      nrm += v * v;
    }
    CHECK(lemma1_identity_residual(u, par(rng), par(rng)) <= 1e-12 * nrm);
  }
  CHECK_THROWS(lemma1_identity_residual(std::vector<double>{1.0}, 0.5, 0.5));
}

TEST_CASE("norms do not increase inside the stable box with k = 1") {
  const Grid g = Grid::make(80, 1.0);
  for (double la : {0.2, 0.5, 0.9}) {
    for (double nu : {la * la, 0.5 * (la * la + 1), 1.0}) {
      const auto rec = run(three_point(la, nu), 1, g, InitialCondition::wavepacket(2.0), 500);
      for (std::size_t n = 1; n < rec.l2_norms.size(); ++n)
        CHECK(rec.l2_norms[n] <= rec.l2_norms[n - 1] * (1 + 1e-13));
    }
  }
}

TEST_CASE("record bookkeeping") {
  const Grid g = Grid::make(40, 1.0);
  const auto u0 = build_initial(InitialCondition::gaussian(), g);
  const auto a = run(coeff2(), 2, g, u0, 100, 25);
  const auto b = run(coeff2(), 2, g, u0, 100, 25);
  CHECK(a.l2_norms == b.l2_norms);
  CHECK(a.snapshots.size() == 5);
  CHECK(a.l2_norms[0] == doctest::Approx(grid_l2_norm(u0, g.dx)));
  double s = 0;
  for (double v : u0) s += v * v;
  CHECK(a.l2_norms[0] == doctest::Approx(std::sqrt(g.dx * s)));
  CHECK(a.time(10) == doctest::Approx(10 * g.dt));
  CHECK(a.J == 40);
  CHECK(a.k == 2);
}

TEST_CASE("overflow guard") {
  const Scheme grow("grow", 0, 0, {Rational(1000)}, Rational(1), Rational(0));
  const Grid g = Grid::make(4, 1.0);
  const auto rec = run(grow, 1, g, StateVector(5, 1.0), 1000);
  CHECK(rec.truncated);
  CHECK(rec.steps_completed() < 1000);
  CHECK(std::isfinite(rec.l2_norms.back()));
}

TEST_CASE("upwind converges at first order") {
  const Scheme up = builtin("upwind", {.lam_a = 0.5});
  auto f = [](double x) { return std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * x); };
  const auto rows = convergence_check(up, 1, f, 0.25, {99, 199, 399});
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i - 1].l2_error / rows[i].l2_error;
    CHECK(ratio > 1.7);
    CHECK(ratio < 2.3);
  }
}
