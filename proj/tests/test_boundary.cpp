#include <random>

#include "doctest.h"
#include "fdstab/boundary.hpp"

using namespace fdstab;

TEST_CASE("backward differences") {
  const double one[] = {3.5};
  CHECK(backward_difference(one, 0) == 3.5);
  const double quad[] = {1, 2, 4};
  CHECK(backward_difference(quad, 2) == 1.0);
  const double spike[] = {0, 0, 0, 5};
  CHECK(backward_difference(spike, 3) == 5.0);
  CHECK_THROWS(backward_difference(quad, 3));
  CHECK(binomial(30, 15) == 155117520);
  CHECK(binomial(5, 0) == 1);
}

TEST_CASE("right ghosts") {
  SUBCASE("k = 1 copies u_J") {
    const double tail[] = {2.25};
    CHECK(fill_right_ghosts(tail, 7, 1) == std::vector<double>(7, 2.25));
  }
  SUBCASE("k = 2 is linear extrapolation") {
    const double tail[] = {1, 3};
    CHECK(fill_right_ghosts(tail, 3, 2) == std::vector<double>{5, 7, 9});
    // (mu + 1) u_J - mu u_{J-1}
    const double t2[] = {-0.5, 2.0};
    const auto g = fill_right_ghosts(t2, 7, 2);
    for (int mu = 1; mu <= 7; ++mu) CHECK(g[mu - 1] == doctest::Approx((mu + 1) * 2.0 - mu * -0.5));
  }
  SUBCASE("constants are preserved") {
    const double tail[] = {4, 4};
    CHECK(fill_right_ghosts(tail, 2, 2) == std::vector<double>{4, 4});
  }
  SUBCASE("only the last k tail values matter") {
    const double longer[] = {100, 1, 3};
    CHECK(fill_right_ghosts(longer, 3, 2) == std::vector<double>{5, 7, 9});
  }
  SUBCASE("errors") {
    const double tail[] = {1};
    CHECK_THROWS(fill_right_ghosts(tail, 3, 2));
    CHECK_THROWS(fill_right_ghosts(tail, 3, 0));
    CHECK_THROWS(fill_right_ghosts(std::vector<double>(31, 0.0), 3, 31));
    CHECK_THROWS(BoundaryConfig(0, 1, 1));
    CHECK_THROWS(BoundaryConfig(3, 1, 1).check_grid(1));
    CHECK_NOTHROW(BoundaryConfig(3, 1, 1).check_grid(2));
  }
}

TEST_CASE("left ghosts are homogeneous Dirichlet") {
  CHECK(fill_left_ghosts(3) == std::vector<double>{0, 0, 0});
  CHECK(fill_left_ghosts(0).empty());
}

TEST_CASE("extrapolation reproduces polynomials of degree k-1") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(-1, 1);
  for (int k = 1; k <= 5; ++k) {
    for (int p = 1; p <= 7; ++p) {
      std::vector<double> c(static_cast<std::size_t>(k));
      for (auto& v : c) v = coef(rng);
      auto poly = [&](double x) {
        double s = 0;
        for (int i = k - 1; i >= 0; --i) s = s * x + c[static_cast<std::size_t>(i)];
        return s;
      };
      const int J = 20;
      std::vector<double> tail;
      for (int j = J + 1 - k; j <= J; ++j) tail.push_back(poly(j * 0.05));
      const auto g = fill_right_ghosts(tail, p, k);
      for (int mu = 1; mu <= p; ++mu) {
        const double exact = poly((J + mu) * 0.05);
        CHECK(g[static_cast<std::size_t>(mu - 1)] == doctest::Approx(exact).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("closure is linear and lower triangular") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int k = 1; k <= 4; ++k) {
    const int p = 6;
    std::vector<double> a(static_cast<std::size_t>(k)), b(a.size()), ab(a.size());
    const double alpha = d(rng), beta = d(rng);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
      ab[i] = alpha * a[i] + beta * b[i];
    }
    const auto ga = fill_right_ghosts(a, p, k), gb = fill_right_ghosts(b, p, k), gab = fill_right_ghosts(ab, p, k);
    for (int mu = 0; mu < p; ++mu)
      CHECK(gab[mu] == doctest::Approx(alpha * ga[mu] + beta * gb[mu]).epsilon(1e-12).scale(1.0));

    // Triangularity: the ghost at mu only sees entries J+mu-k .. J+mu-1, so
    // prescribing a different later ghost leaves earlier ones untouched.
    const auto w = right_ghost_weights(p, k);
    for (int mu = 0; mu < p; ++mu) {
      double g = 0;
      for (int i = 0; i < k; ++i) g += w[static_cast<std::size_t>(mu * k + i)] * a[static_cast<std::size_t>(i)];
      CHECK(g == doctest::Approx(ga[mu]).epsilon(1e-12).scale(1.0));
    }
    std::vector<double> full(a);
    full.insert(full.end(), ga.begin(), ga.end());
    for (int mu = 1; mu <= p; ++mu) {
      const std::span<const double> window(full.data() + mu - 1, static_cast<std::size_t>(k) + 1);
      CHECK(std::abs(backward_difference(window, k)) < 1e-9);
    }
  }
}
