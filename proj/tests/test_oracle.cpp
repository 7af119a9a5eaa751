#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gegenball/ball.hpp"
#include "gegenball/errors.hpp"
#include "gegenball/oracle.hpp"
#include "gegenball/simplex.hpp"

using namespace gegenball;

TEST_SUITE("oracle") {

TEST_CASE("degree zero") {
  const auto p = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  const GsBasis g = oracle::gs_basis(p, Domain::ball, 0);
  REQUIRE(g.size() == 1);
  const std::vector<double> x{0.1, 0.2};
  CHECK(std::abs(g.eval(x)[0]) == doctest::Approx(1.0));
  CHECK(oracle::kernel_oracle(g, x, x) == doctest::Approx(1.0));
}

TEST_CASE("orthonormal and sized") {
  for (const auto& p : {WeightParams::make({0.0, 0.0}, 0.5, 0.0), WeightParams::make({0.5, 0.0, 0.0}, 0.0, 1.5)}) {
    const RuleND r = quadrature::ball_rule(p, 12);
    for (int n = 0; n <= 4; ++n) {
      const GsBasis g = oracle::gs_basis(p, Domain::ball, n);
      CHECK(g.size() == BallBasis(p, n).dimension(n));
      std::vector<std::vector<double>> v;
      for (std::size_t k = 0; k < r.size(); ++k) v.push_back(g.eval(r.point(k)));
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t c = 0; c <= a; ++c) {
          double s = 0.0;
          for (std::size_t k = 0; k < r.size(); ++k) s += r.weights[k] * v[k][a] * v[k][c];
          CHECK(std::abs(s - (a == c ? 1.0 : 0.0)) < 1e-10);
        }
    }
  }
}

TEST_CASE("n = 1 uniform disk: multiples of x1, x2 with H = 1/2") {
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  const GsBasis g = oracle::gs_basis(p, Domain::ball, 1);
  REQUIRE(g.size() == 2);
  // int x_i^2 = 1/4, so the orthonormal elements are unit combinations of 2 x_1, 2 x_2; the closed-form
  // element sqrt(2) x_i (orthonormal angular factor) then has norm 2/4 = H_0^1
  for (const auto& c : g.coeffs) {
    CHECK(std::abs(c[0]) < 1e-14);
    const double h = std::hypot(c[1], c[2]);
    CHECK(h == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(2.0 / (h * h) == doctest::Approx(ball::basis_norm(p, 1, 0)).epsilon(1e-12));
  }
}

TEST_CASE("span agreement and basis independence") {
  const auto p = WeightParams::make({0.3, 0.7}, 0.0, 0.5);
  const BallBasis b(p, 5);
  const RuleND r = quadrature::ball_rule(p, 12);
  for (int n = 0; n <= 5; ++n) {
    const GsBasis g = oracle::gs_basis(p, Domain::ball, n);
    // projection of each closed-form element onto span(g) recovers it
    for (const auto& i : b.indices(n)) {
      std::vector<double> coef(g.size(), 0.0);
      for (std::size_t k = 0; k < r.size(); ++k) {
        const auto gv = g.eval(r.point(k));
        const double bv = b.eval(i, r.point(k));
        for (std::size_t a = 0; a < g.size(); ++a) coef[a] += r.weights[k] * gv[a] * bv;
      }
      double s = 0.0;
      for (double c : coef) s += c * c;
      CHECK(s == doctest::Approx(b.norm(n, i.j)).epsilon(1e-8));
    }
    const std::vector<double> x{0.3, 0.1}, y{-0.6, 0.45};
    CHECK(oracle::kernel_oracle(g, x, y) == doctest::Approx(ball::kernel_direct(b, n, x, y)).epsilon(1e-7));
  }
}

TEST_CASE("simplex oracle matches the folded kernel") {
  const auto p = WeightParams::make({0.5, 0.0}, 1.0, 0.0);
  const BallBasis bb(p, 8);
  const std::vector<double> x{0.2, 0.35}, y{0.6, 0.1};
  for (int n = 0; n <= 4; ++n)
    CHECK(oracle::kernel_oracle(oracle::gs_basis(p, Domain::simplex, n), x, y) ==
          doctest::Approx(simplex::kernel_folded(bb, n, x, y)).epsilon(1e-7));
}

TEST_CASE("reproducible") {
  const auto p = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  const GsBasis a = oracle::gs_basis(p, Domain::ball, 3), b = oracle::gs_basis(p, Domain::ball, 3);
  CHECK(a.coeffs == b.coeffs);
}

}
