#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gegenball/params.hpp"
#include "gegenball/quadrature.hpp"
#include "gegenball/simplex.hpp"
#include "gegenball/special.hpp"
#include "reference_values.hpp"

using namespace gegenball;
using namespace gegenball::quadrature;

namespace {

double sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Unnormalized int x^e W over the ball from beta and gamma functions.
double ball_moment(const WeightParams& p, const std::vector<int>& e) {
  double halves = 0.0, log_sphere = std::log(2.0);
  int deg = 0;
  for (int i = 0; i < p.d; ++i) {
    if (e[i] % 2) return 0.0;
    const double h = (e[i] + 2 * p.kappa[i] + 1) / 2.0;
    log_sphere += std::lgamma(h);
    halves += h;
    deg += e[i];
  }
  log_sphere -= std::lgamma(halves);
  const double a = (deg + 2 * p.gamma_kappa() + 2 * p.nu + p.d) / 2.0, b = p.mu + 0.5;
  return 0.5 * std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b) + log_sphere);
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("gauss-jacobi") {
  const Rule1D leg = gauss_jacobi(2, 0.0, 0.0);
  CHECK(integrate(leg, [](double t) { return t * t; }) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  const Rule1D r = gauss_jacobi(4, 0.5, -0.5);
  CHECK(integrate(r, [](double t) { return std::pow(t, 6); }) == doctest::Approx(reference::jacobi_moment_t6).epsilon(1e-12));
  const Rule1D s = gauss_jacobi(9, 1.5, 1.5);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s.nodes[i] + s.nodes[s.size() - 1 - i]) < 1e-13);
  for (double w : s.weights) CHECK(w > 0.0);
  CHECK_THROWS_AS(gauss_jacobi(3, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("limit rule") {
  const Rule1D both = limit_rule(LimitSide::both_endpoints);
  CHECK(integrate(both, [](double t) { return t * t; }) == doctest::Approx(1.0));
  CHECK(integrate(both, [](double t) { return t; }) == doctest::Approx(0.0));
  const Rule1D right = limit_rule(LimitSide::right_endpoint);
  CHECK(integrate(right, [](double t) { return 3 * t; }) == doctest::Approx(3.0));
  // c_a (1-t^2)^{a-1} tends to the two-point rule as a -> 0
  auto f = [](double t) { return std::exp(t); };
  const double lim = integrate(both, f);
  double prev = 1e300;
  for (double a : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double err = std::abs(integrate(symmetric_factor(12, a), f) - lim);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("sphere rule") {
  const std::vector<double> k0{0.0, 0.0, 0.0};
  const RuleND s = sphere_rule(k0, 8);
  CHECK(s.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate(s, [](std::span<const double> x) { return x[0] * x[0]; }) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const std::vector<double> k2{0.3, 0.7};
  CHECK(sphere_rule(k2, 6).total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> k4{0.0, 0.0, 0.0, 0.0};
  CHECK_THROWS(sphere_rule(k4, 4));
}

TEST_CASE("ball rule") {
  const auto p = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  const RuleND r = ball_rule(p, 10);
  CHECK(r.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(integrate(r, [](std::span<const double> x) { return x[0]; })) < 1e-12);
  CHECK(integrate(r, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }) ==
        doctest::Approx(reference::ball_norm2_moment).epsilon(1e-12));
  for (double w : r.weights) CHECK(w > 0.0);
  const auto p3 = WeightParams::make({0.0, 0.0, 0.0}, 0.5, 0.0);
  CHECK(integrate(ball_rule(p3, 4), [](std::span<const double> x) { return x[0] * x[0]; }) ==
        doctest::Approx(reference::ball_x1sq_uniform_d3).epsilon(1e-12));
}

TEST_CASE("ball rule exactness against beta moments") {
  for (const auto& p : {WeightParams::make({0.5, 0.0}, 0.0, 1.5), WeightParams::make({0.3, 0.7}, 1.0, 0.0)}) {
    const RuleND r = ball_rule(p, 8);
    const double m0 = ball_moment(p, {0, 0});
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; a + b <= 8; ++b) {
        const double exact = ball_moment(p, {a, b}) / m0;
        const double q = integrate(r, [&](std::span<const double> x) { return std::pow(x[0], a) * std::pow(x[1], b); });
        CHECK(std::abs(q - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
      }
  }
  const auto p3 = WeightParams::make({0.3, 0.7, 0.5}, 0.5, 0.5);
  const RuleND r3 = ball_rule(p3, 6);
  const double m3 = ball_moment(p3, {0, 0, 0});
  for (const std::vector<int>& e : {std::vector<int>{2, 2, 2}, {4, 0, 2}, {0, 6, 0}, {1, 2, 2}}) {
    const double q = integrate(r3, [&](std::span<const double> x) {
      return std::pow(x[0], e[0]) * std::pow(x[1], e[1]) * std::pow(x[2], e[2]);
    });
    CHECK(std::abs(q - ball_moment(p3, e) / m3) < 1e-12);
  }
  const auto p = WeightParams::make({0.5, 0.0}, 0.0, 1.5);
  const RuleND r = ball_rule(p, 8), fine = ball_rule(p, 30);
  // beyond the declared degree the error is visible (the radial factor is exact to degree 10 here)
  auto g = [](std::span<const double> x) { return std::pow(x[0], 12); };
  CHECK(std::abs(integrate(r, g) - integrate(fine, g)) > 1e-8);
}

TEST_CASE("simplex rule") {
  const auto p = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  const RuleND r = simplex_rule(p, 8);
  CHECK(r.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate(r, [](std::span<const double> x) { return x[0]; }) ==
        doctest::Approx(reference::simplex_x1_moment).epsilon(1e-12));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto x = r.point(i);
    CHECK(sum(x) <= 1.0 + 1e-14);
    for (double c : x) CHECK(c >= 0.0);
  }
  // <f,1>^T = <f o psi, 1> on the ball
  const RuleND b = ball_rule(p, 16);
  const double lhs = integrate(r, [](std::span<const double> x) { return x[0] * x[1] + x[0]; });
  const double rhs = integrate(b, simplex::psi_pullback([](std::span<const double> x) { return x[0] * x[1] + x[0]; }));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("refinement stability") {
  const auto p = WeightParams::make({0.5, 0.0, 0.0}, 0.5, 0.5);
  auto f = [](std::span<const double> x) { return std::cos(x[0] + 2 * x[1]) * std::exp(x[2]); };
  CHECK(integrate(ball_rule(p, 24), f) == doctest::Approx(integrate(ball_rule(p, 48), f)).epsilon(1e-10));
}

TEST_CASE("pairwise dot and csv") {
  std::vector<double> w(1001, 1e-3), v(1001, 1.0);
  CHECK(pairwise_dot(w, v) == doctest::Approx(1.001).epsilon(1e-14));
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  const std::string csv = to_csv(ball_rule(p, 2));
  CHECK(csv.rfind("x1,x2,weight\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
}

}
