#include <doctest.h>

#include <cmath>
#include <string>
#include <stdexcept>
#include <vector>

#include "gegenball/ball.hpp"
#include "reference_values.hpp"

using namespace gegenball;

namespace {

double gram(const BallBasis& b, const RuleND& r, const BasisIndex& i, const BasisIndex& k) {
  return quadrature::integrate(r, [&](std::span<const double> x) { return b.eval(i, x) * b.eval(k, x); });
}

}  // namespace

TEST_SUITE("ball") {

TEST_CASE("weight") {
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  const std::vector<double> x{0.3, -0.5};
  CHECK(ball::weight_eval(p, x) == 1.0);
  const auto q = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  const std::vector<double> zero{0.0, 0.0};
  CHECK(ball::weight_eval(q, zero) == 0.0);
  const double r2 = 0.09 + 0.25;
  CHECK(ball::weight_eval(q, x) ==
        doctest::Approx(std::pow(0.3, 0.6) * std::pow(0.5, 1.4) * std::pow(r2, 0.5) * std::pow(1 - r2, 0.5)).epsilon(1e-14));
  const std::vector<double> out{0.9, 0.9};
  CHECK_THROWS_AS(ball::weight_eval(q, out), std::domain_error);
}

TEST_CASE("basis elements") {
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  const BallBasis b(p, 4, true);
  CHECK(b.element({0, 0, 0}).poly.degree() == 0);
  for (int n = 0; n <= 4; ++n) {
    CHECK(b.dimension(n) == static_cast<std::size_t>(n + 1));
    for (const auto& i : b.indices(n)) CHECK(b.element(i).poly.degree() == n);
  }
  // n = 1 elements are multiples of x1, x2
  for (const auto& i : b.indices(1)) CHECK(b.element(i).poly.homogeneous_part(1).size() == b.element(i).poly.size());
  // n = 2, j = 1: radial Jacobi P_1^{(mu-1/2, nu+lambda_kappa)}(2|x|^2-1) with constant angular part
  const auto r = b.radial_params(2, 1);
  CHECK(r.alpha == doctest::Approx(0.0));
  CHECK(r.beta == doctest::Approx(0.0 + 0.0));
  CHECK(b.element({2, 1, 0}).angular.degree() == 0);
  const auto p3 = WeightParams::make({0.3, 0.7, 0.5}, 1.0, 0.5);
  const BallBasis b3(p3, 8);
  for (int n = 0; n <= 8; ++n) CHECK(b3.dimension(n) == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  CHECK_THROWS(b.element({5, 0, 0}));
}

TEST_CASE("norms") {
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  CHECK(ball::basis_norm(p, 0, 0) == doctest::Approx(1.0));
  CHECK(ball::basis_norm(p, 1, 0) == doctest::Approx(0.5).epsilon(1e-14));
  for (const auto& q : {WeightParams::make({0.5, 0.0}, 1.0, 0.5), WeightParams::make({0.3, 0.7, 0.5}, 0.0, 1.5)}) {
    const BallBasis b(q, 6);
    const RuleND r = quadrature::ball_rule(q, 12);
    for (int n = 0; n <= 6; ++n)
      for (const auto& i : b.indices(n))
        CHECK(gram(b, r, i, i) == doctest::Approx(ball::basis_norm(q, n, i.j)).epsilon(1e-8));
  }
  CHECK_THROWS(ball::basis_norm(p, 2, 2));
}

TEST_CASE("orthogonality") {
  const auto p = WeightParams::make({0.3, 0.7}, 0.0, 0.5);
  const BallBasis b(p, 6);
  const RuleND r = quadrature::ball_rule(p, 12);
  std::vector<BasisIndex> all;
  for (int n = 0; n <= 6; ++n)
    for (const auto& i : b.indices(n)) all.push_back(i);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t c = 0; c < a; ++c)
      CHECK(std::abs(gram(b, r, all[a], all[c])) < 1e-9);
}

TEST_CASE("projection") {
  const auto p = WeightParams::make({0.5, 0.0}, 1.0, 0.5);
  const BallBasis b(p, 4, true);
  const RuleND r = quadrature::ball_rule(p, 16);
  const Poly q = b.element({3, 1, 0}).poly + 2.0 * b.element({3, 0, 1}).poly;
  const auto c = ball::project(b, [&](std::span<const double> x) { return q.eval(x); }, r);
  const std::vector<double> x{0.3, -0.2};
  CHECK(ball::projection_eval(b, c, 3, x) == doctest::Approx(q.eval(x)).epsilon(1e-9));
  for (int n : {0, 1, 2, 4}) CHECK(std::abs(ball::projection_eval(b, c, n, x)) < 1e-9);
  // Parseval partial sums of exp(x1) increase towards <f,f>
  auto f = [](std::span<const double> y) { return std::exp(y[0]); };
  const auto e = ball::project(b, f, r);
  const double ff = quadrature::integrate(r, [&](std::span<const double> y) { return f(y) * f(y); });
  double prev = 0.0;
  for (int n = 0; n <= 4; ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k < e.index.size(); ++k)
      if (e.index[k].n <= n) s += e.value[k] * e.value[k] / e.norm[k];
    CHECK(s >= prev);
    CHECK(s <= ff * (1 + 1e-12));
    prev = s;
  }
  CHECK(e.to_json().find("\"coefficients\"") != std::string::npos);
}

TEST_CASE("kernels against the moment oracle") {
  for (const auto& c : reference::kernels) {
    if (std::string(c.domain) != "ball") continue;
    const auto p = WeightParams::make(c.kappa, c.mu, c.nu);
    const BallBasis b(p, 4);
    for (int n = 0; n <= 4; ++n) {
      const double tol = 1e-9 * std::max(1.0, std::abs(c.values[n]));
      CHECK(std::abs(ball::kernel_direct(b, n, c.x, c.y) - c.values[n]) < tol);
      CHECK(std::abs(ball::kernel_concise(p, n, c.x, c.y) - c.values[n]) < 100 * tol);
    }
  }
}

TEST_CASE("kernel properties") {
  const auto p = WeightParams::make({0.5, 0.0}, 1.0, 0.5);
  const BallBasis b(p, 6);
  const std::vector<double> x{0.4, -0.1}, y{-0.3, 0.6};
  CHECK(ball::kernel_direct(b, 0, x, y) == doctest::Approx(1.0));
  CHECK(ball::kernel_concise(p, 0, x, y) == doctest::Approx(1.0).epsilon(1e-10));
  for (int n = 0; n <= 6; ++n) {
    CHECK(ball::kernel_direct(b, n, x, y) == ball::kernel_direct(b, n, y, x));
    CHECK(ball::kernel_concise(p, n, x, y) == doctest::Approx(ball::kernel_direct(b, n, x, y)).epsilon(1e-6));
  }
  const auto all = ball::kernel_direct_all(b, x, y);
  for (int n = 0; n <= 6; ++n) CHECK(all[n] == doctest::Approx(ball::kernel_direct(b, n, x, y)).epsilon(1e-13));
  // reproducing: int P_n(x, y) Q(y) dW(y) = Q(x) for Q in V_n
  const RuleND r = quadrature::ball_rule(p, 12);
  for (const auto& i : b.indices(3)) {
    const double v = quadrature::integrate(r, [&](std::span<const double> z) { return ball::kernel_direct(b, 3, x, z) * b.eval(i, z); });
    CHECK(v == doctest::Approx(b.eval(i, x)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(ball::kernel_concise(p, 6, x, y, 2), std::invalid_argument);
}

TEST_CASE("limit paths of the concise kernel") {
  const std::vector<double> x{0.35, -0.2}, y{0.1, 0.5};
  for (const auto& p : {WeightParams::make({0.0, 0.0}, 0.0, 0.0), WeightParams::make({0.0, 0.5}, 0.5, 0.0),
                        WeightParams::make({0.3, 0.0}, 0.0, 1.5)}) {
    const BallBasis b(p, 5);
    for (int n = 0; n <= 5; ++n)
      CHECK(ball::kernel_concise(p, n, x, y) == doctest::Approx(ball::kernel_direct(b, n, x, y)).epsilon(1e-7));
  }
}

TEST_CASE("translation and convolution") {
  const auto p = WeightParams::make({0.3, 0.0}, 0.5, 0.5);
  const double lam = p.lambda_total();
  const ConciseIntegrator L(p, Domain::ball, 8);
  const std::vector<double> x{0.2, 0.5}, y{-0.4, 0.1};
  CHECK(ball::translation_L(L, [](double) { return 1.0; }, x, y) == doctest::Approx(1.0).epsilon(1e-12));
  const double lz = ball::translation_L(L, [&](double t) { return special::gegenbauer_Z_eval(4, {lam}, t); }, x, y);
  CHECK(lz == doctest::Approx(ball::kernel_concise(L, 4, x, y)).epsilon(1e-12));
  auto g = [](double t) { return t * t * t - 0.5 * t; };
  CHECK(std::abs(ball::translation_L(L, g, x, y)) <=
        ball::translation_L(L, [&](double t) { return std::abs(g(t)); }, x, y) + 1e-14);

  // multiplier: f in V_2 gives f * g = g-hat_2 f
  const BallBasis b(p, 2);
  const RuleND r = quadrature::ball_rule(p, 12);
  std::vector<double> fv(r.size());
  const BasisIndex idx{2, 1, 0};
  for (std::size_t k = 0; k < r.size(); ++k) fv[k] = b.eval(idx, r.point(k));
  const double gh = ball::gegenbauer_coefficient(g, 2, lam, 10);
  CHECK(ball::convolve(L, r, fv, g, x) == doctest::Approx(gh * b.eval(idx, x)).epsilon(1e-7));
  std::vector<double> ones(r.size(), 1.0);
  CHECK(ball::convolve(L, r, ones, [](double) { return 1.0; }, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cesaro and poisson") {
  const auto p = WeightParams::make({0.0, 0.5}, 1.0, 0.0);
  const double lam = p.lambda_total();
  const ConciseIntegrator L(p, Domain::ball, ConciseIntegrator::min_nodes(Domain::ball, 6));
  const RuleND r = quadrature::ball_rule(p, 14);
  std::vector<double> ones(r.size(), 1.0), quad(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) quad[k] = r.point(k)[0] * r.point(k)[1] + r.point(k)[1] * r.point(k)[1];
  const std::vector<double> x{0.3, -0.45};
  CHECK(ball::cesaro_mean(L, r, ones, 4, 1.5, x) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ball::cesaro_mean(L, r, quad, 2, 0.0, x) == doctest::Approx(x[0] * x[1] + x[1] * x[1]).epsilon(1e-9));
  for (double yx : {-0.7, 0.0, 0.6})
    for (double yy : {-0.5, 0.2}) {
      const std::vector<double> y{yx, yy};
      CHECK(ball::cesaro_kernel(L, 6, 2 * lam + 1, x, y) >= -1e-9);
    }
  const ConciseIntegrator Lp(p, Domain::ball, 10, 32);
  // the Poisson kernel is not polynomial in y, so the y rule only approximates its unit mass
  const RuleND fine = quadrature::ball_rule(p, 60);
  std::vector<double> fine_ones(fine.size(), 1.0);
  CHECK(ball::poisson_integral(Lp, fine, fine_ones, 0.5, x) == doctest::Approx(1.0).epsilon(1e-7));
  const std::vector<double> y{0.1, 0.2};
  CHECK(ball::poisson_kernel(Lp, 0.7, x, y) > 0.0);
}

TEST_CASE("lebesgue sweep") {
  const auto p = WeightParams::make({0.0, 0.0}, 0.5, 0.0);
  const BallBasis b(p, 4);
  const RuleND r = quadrature::ball_rule(p, 12);
  const auto grid = ball::polar_grid(2);
  CHECK(grid.size() == 2 * 1600);
  std::vector<double> vx, vy, norms;
  std::vector<int> deg;
  const std::size_t G = 50;
  for (std::size_t k = 0; k < G; ++k) {
    const auto v = b.eval_all(std::span<const double>(grid.data() + 2 * k, 2));
    vx.insert(vx.end(), v.begin(), v.end());
  }
  for (std::size_t k = 0; k < r.size(); ++k) {
    const auto v = b.eval_all(r.point(k));
    vy.insert(vy.end(), v.begin(), v.end());
  }
  for (int n = 0; n <= 4; ++n)
    for (const auto& i : b.indices(n)) {
      norms.push_back(b.norm(n, i.j));
      deg.push_back(n);
    }
  const auto est = ball::lebesgue_sweep(vx, G, vy, r.weights, norms, deg, {{0, 0.0}, {4, 0.0}, {4, 3.0}});
  REQUIRE(est.size() == 3);
  CHECK(est[0].lebesgue == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est[0].min_kernel == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est[1].lebesgue > est[2].lebesgue);
  CHECK(est[2].min_kernel >= -1e-9);
  CHECK(ball::sup_grid(3).size() == 3 * 40);
}

TEST_CASE("differential equations") {
  const std::vector<double> x{0.31, -0.52};
  for (const auto& p : {WeightParams::make({0.3, 0.7}, 1.0, 0.0), WeightParams::make({0.5, 0.0}, 0.5, 0.5),
                        WeightParams::make({0.0, 0.0}, 0.0, 1.5)}) {
    const BallBasis b(p, 5, true);
    for (int n = 0; n <= 5; ++n)
      for (const auto& i : b.indices(n)) CHECK(std::abs(ball::de_residual(b, i, x)) < 1e-9);
  }
  const auto p = WeightParams::make({0.5, 0.0}, 0.5, 0.5);
  const BallBasis b(p, 3, true);
  CHECK(std::abs(ball::de_residual(b, {2, 1, 0}, x, true)) > 1e-2);
}

TEST_CASE("contiguous relations") {
  const auto p = WeightParams::make({0.3, 0.7}, 1.0, 0.5);
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; 2 * j <= n; ++j) {
      const auto [r1, r2] = ball::contiguous_residual(p, n, j, 0);
      CHECK(r1 < 1e-9);
      CHECK(r2 < 1e-9);
    }
}

}
