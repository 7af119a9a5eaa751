#pragma once

// Orthogonal structure on the simplex T^d for
// U_{kappa,mu,nu}(x) = prod x_i^{kappa_i-1/2} |x|^nu (1-|x|)^{mu-1/2},
// obtained from the ball through psi(x) = (x_1^2, ..., x_d^2).

#include <span>
#include <vector>

#include "gegenball/ball.hpp"

namespace gegenball {

/// P_{j,l}^n(x) = P_j^{(mu-1/2, 2(n-j)+nu+lambda_kappa)}(2|x|-1) Y_{l,2n-2j}(sqrt x)
/// with Y running over the sign-invariant h-harmonics. Index l refers to the
/// position inside harmonic(2n-2j), as in BallBasis.
class SimplexBasis {
 public:
  SimplexBasis(WeightParams params, int max_degree, bool with_polys = false);

  const WeightParams& params() const { return ball_.params(); }
  int max_degree() const { return max_degree_; }
  const BallBasis& ball() const { return ball_; }

  std::vector<BasisIndex> indices(int n) const;
  std::size_t dimension(int n) const;
  std::size_t offset(int n) const;
  std::size_t total_size() const { return offset(max_degree_ + 1); }

  double norm(int n, int j) const;

  std::vector<double> eval_degree(int n, std::span<const double> x) const;
  std::vector<double> eval_all(std::span<const double> x) const;
  /// Coefficient form in x; requires with_polys.
  Poly element(const BasisIndex& i) const;

 private:
  int max_degree_;
  BallBasis ball_;
  // invariant_[m] lists the sign-invariant harmonics of degree 2m.
  std::vector<std::vector<std::size_t>> invariant_;
};

namespace simplex {

/// prod x_i^{kappa_i-1/2} |x|^nu (1-|x|)^{mu-1/2}.
double weight_eval(const WeightParams& params, std::span<const double> x);

/// psi(x) = (x_1^2, ..., x_d^2).
std::vector<double> psi(std::span<const double> x);
/// f o psi.
PointFunction psi_pullback(const PointFunction& f);

double kernel_direct(const SimplexBasis& basis, int n, std::span<const double> x, std::span<const double> y);
/// 2^{-d} sum over sign vectors eps of P_{2n}(W; sqrt x, eps sqrt y).
double kernel_folded(const BallBasis& ball_basis, int n, std::span<const double> x, std::span<const double> y);
/// Concise integral of Xi_n^lambda(2 zeta^2 - 1); resolution 0 picks the
/// exactness minimum.
double kernel_concise(const WeightParams& params, int n, std::span<const double> x, std::span<const double> y,
                      int resolution = 0);
double kernel_concise(const ConciseIntegrator& L, int n, std::span<const double> x, std::span<const double> y);

/// L_x g(y) on the simplex, g a function of s = 2 zeta^2 - 1.
double translation(const ConciseIntegrator& L, const ScalarFunction& g, std::span<const double> x,
                   std::span<const double> y);

double cesaro_kernel(const ConciseIntegrator& L, int n, double delta, std::span<const double> x,
                     std::span<const double> y);
double cesaro_mean(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, int n,
                   double delta, std::span<const double> x);

/// psi applied to ball::polar_grid(d).
std::vector<double> grid(int d);

}  // namespace simplex
}  // namespace gegenball
