#pragma once

// Gauss-Jacobi rules and tensor-product integration over the cube, the
// sphere, the ball and the simplex.

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gegenball {

struct WeightParams;

enum class WeightKind { jacobi, shifted_jacobi, point_mass_limit };

enum class Domain { ball, sphere, simplex, cube };

const char* to_string(Domain d);

/// One-dimensional rule. For `jacobi` the interval is [-1,1] with weight
/// (1-t)^alpha (1+t)^beta; for `shifted_jacobi` it is [0,1] with weight
/// (1-u)^alpha u^beta. Weights carry the raw (unnormalized) mass.
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;
  WeightKind kind = WeightKind::jacobi;
  double alpha = 0.0;
  double beta = 0.0;

  std::size_t size() const { return nodes.size(); }
  double total_mass() const;
  /// Same nodes, weights rescaled to sum to 1.
  Rule1D normalized() const;
  /// Maps a [-1,1] Jacobi rule to [0,1]; the weight becomes (1-u)^alpha u^beta.
  Rule1D shifted() const;
};

/// Rule on a d-dimensional domain. Points are stored row-major.
struct RuleND {
  int dim = 0;
  std::vector<double> points;
  std::vector<double> weights;
  Domain domain = Domain::cube;
  int exact_degree = 0;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  double total_mass() const;
};

using PointFunction = std::function<double(std::span<const double>)>;
using ScalarFunction = std::function<double(double)>;

enum class LimitSide { both_endpoints, right_endpoint };

namespace quadrature {

/// m-node Gauss-Jacobi rule, exact to degree 2m-1 for (1-t)^alpha (1+t)^beta.
Rule1D gauss_jacobi(int m, double alpha, double beta);

/// Point-mass limit of c_a (1-t^2)^{a-1} as a -> 0+: masses 1/2 at +-1, or
/// mass 1 at t = 1 for the intertwining factor (1+t)(1-t^2)^{a-1}.
Rule1D limit_rule(LimitSide side);

/// Normalized rule for c_a (1-t^2)^{a-1} dt on [-1,1]; a = 0 routes to the
/// two-point limit rule.
Rule1D symmetric_factor(int m, double a);

/// Normalized rule for c_kappa (1+t)(1-t^2)^{kappa-1} dt on [-1,1]; kappa = 0
/// routes to the right-endpoint limit rule.
Rule1D intertwining_factor(int m, double kappa);

/// Normalized rule on the sphere S^{d-1} for b_kappa h_kappa^2 dsigma, exact
/// for polynomials of total degree <= exact_degree. d must be 2 or 3.
RuleND sphere_rule(std::span<const double> kappa, int exact_degree);

/// Normalized rule on B^d for b W_{kappa,mu,nu}, exact to exact_degree.
RuleND ball_rule(const WeightParams& params, int exact_degree);

/// Normalized rule on T^d for b U_{kappa,mu,nu}, exact to exact_degree;
/// obtained by pushing the ball rule forward under x -> (x_1^2,...,x_d^2).
RuleND simplex_rule(const WeightParams& params, int exact_degree);

/// Tensor rule on [-1,1]^k from one-dimensional factors.
RuleND tensor_rule(std::span<const Rule1D> factors);

double integrate(const Rule1D& rule, const ScalarFunction& f);
double integrate(const RuleND& rule, const PointFunction& f);

/// Pairwise summation of a weighted sum, used wherever results must not
/// depend on accumulation order beyond rounding.
double pairwise_dot(std::span<const double> w, std::span<const double> v);

/// CSV export: columns x1..xd,weight.
std::string to_csv(const RuleND& rule);

}  // namespace quadrature
}  // namespace gegenball
