#pragma once

// Orthogonal structure on the unit ball for W_{kappa,mu,nu}: basis and norms,
// Fourier expansions, reproducing kernels, the translation operator L_x,
// convolution, Cesaro and Poisson summability, and residual checks for the
// differential-difference equations and contiguous relations.

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gegenball/harmonics.hpp"
#include "gegenball/params.hpp"
#include "gegenball/poly.hpp"
#include "gegenball/quadrature.hpp"
#include "gegenball/special.hpp"

namespace gegenball {

struct BasisIndex {
  int n = 0;
  int j = 0;
  int l = 0;
};

struct BallBasisElement {
  BasisIndex index;
  JacobiParams radial{0.0, 0.0};
  Poly angular;
  Poly poly;
  double norm = 1.0;
};

/// P_{j,l}^n(x) = P_j^{(mu-1/2, n-2j+nu+lambda_kappa)}(2|x|^2-1) Y_{l,n-2j}(x)
/// for every n <= max_degree. Within a degree, elements are ordered by j, then l.
class BallBasis {
 public:
  BallBasis(WeightParams params, int max_degree, bool with_polys = false);
  /// Reuses harmonics[m] (degree m, same kappa) for m = 0..harmonics.size()-1.
  BallBasis(WeightParams params, std::vector<HarmonicBasis> harmonics);

  const WeightParams& params() const { return params_; }
  int max_degree() const { return max_degree_; }
  const HarmonicBasis& harmonic(int m) const;

  std::vector<BasisIndex> indices(int n) const;
  std::size_t dimension(int n) const;
  /// Position of the first degree-n element in eval_all order.
  std::size_t offset(int n) const;
  std::size_t total_size() const { return offset(max_degree_ + 1); }

  JacobiParams radial_params(int n, int j) const;
  double norm(int n, int j) const;

  double eval(const BasisIndex& i, std::span<const double> x) const;
  /// Values of every degree-n element, in indices(n) order.
  std::vector<double> eval_degree(int n, std::span<const double> x) const;
  /// Values of every element up to max_degree, degree-major.
  std::vector<double> eval_all(std::span<const double> x) const;

  /// Coefficient form; requires with_polys at construction.
  BallBasisElement element(const BasisIndex& i) const;

 private:
  WeightParams params_;
  int max_degree_;
  std::vector<HarmonicBasis> harmonics_;
};

struct ExpansionCoefficients {
  int max_degree = 0;
  std::vector<BasisIndex> index;
  /// f-hat = <f, P_{j,l}^n>.
  std::vector<double> value;
  std::vector<double> norm;

  std::string to_json() const;
};

/// a_{kappa,mu,nu} times the (d+3)-fold concise kernel integral (ball) or its
/// simplex version. Each integration factor is a normalized Gauss-Jacobi
/// rule; zero exponents route to the point-mass limits.
class ConciseIntegrator {
 public:
  /// t_nodes > 0 gives the t factor its own node count; it carries the
  /// largest coefficient in zeta when x or y is near the center.
  ConciseIntegrator(const WeightParams& params, Domain domain, int nodes, int t_nodes = 0);

  /// Nodes per factor that make the degree-n kernel exact.
  static int min_nodes(Domain domain, int degree);

  const WeightParams& params() const { return params_; }
  Domain domain() const { return domain_; }
  int nodes() const { return nodes_; }
  std::size_t size() const;

  /// Ball: a * int g(zeta). Simplex: a * int g(2 zeta^2 - 1).
  double apply(const ScalarFunction& g, std::span<const double> x, std::span<const double> y) const;
  /// Visits every (argument, weight) pair; the argument is zeta (ball) or
  /// 2 zeta^2 - 1 (simplex).
  void visit(std::span<const double> x, std::span<const double> y,
             const std::function<void(double, double)>& f) const;

 private:
  WeightParams params_;
  Domain domain_;
  int nodes_;
  std::vector<Rule1D> s_;
  Rule1D t_, u_, v_;
  bool use_v_ = true;
};

namespace ball {

/// h_kappa^2(x) |x|^{2nu} (1-|x|^2)^{mu-1/2}.
double weight_eval(const WeightParams& params, std::span<const double> x);

/// H_j^n in closed form.
double basis_norm(const WeightParams& params, int n, int j);

/// Reproducing kernel by the orthogonal-basis sum.
double kernel_direct(const BallBasis& basis, int n, std::span<const double> x, std::span<const double> y);
/// P_k(x,y) for k = 0..basis.max_degree().
std::vector<double> kernel_direct_all(const BallBasis& basis, std::span<const double> x, std::span<const double> y);

/// Concise integral form; resolution 0 picks the exactness minimum, smaller
/// positive values are rejected.
double kernel_concise(const WeightParams& params, int n, std::span<const double> x, std::span<const double> y,
                      int resolution = 0);
double kernel_concise(const ConciseIntegrator& L, int n, std::span<const double> x, std::span<const double> y);

/// L_x g(y).
double translation_L(const ConciseIntegrator& L, const ScalarFunction& g, std::span<const double> x,
                     std::span<const double> y);

/// g-hat_n = c_lambda int g(t) C_n^lambda(t)/C_n^lambda(1) w_lambda(t) dt by an
/// m-node Gauss rule.
double gegenbauer_coefficient(const ScalarFunction& g, int n, double lambda, int nodes);

ExpansionCoefficients project(const BallBasis& basis, const PointFunction& f, const RuleND& rule);
/// proj_n f(x) from precomputed coefficients.
double projection_eval(const BallBasis& basis, const ExpansionCoefficients& c, int n, std::span<const double> x);

/// (f * g)(x) = sum_y w_y f(y) L_x g(y), with f given by its values on `rule`.
double convolve(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values,
                const ScalarFunction& g, std::span<const double> x);
/// sum_n multipliers[n] proj_n f(x).
double convolve_spectral(const BallBasis& basis, const ExpansionCoefficients& c, std::span<const double> multipliers,
                         std::span<const double> x);

/// K_n^delta(x,y) = L_x[k_n^delta(w_lambda; ., 1)](y).
double cesaro_kernel(const ConciseIntegrator& L, int n, double delta, std::span<const double> x,
                     std::span<const double> y);
/// S_n^delta f(x) through the convolution.
double cesaro_mean(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, int n,
                   double delta, std::span<const double> x);

/// Poisson kernel L_x P_r(y).
double poisson_kernel(const ConciseIntegrator& L, double r, std::span<const double> x, std::span<const double> y);
/// P_r f(x) through the convolution.
double poisson_integral(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, double r,
                        std::span<const double> x);

struct LebesgueEstimate {
  int n = 0;
  double delta = 0.0;
  double lebesgue = 0.0;
  double min_kernel = 0.0;
};

/// max_x sum_y w_y |K_n^delta(x,y)| and min K_n^delta over x in `grid`
/// (row-major points) and y on `rule`, for each requested (n, delta). The
/// kernel is the direct sum of degree projections, one matrix product per
/// (n, delta). `values_x`/`values_y` hold eval_all rows; `norms` holds the
/// norm of each eval_all column and `degree` its degree.
std::vector<LebesgueEstimate> lebesgue_sweep(std::span<const double> values_x, std::size_t grid_size,
                                             std::span<const double> values_y, std::span<const double> weights,
                                             std::span<const double> norms, std::span<const int> degree,
                                             const std::vector<std::pair<int, double>>& requests);

/// Fixed polar grid on the ball (40 x 40 for d = 2).
std::vector<double> polar_grid(int d);

/// Fixed 40-point grid (golden-angle spiral, radii 0..1) for sup-norm estimates.
std::vector<double> sup_grid(int d);

/// Residual of D_{kappa,mu} P + eta_n P (nu = 0) or of the nu != 0 equation
/// with the j-dependent correction, at x. drop_correction removes the
/// 2 nu (<x,grad> - (n-2j)) P / |x|^2 term (negative control).
double de_residual(const BallBasis& basis, const BasisIndex& i, std::span<const double> x,
                   bool drop_correction = false);

/// Max-coefficient residuals of the two contiguous relations in nu for the
/// element (n, j, l); the second relation uses the nu+1 element as input.
std::pair<double, double> contiguous_residual(const WeightParams& params, int n, int j, int l);
/// Same, with bases for nu and nu+1 (coefficient forms, degree >= n+2) built once.
std::pair<double, double> contiguous_residual(const BallBasis& at_nu, const BallBasis& at_nu1, int n, int j, int l);

}  // namespace ball
}  // namespace gegenball
