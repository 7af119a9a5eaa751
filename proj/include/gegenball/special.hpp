#pragma once

// Univariate orthogonal polynomials and the scalar constants that normalize
// the weight functions on [-1,1], [0,1], the sphere, the ball and the simplex.

#include <span>
#include <vector>

namespace gegenball {

struct JacobiParams {
  double alpha;
  double beta;
};

struct GegenbauerIndex {
  double lambda;
};

// Weight |t|^{2b} (1-t^2)^{a-1/2} on [-1,1].
struct GenGegenbauerIndex {
  double a;
  double b;
};

namespace special {

/// Rising factorial a(a+1)...(a+n-1), computed multiplicatively.
double pochhammer(double a, int n);

/// Binomial coefficient binom(n + delta, n) for real delta >= 0.
double binom_real(double delta, int n);

void validate(const JacobiParams& p);

/// P_n^{(alpha,beta)}(t) by the three-term recurrence.
double jacobi_eval(int n, const JacobiParams& p, double t);

/// Fills out[k] = P_k^{(alpha,beta)}(t) for k = 0..out.size()-1.
void jacobi_eval_all(const JacobiParams& p, double t, std::span<double> out);

/// d/dt P_n^{(alpha,beta)}(t).
double jacobi_derivative(int n, const JacobiParams& p, double t, int order = 1);

/// Squared norm of P_n^{(alpha,beta)} under the probability-normalized weight
/// (1-t)^alpha (1+t)^beta on [-1,1].
double jacobi_norm(int n, const JacobiParams& p);

/// Orthonormal Jacobi polynomial p_n = P_n / sqrt(jacobi_norm).
double jacobi_orthonormal(int n, const JacobiParams& p, double t);

/// Power-basis coefficients c[k] of P_n^{(alpha,beta)}(s) = sum_k c[k] s^k.
std::vector<double> jacobi_coefficients(int n, const JacobiParams& p);

/// Gegenbauer C_n^lambda(t), lambda > -1/2.
double gegenbauer_eval(int n, double lambda, double t);

/// Z_n^lambda(t) = (n+lambda)/lambda C_n^lambda(t), lambda > 0.
double gegenbauer_Z_eval(int n, const GegenbauerIndex& idx, double t);

/// out[k] = Z_k^lambda(t) for k = 0..out.size()-1.
void gegenbauer_Z_all(double lambda, double t, std::span<double> out);

/// Generalized Gegenbauer C_n^{(a,b)}(t), orthogonal for |t|^{2b}(1-t^2)^{a-1/2}.
double gen_gegenbauer_eval(int n, const GenGegenbauerIndex& idx, double t);

/// Left side of the difference-differential equation satisfied by
/// C_n^{(a,b)}:
///   (1-t^2) y'' - (2a+2b+1) t y' + (2b/t)(y' - (y(t)-y(-t))/(2t)) + n(n+2a+2b) y.
/// Throws std::domain_error at t = 0.
double gen_gegenbauer_ode_residual(int n, const GenGegenbauerIndex& idx, double t);

/// Xi_n^lambda(s) = p_n(1) p_n(s) with p_n orthonormal Jacobi (lambda-1/2, -1/2).
double xi_eval(int n, double lambda, double s);

/// out[k] = Xi_k^lambda(s) for k = 0..out.size()-1.
void xi_all(double lambda, double s, std::span<double> out);

/// Weights A_k = binom(n-k+delta, n-k) / binom(n+delta, n), k = 0..n.
std::vector<double> cesaro_weights(int n, double delta);

/// Cesaro (C,delta) kernel of the Gegenbauer series with one argument at 1.
double cesaro_kernel_1d(int n, double delta, double lambda, double s);

/// Cesaro (C,delta) kernel of the Jacobi (lambda-1/2,-1/2) series at (s,1).
double cesaro_kernel_jacobi(int n, double delta, double lambda, double s);

/// Poisson profile (1-r^2)/(1-2rt+r^2)^{lambda+1}.
double poisson_profile(double r, double lambda_total, double t);

// ---------------------------------------------------------------------------
// Normalization constants. Each one is the reciprocal of the integral of the
// weight it is attached to.

/// c_a = Gamma(a+1/2)/(sqrt(pi) Gamma(a)): normalizes (1-t^2)^{a-1}.
double c_sym(double a);

/// c_lambda for w_lambda = (1-t^2)^{lambda-1/2}: Gamma(lambda+1)/(sqrt(pi) Gamma(lambda+1/2)).
double c_gegenbauer(double lambda);

/// sigma_{lambda,mu} = Gamma(lambda+mu)/(Gamma(lambda)Gamma(mu)): normalizes
/// u^{lambda-1}(1-u)^{mu-1} on [0,1].
double sigma_beta(double lambda, double mu);

/// b_kappa: normalizes h_kappa^2 on the unit sphere S^{d-1}.
double b_sphere(std::span<const double> kappa);

/// b_{kappa,mu,nu}: normalizes the generalized Gegenbauer weight on the ball.
double b_ball(std::span<const double> kappa, double mu, double nu);

/// a_{kappa,mu,nu}: normalizes the (d+3)-fold kernel integral. Factors whose
/// exponent sits at a limit (mu = 0, nu = 0, kappa_i = 0) contribute 1.
double a_kernel(std::span<const double> kappa, double mu, double nu);

}  // namespace special
}  // namespace gegenball
