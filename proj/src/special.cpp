#include "gegenball/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gegenball::special {

namespace {

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative, got " + std::to_string(n));
}

void validate(const GenGegenbauerIndex& idx) {
  if (!(idx.a > -0.5)) throw std::invalid_argument("generalized Gegenbauer index requires a > -1/2");
  if (!(idx.b >= 0.0)) throw std::invalid_argument("generalized Gegenbauer index requires b >= 0");
}

void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("Z_n^lambda requires lambda > 0 (the lambda -> 0 limit is not supported)");
}

double log_gamma(double x) { return std::lgamma(x); }

// Value and first two derivatives of C_n^{(a,b)} at t.
struct GenGegenbauerJet {
  double y, dy, d2y;
};

GenGegenbauerJet gen_gegenbauer_jet(int n, const GenGegenbauerIndex& idx, double t) {
  const int m = n / 2;
  const double s = 2.0 * t * t - 1.0;
  if (n % 2 == 0) {
    const JacobiParams p{idx.a - 0.5, idx.b - 0.5};
    const double c = pochhammer(idx.a + idx.b, m) / pochhammer(idx.b + 0.5, m);
    const double P = jacobi_eval(m, p, s);
    const double dP = jacobi_derivative(m, p, s, 1);
    const double d2P = jacobi_derivative(m, p, s, 2);
    return {c * P, c * 4.0 * t * dP, c * (16.0 * t * t * d2P + 4.0 * dP)};
  }
  const JacobiParams p{idx.a - 0.5, idx.b + 0.5};
  const double c = pochhammer(idx.a + idx.b, m + 1) / pochhammer(idx.b + 0.5, m + 1);
  const double P = jacobi_eval(m, p, s);
  const double dP = jacobi_derivative(m, p, s, 1);
  const double d2P = jacobi_derivative(m, p, s, 2);
  return {c * t * P, c * (P + 4.0 * t * t * dP), c * (12.0 * t * dP + 16.0 * t * t * t * d2P)};
}

}  // namespace

double pochhammer(double a, int n) {
  require_degree(n);
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + k;
  return r;
}

double binom_real(double delta, int n) {
  require_degree(n);
  // binom(n+delta, n) = (delta+1)_n / n!
  double r = 1.0;
  for (int k = 1; k <= n; ++k) r *= (delta + k) / k;
  return r;
}

void validate(const JacobiParams& p) {
  if (!(p.alpha > -1.0) || !(p.beta > -1.0))
    throw std::invalid_argument("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha=" +
                                std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) + ")");
}

void jacobi_eval_all(const JacobiParams& p, double t, std::span<double> out) {
  validate(p);
  if (out.empty()) return;
  const double a = p.alpha, b = p.beta;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = (a + 1.0) + 0.5 * (a + b + 2.0) * (t - 1.0);
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double n = static_cast<double>(k);
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c3 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    out[k] = (c2 * out[k - 1] - c3 * out[k - 2]) / c1;
  }
}

double jacobi_eval(int n, const JacobiParams& p, double t) {
  require_degree(n);
  validate(p);
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  double pm1 = 1.0;
  double pk = (a + 1.0) + 0.5 * (a + b + 2.0) * (t - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * pk - c3 * pm1) / c1;
    pm1 = pk;
    pk = next;
  }
  return pk;
}

double jacobi_derivative(int n, const JacobiParams& p, double t, int order) {
  require_degree(n);
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (order > n) return 0.0;
  // d^k/dt^k P_n^{(a,b)} = (n+a+b+1)_k / 2^k P_{n-k}^{(a+k,b+k)}
  const double scale = pochhammer(n + p.alpha + p.beta + 1.0, order) / std::ldexp(1.0, order);
  return scale * jacobi_eval(n - order, {p.alpha + order, p.beta + order}, t);
}

double jacobi_norm(int n, const JacobiParams& p) {
  require_degree(n);
  validate(p);
  if (n == 0) return 1.0;
  const double a = p.alpha, b = p.beta;
  // (a+1)_n (b+1)_n (a+b+1) / ((2n+a+b+1) (a+b+1)_n n!), with the (a+b+1)
  // cancelled so that a+b = -1 is handled.
  double num = pochhammer(a + 1.0, n) * pochhammer(b + 1.0, n);
  double den = (2.0 * n + a + b + 1.0) * pochhammer(a + b + 2.0, n - 1);
  for (int k = 2; k <= n; ++k) den *= k;
  return num / den;
}

double jacobi_orthonormal(int n, const JacobiParams& p, double t) {
  return jacobi_eval(n, p, t) / std::sqrt(jacobi_norm(n, p));
}

std::vector<double> jacobi_coefficients(int n, const JacobiParams& p) {
  require_degree(n);
  validate(p);
  const double a = p.alpha, b = p.beta;
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{(a + 1.0) - 0.5 * (a + b + 2.0), 0.5 * (a + b + 2.0)};
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double lin = (s - 1.0) * s * (s - 2.0);
    const double cst = (s - 1.0) * (a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += lin * cur[i];
      next[i] += cst * cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= c3 * prev[i];
    for (double& c : next) c /= c1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double gegenbauer_eval(int n, double lambda, double t) {
  require_degree(n);
  if (!(lambda > -0.5)) throw std::invalid_argument("Gegenbauer index requires lambda > -1/2");
  if (n == 0) return 1.0;
  double cm1 = 1.0;
  double c = 2.0 * lambda * t;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * t * c - (k + 2.0 * lambda - 1.0) * cm1) / (k + 1.0);
    cm1 = c;
    c = next;
  }
  return c;
}

double gegenbauer_Z_eval(int n, const GegenbauerIndex& idx, double t) {
  require_degree(n);
  require_positive_lambda(idx.lambda);
  return (n + idx.lambda) / idx.lambda * gegenbauer_eval(n, idx.lambda, t);
}

void gegenbauer_Z_all(double lambda, double t, std::span<double> out) {
  require_positive_lambda(lambda);
  if (out.empty()) return;
  double cm1 = 1.0;
  out[0] = 1.0;
  if (out.size() == 1) return;
  double c = 2.0 * lambda * t;
  out[1] = (1.0 + lambda) / lambda * c;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    const double next = (2.0 * (kk + lambda) * t * c - (kk + 2.0 * lambda - 1.0) * cm1) / (kk + 1.0);
    cm1 = c;
    c = next;
    out[k + 1] = (kk + 1.0 + lambda) / lambda * c;
  }
}

double gen_gegenbauer_eval(int n, const GenGegenbauerIndex& idx, double t) {
  require_degree(n);
  validate(idx);
  return gen_gegenbauer_jet(n, idx, t).y;
}

double gen_gegenbauer_ode_residual(int n, const GenGegenbauerIndex& idx, double t) {
  require_degree(n);
  validate(idx);
  if (t == 0.0) throw std::domain_error("generalized Gegenbauer equation is singular at t = 0");
  if (!(t > -1.0 && t < 1.0)) throw std::domain_error("generalized Gegenbauer equation needs t in (-1,1)");
  const auto [y, dy, d2y] = gen_gegenbauer_jet(n, idx, t);
  const double a = idx.a, b = idx.b;
  const double odd_part = (n % 2 == 0) ? 0.0 : y / t;  // (y(t)-y(-t))/(2t)
  return (1.0 - t * t) * d2y - (2.0 * a + 2.0 * b + 1.0) * t * dy + (2.0 * b / t) * (dy - odd_part) +
         n * (n + 2.0 * a + 2.0 * b) * y;
}

void xi_all(double lambda, double s, std::span<double> out) {
  require_positive_lambda(lambda);
  if (out.empty()) return;
  const JacobiParams p{lambda - 0.5, -0.5};
  std::vector<double> at_one(out.size()), at_s(out.size());
  jacobi_eval_all(p, 1.0, at_one);
  jacobi_eval_all(p, s, at_s);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = at_one[k] * at_s[k] / jacobi_norm(static_cast<int>(k), p);
}

double xi_eval(int n, double lambda, double s) {
  require_degree(n);
  require_positive_lambda(lambda);
  const JacobiParams p{lambda - 0.5, -0.5};
  return jacobi_eval(n, p, 1.0) * jacobi_eval(n, p, s) / jacobi_norm(n, p);
}

std::vector<double> cesaro_weights(int n, double delta) {
  require_degree(n);
  if (!(delta >= 0.0)) throw std::invalid_argument("Cesaro order delta must be >= 0");
  std::vector<double> w(n + 1);
  const double total = binom_real(delta, n);
  for (int k = 0; k <= n; ++k) w[k] = binom_real(delta, n - k) / total;
  return w;
}

double cesaro_kernel_1d(int n, double delta, double lambda, double s) {
  const auto w = cesaro_weights(n, delta);
  std::vector<double> z(n + 1);
  gegenbauer_Z_all(lambda, s, z);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += w[k] * z[k];
  return sum;
}

double cesaro_kernel_jacobi(int n, double delta, double lambda, double s) {
  const auto w = cesaro_weights(n, delta);
  std::vector<double> xi(n + 1);
  xi_all(lambda, s, xi);
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) sum += w[k] * xi[k];
  return sum;
}

double poisson_profile(double r, double lambda_total, double t) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("Poisson radius must lie in (0,1)");
  return (1.0 - r * r) / std::pow(1.0 - 2.0 * r * t + r * r, lambda_total + 1.0);
}

double c_sym(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("c_a requires a > 0; a = 0 is the point-mass limit");
  return std::exp(log_gamma(a + 0.5) - log_gamma(a) - 0.5 * std::log(std::numbers::pi));
}

double c_gegenbauer(double lambda) {
  if (!(lambda > -0.5)) throw std::invalid_argument("c_lambda requires lambda > -1/2");
  return std::exp(log_gamma(lambda + 1.0) - log_gamma(lambda + 0.5) - 0.5 * std::log(std::numbers::pi));
}

double sigma_beta(double lambda, double mu) {
  if (!(lambda > 0.0) || !(mu > 0.0)) throw std::invalid_argument("sigma_{lambda,mu} requires positive arguments");
  return std::exp(log_gamma(lambda + mu) - log_gamma(lambda) - log_gamma(mu));
}

double b_sphere(std::span<const double> kappa) {
  const double d = static_cast<double>(kappa.size());
  double gamma = 0.0, log_den = std::log(2.0);
  for (double k : kappa) {
    gamma += k;
    log_den += log_gamma(k + 0.5);
  }
  return std::exp(log_gamma(gamma + d / 2.0) - log_den);
}

double b_ball(std::span<const double> kappa, double mu, double nu) {
  const double d = static_cast<double>(kappa.size());
  double gamma = 0.0, log_prod = 0.0;
  for (double k : kappa) {
    gamma += k;
    log_prod += log_gamma(k + 0.5);
  }
  const double e = gamma + nu + d / 2.0;
  return std::exp(log_gamma(gamma + d / 2.0) + log_gamma(e + mu + 0.5) - log_gamma(e) - log_gamma(mu + 0.5) -
                  log_prod);
}

double a_kernel(std::span<const double> kappa, double mu, double nu) {
  const double d = static_cast<double>(kappa.size());
  double gamma = 0.0, a = 1.0;
  for (double k : kappa) {
    gamma += k;
    if (k > 0.0) a *= c_sym(k);
  }
  if (mu > 0.0) a *= c_sym(mu);
  if (nu > 0.0) {
    const double lambda_kappa = gamma + (d - 2.0) / 2.0;
    a *= sigma_beta(nu, lambda_kappa + 1.0) * c_gegenbauer(nu);
  }
  return a;
}

}  // namespace gegenball::special
