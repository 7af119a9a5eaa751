#include "gegenball/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gegenball/errors.hpp"
#include "gegenball/special.hpp"

namespace gegenball {

std::vector<std::size_t> HarmonicBasis::invariant_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < parity.size(); ++l)
    if (std::all_of(parity[l].begin(), parity[l].end(), [](int p) { return p == 0; })) out.push_back(l);
  return out;
}

namespace harmonics {
namespace {
JacobiParams factor_params(int j, const std::vector<int>& alpha, std::span<const double> kappa);
double factor_eval(int j, const std::vector<int>& alpha, std::span<const double> kappa, std::span<const double> x);
}  // namespace
}  // namespace harmonics

double HarmonicBasis::eval(std::size_t l, std::span<const double> x) const {
  const int d = static_cast<int>(kappa.size());
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("point dimension does not match harmonic basis");
  double v = scale[l];
  for (int j = 0; j < d - 1; ++j) v *= harmonics::factor_eval(j, alpha[l], kappa, x);
  if (alpha[l][d - 1]) v *= x[d - 1];
  return v;
}

void HarmonicBasis::eval_all(std::span<const double> x, std::span<double> out) const {
  for (std::size_t l = 0; l < size(); ++l) out[l] = eval(l, x);
}

namespace harmonics {

namespace {

// Coefficient of x^{k-1} in D_i x^k: k + 2 kappa_i [k odd].
double dunkl_factor(int k, double kappa) { return k + ((k % 2) ? 2.0 * kappa : 0.0); }

void check_kappa(std::span<const double> kappa, const Poly& p) {
  if (static_cast<int>(kappa.size()) != p.dim())
    throw std::invalid_argument("kappa has " + std::to_string(kappa.size()) + " components but the polynomial has " +
                                std::to_string(p.dim()) + " variables");
}

// Dunkl Laplacian restricted to the first `nvars` coordinates.
Poly partial_h_laplacian(std::span<const double> kappa, const Poly& p, int nvars) {
  Poly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < nvars; ++i) {
      if (e[i] < 2) continue;
      Exponent f = e;
      f[i] -= 2;
      r.add_term(f, c * dunkl_factor(e[i], kappa[i]) * dunkl_factor(e[i] - 1, kappa[i]));
    }
  }
  return r;
}

Poly times_power(const Poly& p, int var, int power) {
  Poly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[var] += power;
    r.add_term(f, c);
  }
  return r;
}

void enumerate_exponents(int dim, int degree, Exponent& cur, int pos, std::vector<Exponent>& out) {
  if (pos == dim - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[pos] = k;
    enumerate_exponents(dim, degree - k, cur, pos + 1, out);
  }
}

// Exponents of total degree `degree` in `dim` variables, graded-lex descending.
std::vector<Exponent> exponents_of_degree(int dim, int degree) {
  std::vector<Exponent> out;
  if (dim == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(dim, 0);
  enumerate_exponents(dim, degree, cur, 0, out);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_unit(std::span<const double> v, const char* name) {
  double s = 0.0;
  for (double c : v) s += c * c;
  if (std::abs(std::sqrt(s) - 1.0) > 1e-9)
    throw std::domain_error(std::string(name) + " must lie on the unit sphere");
}

// Parameters of the Jacobi polynomial behind factor j: the factor is
// rho^{2m} x_j^e P_m^{(lambda_j - 1/2, kappa_j - 1/2 + e)}(2 x_j^2 / rho^2 - 1), alpha_j = 2m + e.
JacobiParams factor_params(int j, const std::vector<int>& alpha, std::span<const double> kappa) {
  const int d = static_cast<int>(kappa.size());
  double lambda = (d - j - 2) / 2.0;
  for (int i = j + 1; i < d; ++i) lambda += alpha[i] + kappa[i];
  return {lambda - 0.5, kappa[j] - 0.5 + (alpha[j] % 2)};
}

double factor_eval(int j, const std::vector<int>& alpha, std::span<const double> kappa, std::span<const double> x) {
  const int k = alpha[j];
  if (k == 0) return 1.0;
  double rho2 = 0.0;
  for (std::size_t i = j; i < x.size(); ++i) rho2 += x[i] * x[i];
  if (rho2 == 0.0) return 0.0;
  const int m = k / 2;
  const double s = std::clamp(2.0 * x[j] * x[j] / rho2 - 1.0, -1.0, 1.0);
  double v = special::jacobi_eval(m, factor_params(j, alpha, kappa), s) * std::pow(rho2, m);
  if (k % 2) v *= x[j];
  return v;
}

Poly factor_poly(int d, int j, const std::vector<int>& alpha, std::span<const double> kappa) {
  const int k = alpha[j];
  if (k == 0) return Poly::constant(d, 1.0);
  const int m = k / 2;
  const std::vector<double> q = special::jacobi_coefficients(m, factor_params(j, alpha, kappa));
  Poly rho2(d);
  for (int i = j; i < d; ++i) {
    Exponent e(d, 0);
    e[i] = 2;
    rho2.add_term(e, 1.0);
  }
  Exponent e2(d, 0);
  e2[j] = 2;
  const Poly a = 2.0 * Poly::monomial(e2) - rho2;
  std::vector<Poly> a_pow{Poly::constant(d, 1.0)}, r_pow{Poly::constant(d, 1.0)};
  for (int i = 1; i <= m; ++i) {
    a_pow.push_back(a_pow.back() * a);
    r_pow.push_back(r_pow.back() * rho2);
  }
  Poly f(d);
  for (int i = 0; i <= m; ++i) f = f + q[i] * (a_pow[i] * r_pow[m - i]);
  return times_power(f, j, k % 2);
}

}  // namespace

Poly dunkl_apply(int i, std::span<const double> kappa, const Poly& p) {
  check_kappa(kappa, p);
  if (i < 0 || i >= p.dim()) throw std::invalid_argument("Dunkl direction out of range");
  Poly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add_term(f, c * dunkl_factor(e[i], kappa[i]));
  }
  return r;
}

Poly h_laplacian(std::span<const double> kappa, const Poly& p) {
  check_kappa(kappa, p);
  return partial_h_laplacian(kappa, p, p.dim());
}

Poly spherical_h_laplacian(std::span<const double> kappa, const Poly& p) {
  check_kappa(kappa, p);
  const double lambda_kappa = std::accumulate(kappa.begin(), kappa.end(), 0.0) + (p.dim() - 2) / 2.0;
  const Poly euler = x_dot_grad(p);
  return Poly::norm_squared(p.dim()) * h_laplacian(kappa, p) - x_dot_grad(euler) - (2.0 * lambda_kappa) * euler;
}

int harmonic_dimension(int n, int d) {
  if (n < 0) return 0;
  return static_cast<int>(binomial(n + d - 1, d - 1) - binomial(n + d - 3, d - 1));
}

int invariant_harmonic_dimension(int m, int d) {
  if (m < 0) return 0;
  return static_cast<int>(binomial(m + d - 2, d - 2));
}

HarmonicBasis h_harmonic_basis(int n, std::span<const double> kappa, bool with_polys) {
  const int d = static_cast<int>(kappa.size());
  if (d < 2 || d > 3) throw std::invalid_argument("h-harmonic bases are built for d = 2 and d = 3 only");
  if (n < 0) throw std::invalid_argument("harmonic degree must be >= 0");
  for (double k : kappa)
    if (!(k >= 0.0) || !std::isfinite(k)) throw std::invalid_argument("kappa components must be finite and >= 0");

  HarmonicBasis basis;
  basis.degree = n;
  basis.kappa.assign(kappa.begin(), kappa.end());
  for (int e = 0; e <= 1 && e <= n; ++e) {
    for (Exponent a : exponents_of_degree(d - 1, n - e)) {
      a.push_back(e);
      std::vector<int> par(d);
      for (int i = 0; i < d; ++i) par[i] = a[i] % 2;
      basis.alpha.push_back(std::move(a));
      basis.parity.push_back(std::move(par));
    }
  }
  if (static_cast<int>(basis.size()) != harmonic_dimension(n, d))
    throw NumericalError("h-harmonic basis has " + std::to_string(basis.size()) + " elements, expected " +
                         std::to_string(harmonic_dimension(n, d)));

  // The product basis is orthogonal; only the norms are needed.
  basis.scale.assign(basis.size(), 1.0);
  const RuleND rule = quadrature::sphere_rule(kappa, 2 * n);
  std::vector<double> norms(basis.size(), 0.0), vals(basis.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    basis.eval_all(rule.point(i), vals);
    for (std::size_t l = 0; l < basis.size(); ++l) norms[l] += rule.weights[i] * vals[l] * vals[l];
  }
  for (std::size_t l = 0; l < basis.size(); ++l) {
    if (!(norms[l] > 0.0) || !std::isfinite(norms[l]))
      throw NumericalError("h-harmonic of degree " + std::to_string(n) + " has non-positive norm");
    basis.scale[l] = 1.0 / std::sqrt(norms[l]);
  }

  if (with_polys) {
    for (std::size_t l = 0; l < basis.size(); ++l) {
      Poly y = Poly::constant(d, basis.scale[l]);
      for (int j = 0; j < d - 1; ++j) y = y * factor_poly(d, j, basis.alpha[l], kappa);
      y = times_power(y, d - 1, basis.alpha[l][d - 1]);
      basis.elements.push_back(std::move(y));
    }
  }
  return basis;
}

double intertwining_apply(std::span<const double> kappa, const ScalarFunction& g, std::span<const double> y_dir,
                          std::span<const double> x_dir, int nodes) {
  const std::size_t d = kappa.size();
  if (y_dir.size() != d || x_dir.size() != d) throw std::invalid_argument("dimension mismatch in intertwining_apply");
  if (nodes < 1) throw std::invalid_argument("intertwining_apply needs at least one node per coordinate");
  std::vector<Rule1D> factors;
  for (double k : kappa) factors.push_back(quadrature::intertwining_factor(nodes, k));
  const RuleND rule = quadrature::tensor_rule(factors);
  std::vector<double> vals(rule.size());
  for (std::size_t n = 0; n < rule.size(); ++n) {
    const auto t = rule.point(n);
    double arg = 0.0;
    for (std::size_t i = 0; i < d; ++i) arg += x_dir[i] * y_dir[i] * t[i];
    vals[n] = g(arg);
  }
  return quadrature::pairwise_dot(rule.weights, vals);
}

std::vector<double> addition_kernels(int max_degree, std::span<const double> kappa, std::span<const double> x,
                                     std::span<const double> y) {
  const std::size_t d = kappa.size();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("dimension mismatch in addition_kernels");
  if (max_degree < 0) throw std::invalid_argument("degree must be >= 0");
  require_unit(x, "x");
  require_unit(y, "y");
  const double lambda_kappa = std::accumulate(kappa.begin(), kappa.end(), 0.0) + (static_cast<double>(d) - 2.0) / 2.0;
  std::vector<double> out(max_degree + 1, 0.0);

  if (lambda_kappa < 0.0) throw std::domain_error("addition kernel needs lambda_kappa >= 0");
  if (lambda_kappa == 0.0) {
    // Circle with kappa = 0: Z_n^0 is the limit 2 T_n.
    double c = 0.0;
    for (std::size_t i = 0; i < d; ++i) c += x[i] * y[i];
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    out[0] = 1.0;
    for (int n = 1; n <= max_degree; ++n) out[n] = 2.0 * std::cos(n * theta);
    return out;
  }

  std::vector<Rule1D> factors;
  for (double k : kappa) factors.push_back(quadrature::intertwining_factor(max_degree / 2 + 1, k));
  const RuleND rule = quadrature::tensor_rule(factors);
  std::vector<double> z(max_degree + 1);
  for (std::size_t n = 0; n < rule.size(); ++n) {
    const auto t = rule.point(n);
    double arg = 0.0;
    for (std::size_t i = 0; i < d; ++i) arg += x[i] * y[i] * t[i];
    special::gegenbauer_Z_all(lambda_kappa, arg, z);
    for (int k = 0; k <= max_degree; ++k) out[k] += rule.weights[n] * z[k];
  }
  return out;
}

double addition_kernel(int n, std::span<const double> kappa, std::span<const double> x, std::span<const double> y) {
  return addition_kernels(n, kappa, x, y)[n];
}

double harmonic_kernel_sum(const HarmonicBasis& basis, std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t l = 0; l < basis.size(); ++l) s += basis.eval(l, x) * basis.eval(l, y);
  return s;
}

}  // namespace harmonics
}  // namespace gegenball
