#include "gegenball/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gegenball/errors.hpp"

namespace gegenball {

namespace {

void graded(int dim, int k, int pos, Exponent& e, std::vector<Exponent>& out) {
  if (pos == dim - 1) {
    e[pos] = k;
    out.push_back(e);
    return;
  }
  for (int a = k; a >= 0; --a) {
    e[pos] = a;
    graded(dim, k - a, pos + 1, e, out);
  }
}

double monomial(const Exponent& e, std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int p = 0; p < e[i]; ++p) v *= x[i];
  return v;
}

}  // namespace

std::vector<double> GsBasis::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  std::vector<double> mv(monomials.size());
  for (std::size_t m = 0; m < monomials.size(); ++m) mv[m] = monomial(monomials[m], x);
  std::vector<double> out(coeffs.size(), 0.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t m = 0; m < mv.size(); ++m) out[k] += coeffs[k][m] * mv[m];
  return out;
}

namespace oracle {

GsBasis gs_basis(const WeightParams& params, Domain domain, int n) {
  params.validate();
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  RuleND rule;
  if (domain == Domain::ball)
    rule = quadrature::ball_rule(params, 2 * n);
  else if (domain == Domain::simplex)
    rule = quadrature::simplex_rule(params, 2 * n);
  else
    throw std::invalid_argument("the oracle covers the ball and the simplex");

  GsBasis b;
  b.degree = n;
  b.dim = params.d;
  Exponent e(params.d, 0);
  std::vector<int> deg;
  for (int k = 0; k <= n; ++k) {
    const std::size_t before = b.monomials.size();
    graded(params.d, k, 0, e, b.monomials);
    deg.insert(deg.end(), b.monomials.size() - before, k);
  }
  const std::size_t M = b.monomials.size(), P = rule.size();

  // Columns: sqrt(w) * monomial values; coef tracks each column in the
  // monomial basis.
  std::vector<std::vector<double>> q(M, std::vector<double>(P)), coef(M, std::vector<double>(M, 0.0));
  for (std::size_t m = 0; m < M; ++m) {
    for (std::size_t p = 0; p < P; ++p) q[m][p] = std::sqrt(rule.weights[p]) * monomial(b.monomials[m], rule.point(p));
    coef[m][m] = 1.0;
  }
  for (std::size_t m = 0; m < M; ++m) {
    double orig = 0.0;
    for (double v : q[m]) orig += v * v;
    orig = std::sqrt(orig);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < m; ++k) {
        double dot = 0.0;
        for (std::size_t p = 0; p < P; ++p) dot += q[k][p] * q[m][p];
        for (std::size_t p = 0; p < P; ++p) q[m][p] -= dot * q[k][p];
        for (std::size_t c = 0; c <= k; ++c) coef[m][c] -= dot * coef[k][c];
      }
    double nrm = 0.0;
    for (double v : q[m]) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (!(nrm > 1e-12 * orig))
      throw NumericalError("Gram-Schmidt oracle: monomial " + std::to_string(m) + " is numerically dependent");
    for (double& v : q[m]) v /= nrm;
    for (std::size_t c = 0; c <= m; ++c) coef[m][c] /= nrm;
  }
  for (std::size_t m = 0; m < M; ++m)
    if (deg[m] == n) b.coeffs.push_back(coef[m]);
  return b;
}

double kernel_oracle(const GsBasis& basis, std::span<const double> x, std::span<const double> y) {
  const auto a = basis.eval(x), c = basis.eval(y);
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * c[k];
  return s;
}

}  // namespace oracle
}  // namespace gegenball
