#pragma once

// Independent reference: Gram-Schmidt on monomials against a quadrature rule.
// Shares nothing with the closed-form bases beyond the rule itself.

#include <span>
#include <vector>

#include "gegenball/params.hpp"
#include "gegenball/poly.hpp"
#include "gegenball/quadrature.hpp"

namespace gegenball {

/// Orthonormal basis of the degree-n orthogonal polynomials, each element
/// stored as coefficients over `monomials` (all exponents of degree <= n in
/// graded-lex order).
struct GsBasis {
  int degree = 0;
  int dim = 0;
  std::vector<Exponent> monomials;
  /// coeffs[k][m]: coefficient of monomials[m] in element k.
  std::vector<std::vector<double>> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::vector<double> eval(std::span<const double> x) const;
};

namespace oracle {

/// Modified Gram-Schmidt with one reorthogonalization pass. Throws
/// NumericalError when a monomial is dependent to 1e-12 relative.
GsBasis gs_basis(const WeightParams& params, Domain domain, int n);

/// sum_k Q_k(x) Q_k(y).
double kernel_oracle(const GsBasis& basis, std::span<const double> x, std::span<const double> y);

}  // namespace oracle
}  // namespace gegenball
