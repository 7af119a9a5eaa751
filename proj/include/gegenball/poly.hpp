#pragma once

// Sparse multivariate polynomials with real coefficients keyed by
// multi-index. Values are immutable once built; every operation returns a new
// polynomial.

#include <map>
#include <span>
#include <string>
#include <vector>

namespace gegenball {

using Exponent = std::vector<int>;

class Poly {
 public:
  explicit Poly(int dim = 1);

  static Poly constant(int dim, double c);
  static Poly variable(int dim, int i);
  static Poly monomial(Exponent e, double c = 1.0);
  /// |x|^2 = x_1^2 + ... + x_d^2.
  static Poly norm_squared(int dim);
  /// |x| = x_1 + ... + x_d (the simplex coordinate sum).
  static Poly coordinate_sum(int dim);

  int dim() const { return dim_; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  std::size_t size() const { return terms_.size(); }

  double coeff(const Exponent& e) const;
  const std::map<Exponent, double>& terms() const { return terms_; }
  double max_abs_coeff() const;

  double eval(std::span<const double> x) const;
  double operator()(std::span<const double> x) const { return eval(x); }

  Poly derivative(int i) const;
  /// Terms of total degree exactly k.
  Poly homogeneous_part(int k) const;
  /// p(x_1,..,-x_i,..,x_d).
  Poly reflect(int i) const;
  /// p(x_1^2, ..., x_d^2).
  Poly square_arguments() const;
  /// Inverse of square_arguments; throws unless every exponent is even.
  Poly halve_exponents() const;

  Poly& add_term(const Exponent& e, double c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(double s, const Poly& p);
  friend Poly operator*(const Poly& p, double s) { return s * p; }

 private:
  void check_dim(const Poly& other) const;

  int dim_;
  std::map<Exponent, double> terms_;
};

/// q(inner) for a univariate q given by power-basis coefficients.
Poly compose_univariate(std::span<const double> coeffs, const Poly& inner);

/// Euler operator <x, grad> p = sum_i x_i d_i p.
Poly x_dot_grad(const Poly& p);

/// JSON form: {"dim": d, "terms": [[[e1,..,ed], c], ...]}.
std::string to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

}  // namespace gegenball
