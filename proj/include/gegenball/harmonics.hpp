#pragma once

// Dunkl operators for the group Z_2^d, h-harmonics, the intertwining operator
// V_kappa and the addition formula.

#include <span>
#include <vector>

#include "gegenball/poly.hpp"
#include "gegenball/quadrature.hpp"

namespace gegenball {

/// Orthonormal basis of the h-harmonics of degree n under b_kappa h_kappa^2 dsigma.
///
/// Element l is indexed by alpha[l] (|alpha| = n, last entry 0 or 1):
///   Y(x) = scale * prod_{j<d-1} rho_j^{alpha_j} C_{alpha_j}^{(lambda_j, kappa_j)}(x_j / rho_j) * x_d^{alpha_d}
/// with rho_j^2 = x_j^2 + ... + x_d^2 and lambda_j = |alpha_{>j}| + |kappa_{>j}| + (d-j-2)/2.
/// parity[l][i] is the exponent parity of x_i shared by every term of element l.
struct HarmonicBasis {
  int degree = 0;
  std::vector<double> kappa;
  std::vector<std::vector<int>> alpha;
  std::vector<std::vector<int>> parity;
  std::vector<double> scale;
  /// Coefficient form; empty unless requested at construction.
  std::vector<Poly> elements;

  std::size_t size() const { return alpha.size(); }
  bool has_polys() const { return !elements.empty() || alpha.empty(); }
  /// Product-form evaluation; stable at high degree.
  double eval(std::size_t l, std::span<const double> x) const;
  void eval_all(std::span<const double> x, std::span<double> out) const;
  /// Indices of elements invariant under every sign change (all parities even).
  std::vector<std::size_t> invariant_indices() const;
};

namespace harmonics {

/// D_i p = d_i p + kappa_i (p(x) - p(sigma_i x)) / x_i, computed on coefficients.
Poly dunkl_apply(int i, std::span<const double> kappa, const Poly& p);

/// Delta_h = D_1^2 + ... + D_d^2.
Poly h_laplacian(std::span<const double> kappa, const Poly& p);

/// Spherical part Delta_{h,0} = |x|^2 Delta_h - <x,grad>^2 - 2 lambda_kappa <x,grad>.
Poly spherical_h_laplacian(std::span<const double> kappa, const Poly& p);

/// dim of the degree-n h-harmonics in d variables.
int harmonic_dimension(int n, int d);

/// dim of the Z_2^d-invariant h-harmonics of degree 2m.
int invariant_harmonic_dimension(int m, int d);

/// Builds the orthonormal basis. d must be 2 or 3. with_polys also assembles
/// the coefficient form of every element.
HarmonicBasis h_harmonic_basis(int n, std::span<const double> kappa, bool with_polys = true);

/// V_kappa[g(<., y')](x') by tensor Gauss-Jacobi quadrature with `nodes` per
/// coordinate.
double intertwining_apply(std::span<const double> kappa, const ScalarFunction& g, std::span<const double> y_dir,
                          std::span<const double> x_dir, int nodes);

/// Right side of the addition formula, V_kappa[Z_n^{lambda_kappa}(<., y>)](x),
/// for x, y on the unit sphere. lambda_kappa = 0 (d = 2, kappa = 0) uses the
/// cosine kernel 2 cos(n theta).
double addition_kernel(int n, std::span<const double> kappa, std::span<const double> x, std::span<const double> y);

/// Addition kernels for every degree 0..max_degree with one quadrature pass.
std::vector<double> addition_kernels(int max_degree, std::span<const double> kappa, std::span<const double> x,
                                     std::span<const double> y);

/// Left side of the addition formula: sum_l Y_l(x) Y_l(y).
double harmonic_kernel_sum(const HarmonicBasis& basis, std::span<const double> x, std::span<const double> y);

}  // namespace harmonics
}  // namespace gegenball
