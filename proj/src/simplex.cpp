#include "gegenball/simplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gegenball/quadrature.hpp"

namespace gegenball {

namespace {

std::vector<double> sqrt_coords(std::span<const double> x) {
  std::vector<double> r(x.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < -1e-14) throw std::domain_error("point has a negative coordinate");
    r[i] = std::sqrt(std::max(0.0, x[i]));
    s += x[i];
  }
  if (s > 1.0 + 1e-12) throw std::domain_error("point lies outside the simplex");
  return r;
}

}  // namespace

SimplexBasis::SimplexBasis(WeightParams params, int max_degree, bool with_polys)
    : max_degree_(max_degree), ball_(std::move(params), 2 * std::max(max_degree, 0), with_polys) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  for (int m = 0; m <= max_degree; ++m) invariant_.push_back(ball_.harmonic(2 * m).invariant_indices());
}

std::vector<BasisIndex> SimplexBasis::indices(int n) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of range");
  std::vector<BasisIndex> out;
  for (int j = 0; j <= n; ++j)
    for (std::size_t l : invariant_[n - j]) out.push_back({n, j, static_cast<int>(l)});
  return out;
}

std::size_t SimplexBasis::dimension(int n) const {
  std::size_t s = 0;
  for (int j = 0; j <= n; ++j) s += invariant_[n - j].size();
  return s;
}

std::size_t SimplexBasis::offset(int n) const {
  std::size_t s = 0;
  for (int k = 0; k < n; ++k) s += dimension(k);
  return s;
}

double SimplexBasis::norm(int n, int j) const { return ball::basis_norm(params(), 2 * n, j); }

std::vector<double> SimplexBasis::eval_degree(int n, std::span<const double> x) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of range");
  if (static_cast<int>(x.size()) != params().d) throw std::invalid_argument("point dimension mismatch");
  const auto z = sqrt_coords(x);
  double s = 0.0;
  for (double c : x) s += c;
  const double lk = params().lambda_kappa();
  std::vector<double> out;
  out.reserve(dimension(n));
  std::vector<double> y;
  for (int j = 0; j <= n; ++j) {
    const int m = 2 * (n - j);
    const HarmonicBasis& h = ball_.harmonic(m);
    const double rad = special::jacobi_eval(j, {params().mu - 0.5, m + params().nu + lk}, 2.0 * s - 1.0);
    y.resize(h.size());
    h.eval_all(z, y);
    for (std::size_t l : invariant_[n - j]) out.push_back(rad * y[l]);
  }
  return out;
}

std::vector<double> SimplexBasis::eval_all(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(total_size());
  for (int n = 0; n <= max_degree_; ++n) {
    const auto v = eval_degree(n, x);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Poly SimplexBasis::element(const BasisIndex& i) const {
  if (i.n < 0 || i.n > max_degree_ || i.j < 0 || i.j > i.n) throw std::out_of_range("basis index out of range");
  return ball_.element({2 * i.n, i.j, i.l}).poly.halve_exponents();
}

namespace simplex {

double weight_eval(const WeightParams& params, std::span<const double> x) {
  params.validate();
  if (static_cast<int>(x.size()) != params.d) throw std::invalid_argument("point dimension mismatch");
  double s = 0.0, w = 1.0;
  for (int i = 0; i < params.d; ++i) {
    if (x[i] < 0.0) throw std::domain_error("point has a negative coordinate");
    w *= std::pow(x[i], params.kappa[i] - 0.5);
    s += x[i];
  }
  if (s > 1.0 + 1e-12) throw std::domain_error("point lies outside the simplex");
  return w * std::pow(s, params.nu) * std::pow(std::max(0.0, 1.0 - s), params.mu - 0.5);
}

std::vector<double> psi(std::span<const double> x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * x[i];
  return r;
}

PointFunction psi_pullback(const PointFunction& f) {
  return [f](std::span<const double> x) { return f(psi(x)); };
}

double kernel_direct(const SimplexBasis& basis, int n, std::span<const double> x, std::span<const double> y) {
  const auto ix = basis.indices(n);
  const auto px = basis.eval_degree(n, x);
  const auto py = basis.eval_degree(n, y);
  double s = 0.0;
  for (std::size_t k = 0; k < ix.size(); ++k) s += px[k] * py[k] / basis.norm(n, ix[k].j);
  return s;
}

double kernel_folded(const BallBasis& ball_basis, int n, std::span<const double> x, std::span<const double> y) {
  const int d = ball_basis.params().d;
  if (2 * n > ball_basis.max_degree()) throw std::out_of_range("ball basis degree is below 2n");
  const auto zx = sqrt_coords(x);
  const auto zy = sqrt_coords(y);
  std::vector<double> e(d);
  double s = 0.0;
  for (int mask = 0; mask < (1 << d); ++mask) {
    for (int i = 0; i < d; ++i) e[i] = (mask >> i & 1) ? -zy[i] : zy[i];
    s += ball::kernel_direct(ball_basis, 2 * n, zx, e);
  }
  return s / (1 << d);
}

double kernel_concise(const ConciseIntegrator& L, int n, std::span<const double> x, std::span<const double> y) {
  if (L.domain() != Domain::simplex) throw std::invalid_argument("kernel_concise needs a simplex integrator");
  const int need = ConciseIntegrator::min_nodes(Domain::simplex, n);
  if (L.nodes() < need)
    throw std::invalid_argument("resolution " + std::to_string(L.nodes()) + " is below the exactness bound " +
                                std::to_string(need) + " for degree " + std::to_string(n));
  const double lam = L.params().lambda_total();
  return L.apply([&](double s) { return special::xi_eval(n, lam, s); }, x, y);
}

double kernel_concise(const WeightParams& params, int n, std::span<const double> x, std::span<const double> y,
                      int resolution) {
  const int need = ConciseIntegrator::min_nodes(Domain::simplex, n);
  if (resolution != 0 && resolution < need)
    throw std::invalid_argument("resolution " + std::to_string(resolution) + " is below the exactness bound " +
                                std::to_string(need) + " for degree " + std::to_string(n));
  const ConciseIntegrator L(params, Domain::simplex, resolution == 0 ? need : resolution);
  return kernel_concise(L, n, x, y);
}

double translation(const ConciseIntegrator& L, const ScalarFunction& g, std::span<const double> x,
                   std::span<const double> y) {
  if (L.domain() != Domain::simplex) throw std::invalid_argument("translation needs a simplex integrator");
  return L.apply(g, x, y);
}

double cesaro_kernel(const ConciseIntegrator& L, int n, double delta, std::span<const double> x,
                     std::span<const double> y) {
  const double lam = L.params().lambda_total();
  const auto A = special::cesaro_weights(n, delta);
  std::vector<double> xi(n + 1);
  return translation(
      L,
      [&](double s) {
        special::xi_all(lam, s, xi);
        double r = 0.0;
        for (int k = 0; k <= n; ++k) r += A[k] * xi[k];
        return r;
      },
      x, y);
}

double cesaro_mean(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, int n,
                   double delta, std::span<const double> x) {
  if (f_values.size() != rule.size()) throw std::invalid_argument("f_values must match the rule size");
  std::vector<double> vals(rule.size());
  for (std::size_t p = 0; p < rule.size(); ++p) vals[p] = f_values[p] * cesaro_kernel(L, n, delta, x, rule.point(p));
  return quadrature::pairwise_dot(rule.weights, vals);
}

std::vector<double> grid(int d) {
  auto g = ball::polar_grid(d);
  for (double& c : g) c *= c;
  return g;
}

}  // namespace simplex
}  // namespace gegenball
