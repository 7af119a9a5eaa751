#include "gegenball/ball.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gegenball/errors.hpp"

namespace gegenball {

namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return s;
}

void require_dim(const WeightParams& p, std::span<const double> x, const char* name) {
  if (static_cast<int>(x.size()) != p.d)
    throw std::invalid_argument(std::string(name) + " has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(p.d));
}

void require_in_ball(const WeightParams& p, std::span<const double> x, const char* name) {
  require_dim(p, x, name);
  if (norm2(x) > 1.0 + 1e-12) throw std::domain_error(std::string(name) + " lies outside the unit ball");
}

void require_in_simplex(const WeightParams& p, std::span<const double> x, const char* name) {
  require_dim(p, x, name);
  double s = 0.0;
  for (double c : x) {
    if (c < -1e-14) throw std::domain_error(std::string(name) + " has a negative coordinate");
    s += c;
  }
  if (s > 1.0 + 1e-12) throw std::domain_error(std::string(name) + " lies outside the simplex");
}

}  // namespace

// ---------------------------------------------------------------------------

BallBasis::BallBasis(WeightParams params, int max_degree, bool with_polys)
    : params_(std::move(params)), max_degree_(max_degree) {
  params_.validate();
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  harmonics_.reserve(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) harmonics_.push_back(harmonics::h_harmonic_basis(m, params_.kappa, with_polys));
}

BallBasis::BallBasis(WeightParams params, std::vector<HarmonicBasis> harmonics)
    : params_(std::move(params)), max_degree_(static_cast<int>(harmonics.size()) - 1), harmonics_(std::move(harmonics)) {
  params_.validate();
  if (harmonics_.empty()) throw std::invalid_argument("at least the degree-0 harmonics are required");
  for (int m = 0; m <= max_degree_; ++m)
    if (harmonics_[m].degree != m || harmonics_[m].kappa != params_.kappa)
      throw std::invalid_argument("harmonic basis " + std::to_string(m) + " does not match the degree or kappa");
}

const HarmonicBasis& BallBasis::harmonic(int m) const {
  if (m < 0 || m > max_degree_) throw std::out_of_range("harmonic degree out of range");
  return harmonics_[m];
}

std::vector<BasisIndex> BallBasis::indices(int n) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of range");
  std::vector<BasisIndex> out;
  for (int j = 0; 2 * j <= n; ++j)
    for (std::size_t l = 0; l < harmonics_[n - 2 * j].size(); ++l) out.push_back({n, j, static_cast<int>(l)});
  return out;
}

std::size_t BallBasis::dimension(int n) const {
  std::size_t s = 0;
  for (int j = 0; 2 * j <= n; ++j) s += harmonics_[n - 2 * j].size();
  return s;
}

std::size_t BallBasis::offset(int n) const {
  std::size_t s = 0;
  for (int k = 0; k < n; ++k) s += dimension(k);
  return s;
}

JacobiParams BallBasis::radial_params(int n, int j) const {
  return {params_.mu - 0.5, n - 2 * j + params_.nu + params_.lambda_kappa()};
}

double BallBasis::norm(int n, int j) const { return ball::basis_norm(params_, n, j); }

double BallBasis::eval(const BasisIndex& i, std::span<const double> x) const {
  if (i.n < 0 || i.n > max_degree_ || i.j < 0 || 2 * i.j > i.n) throw std::out_of_range("basis index out of range");
  const HarmonicBasis& h = harmonics_[i.n - 2 * i.j];
  if (i.l < 0 || static_cast<std::size_t>(i.l) >= h.size()) throw std::out_of_range("harmonic index out of range");
  return special::jacobi_eval(i.j, radial_params(i.n, i.j), 2.0 * norm2(x) - 1.0) * h.eval(i.l, x);
}

std::vector<double> BallBasis::eval_degree(int n, std::span<const double> x) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree out of range");
  const double s = 2.0 * norm2(x) - 1.0;
  std::vector<double> out;
  out.reserve(dimension(n));
  std::vector<double> y;
  for (int j = 0; 2 * j <= n; ++j) {
    const HarmonicBasis& h = harmonics_[n - 2 * j];
    const double rad = special::jacobi_eval(j, radial_params(n, j), s);
    y.resize(h.size());
    h.eval_all(x, y);
    for (double v : y) out.push_back(rad * v);
  }
  return out;
}

std::vector<double> BallBasis::eval_all(std::span<const double> x) const {
  const int N = max_degree_;
  const double s = 2.0 * norm2(x) - 1.0;
  std::vector<std::vector<double>> y(N + 1), rad(N + 1);
  for (int m = 0; m <= N; ++m) {
    y[m].resize(harmonics_[m].size());
    harmonics_[m].eval_all(x, y[m]);
    rad[m].resize((N - m) / 2 + 1);
    special::jacobi_eval_all({params_.mu - 0.5, m + params_.nu + params_.lambda_kappa()}, s, rad[m]);
  }
  std::vector<double> out;
  out.reserve(total_size());
  for (int n = 0; n <= N; ++n)
    for (int j = 0; 2 * j <= n; ++j) {
      const int m = n - 2 * j;
      for (double v : y[m]) out.push_back(rad[m][j] * v);
    }
  return out;
}

BallBasisElement BallBasis::element(const BasisIndex& i) const {
  if (i.n < 0 || i.n > max_degree_ || i.j < 0 || 2 * i.j > i.n) throw std::out_of_range("basis index out of range");
  const HarmonicBasis& h = harmonics_[i.n - 2 * i.j];
  if (i.l < 0 || static_cast<std::size_t>(i.l) >= h.size()) throw std::out_of_range("harmonic index out of range");
  if (!h.has_polys()) throw std::logic_error("basis was built without coefficient forms");
  BallBasisElement e;
  e.index = i;
  e.radial = radial_params(i.n, i.j);
  e.angular = h.elements[i.l];
  const int d = params_.d;
  const Poly inner = 2.0 * Poly::norm_squared(d) - Poly::constant(d, 1.0);
  e.poly = compose_univariate(special::jacobi_coefficients(i.j, e.radial), inner) * e.angular;
  e.norm = norm(i.n, i.j);
  return e;
}

std::string ExpansionCoefficients::to_json() const {
  nlohmann::json j;
  j["max_degree"] = max_degree;
  j["coefficients"] = nlohmann::json::array();
  for (std::size_t k = 0; k < index.size(); ++k)
    j["coefficients"].push_back(
        {{"n", index[k].n}, {"j", index[k].j}, {"l", index[k].l}, {"value", value[k]}, {"norm", norm[k]}});
  return j.dump();
}

// ---------------------------------------------------------------------------

ConciseIntegrator::ConciseIntegrator(const WeightParams& params, Domain domain, int nodes, int t_nodes)
    : params_(params), domain_(domain), nodes_(nodes) {
  params_.validate();
  if (domain != Domain::ball && domain != Domain::simplex)
    throw std::invalid_argument("concise integrals exist for the ball and the simplex only");
  if (nodes < 1) throw std::invalid_argument("resolution must be >= 1 node per factor");
  if (t_nodes < 0) throw std::invalid_argument("t_nodes must be >= 0");
  const int nt = std::max(nodes, t_nodes);
  if (params_.mu < 0.0) throw std::invalid_argument("mu: the concise kernel formula needs mu >= 0");
  if (params_.nu < 0.0) throw std::invalid_argument("nu: the concise kernel formula needs nu >= 0");

  const double lk = params_.lambda_kappa();
  double raw = 1.0;
  for (double k : params_.kappa) {
    if (domain == Domain::ball) {
      s_.push_back(quadrature::intertwining_factor(nodes, k));
      if (k > 0.0) raw *= quadrature::gauss_jacobi(nodes, k - 1.0, k).total_mass();
    } else {
      s_.push_back(quadrature::symmetric_factor(nodes, k));
      if (k > 0.0) raw *= quadrature::gauss_jacobi(nodes, k - 1.0, k - 1.0).total_mass();
    }
  }
  t_ = quadrature::symmetric_factor(nt, params_.mu);
  if (params_.mu > 0.0) raw *= quadrature::gauss_jacobi(nt, params_.mu - 1.0, params_.mu - 1.0).total_mass();
  if (params_.nu > 0.0) {
    const Rule1D u = quadrature::gauss_jacobi(nodes, lk, params_.nu - 1.0).shifted();
    raw *= u.total_mass();
    u_ = u.normalized();
    const Rule1D v = quadrature::gauss_jacobi(nodes, params_.nu - 0.5, params_.nu - 0.5);
    raw *= v.total_mass();
    v_ = v.normalized();
  } else {
    // nu -> 0+: the normalized u^{nu-1} factor collapses onto u = 0, which
    // also removes the v integral.
    u_.kind = WeightKind::point_mass_limit;
    u_.nodes = {0.0};
    u_.weights = {1.0};
    v_ = u_;
    use_v_ = false;
  }
  const double a = special::a_kernel(params_.kappa, params_.mu, params_.nu);
  if (std::abs(a * raw - 1.0) > 1e-8)
    throw NumericalError("kernel normalization a_{kappa,mu,nu} disagrees with the quadrature masses (a*mass = " +
                         std::to_string(a * raw) + ")");
}

int ConciseIntegrator::min_nodes(Domain domain, int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  return domain == Domain::simplex ? degree + 1 : degree / 2 + 1;
}

std::size_t ConciseIntegrator::size() const {
  std::size_t n = t_.size() * u_.size() * (use_v_ ? v_.size() : 1);
  for (const auto& s : s_) n *= s.size();
  return n;
}

void ConciseIntegrator::visit(std::span<const double> x, std::span<const double> y,
                              const std::function<void(double, double)>& f) const {
  const int d = params_.d;
  double A, C;
  std::vector<double> c(d);
  if (domain_ == Domain::ball) {
    require_in_ball(params_, x, "x");
    require_in_ball(params_, y, "y");
    const double nx = norm2(x), ny = norm2(y);
    A = std::sqrt(nx * ny);
    C = std::sqrt(std::max(0.0, 1.0 - nx)) * std::sqrt(std::max(0.0, 1.0 - ny));
    for (int i = 0; i < d; ++i) c[i] = x[i] * y[i];
  } else {
    require_in_simplex(params_, x, "x");
    require_in_simplex(params_, y, "y");
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < d; ++i) {
      sx += x[i];
      sy += y[i];
      c[i] = std::sqrt(std::max(0.0, x[i]) * std::max(0.0, y[i]));
    }
    A = std::sqrt(sx * sy);
    C = std::sqrt(std::max(0.0, 1.0 - sx)) * std::sqrt(std::max(0.0, 1.0 - sy));
  }

  // sum_i c_i s_i over the s tensor, with weights.
  std::vector<double> S{0.0}, Sw{1.0};
  for (int i = 0; i < d; ++i) {
    std::vector<double> nS, nW;
    nS.reserve(S.size() * s_[i].size());
    nW.reserve(S.size() * s_[i].size());
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t b = 0; b < s_[i].size(); ++b) {
        nS.push_back(S[a] + c[i] * s_[i].nodes[b]);
        nW.push_back(Sw[a] * s_[i].weights[b]);
      }
    S.swap(nS);
    Sw.swap(nW);
  }
  const std::size_t nv = use_v_ ? v_.size() : 1;
  const bool simplex = domain_ == Domain::simplex;
  for (std::size_t iu = 0; iu < u_.size(); ++iu) {
    const double u = u_.nodes[iu];
    for (std::size_t iv = 0; iv < nv; ++iv) {
      const double uv = use_v_ ? A * u * v_.nodes[iv] : 0.0;
      const double wuv = u_.weights[iu] * (use_v_ ? v_.weights[iv] : 1.0);
      for (std::size_t it = 0; it < t_.size(); ++it) {
        const double base = uv + C * t_.nodes[it];
        const double w0 = wuv * t_.weights[it];
        for (std::size_t is = 0; is < S.size(); ++is) {
          double z = std::clamp(base + (1.0 - u) * S[is], -1.0, 1.0);
          if (simplex) z = 2.0 * z * z - 1.0;
          f(z, w0 * Sw[is]);
        }
      }
    }
  }
}

double ConciseIntegrator::apply(const ScalarFunction& g, std::span<const double> x,
                                std::span<const double> y) const {
  double s = 0.0;
  visit(x, y, [&](double z, double w) { s += w * g(z); });
  return s;
}

// ---------------------------------------------------------------------------

namespace ball {

double weight_eval(const WeightParams& params, std::span<const double> x) {
  params.validate();
  require_dim(params, x, "x");
  const double r2 = norm2(x);
  if (r2 > 1.0 + 1e-12) throw std::domain_error("x lies outside the unit ball");
  double w = 1.0;
  for (int i = 0; i < params.d; ++i) w *= std::pow(std::abs(x[i]), 2.0 * params.kappa[i]);
  w *= std::pow(r2, params.nu);
  w *= std::pow(std::max(0.0, 1.0 - r2), params.mu - 0.5);
  return w;
}

double basis_norm(const WeightParams& params, int n, int j) {
  params.validate();
  if (n < 0 || j < 0 || 2 * j > n) throw std::out_of_range("basis_norm needs 0 <= 2j <= n");
  using special::pochhammer;
  const double g = params.gamma_kappa(), d = params.d, mu = params.mu, nu = params.nu;
  const double lam = params.lambda_total();
  double j_fact = 1.0;
  for (int k = 2; k <= j; ++k) j_fact *= k;
  return pochhammer(nu + g + d / 2.0, n - j) * pochhammer(mu + 0.5, j) * (n - j + lam) /
         (j_fact * pochhammer(nu + mu + g + (d + 1.0) / 2.0, n - j) * (n + lam));
}

double kernel_direct(const BallBasis& basis, int n, std::span<const double> x, std::span<const double> y) {
  require_in_ball(basis.params(), x, "x");
  require_in_ball(basis.params(), y, "y");
  const auto ix = basis.indices(n);
  const auto px = basis.eval_degree(n, x);
  const auto py = basis.eval_degree(n, y);
  double s = 0.0;
  for (std::size_t k = 0; k < ix.size(); ++k) s += px[k] * py[k] / basis.norm(n, ix[k].j);
  return s;
}

std::vector<double> kernel_direct_all(const BallBasis& basis, std::span<const double> x,
                                      std::span<const double> y) {
  require_in_ball(basis.params(), x, "x");
  require_in_ball(basis.params(), y, "y");
  const auto px = basis.eval_all(x);
  const auto py = basis.eval_all(y);
  std::vector<double> out(basis.max_degree() + 1, 0.0);
  std::size_t k = 0;
  for (int n = 0; n <= basis.max_degree(); ++n)
    for (const auto& i : basis.indices(n)) {
      out[n] += px[k] * py[k] / basis.norm(n, i.j);
      ++k;
    }
  return out;
}

double kernel_concise(const ConciseIntegrator& L, int n, std::span<const double> x, std::span<const double> y) {
  if (L.domain() != Domain::ball) throw std::invalid_argument("kernel_concise needs a ball integrator");
  if (L.nodes() < ConciseIntegrator::min_nodes(Domain::ball, n))
    throw std::invalid_argument("resolution " + std::to_string(L.nodes()) + " is below the exactness bound " +
                                std::to_string(ConciseIntegrator::min_nodes(Domain::ball, n)) + " for degree " +
                                std::to_string(n));
  const GegenbauerIndex idx{L.params().lambda_total()};
  return L.apply([&](double z) { return special::gegenbauer_Z_eval(n, idx, z); }, x, y);
}

double kernel_concise(const WeightParams& params, int n, std::span<const double> x, std::span<const double> y,
                      int resolution) {
  const int need = ConciseIntegrator::min_nodes(Domain::ball, n);
  if (resolution != 0 && resolution < need)
    throw std::invalid_argument("resolution " + std::to_string(resolution) + " is below the exactness bound " +
                                std::to_string(need) + " for degree " + std::to_string(n));
  const ConciseIntegrator L(params, Domain::ball, resolution == 0 ? need : resolution);
  return kernel_concise(L, n, x, y);
}

double translation_L(const ConciseIntegrator& L, const ScalarFunction& g, std::span<const double> x,
                     std::span<const double> y) {
  if (L.domain() != Domain::ball) throw std::invalid_argument("translation_L needs a ball integrator");
  return L.apply(g, x, y);
}

double gegenbauer_coefficient(const ScalarFunction& g, int n, double lambda, int nodes) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  const Rule1D rule = quadrature::gauss_jacobi(nodes, lambda - 0.5, lambda - 0.5).normalized();
  const GegenbauerIndex idx{lambda};
  const double at_one = special::gegenbauer_Z_eval(n, idx, 1.0);
  return quadrature::integrate(rule, [&](double t) { return g(t) * special::gegenbauer_Z_eval(n, idx, t); }) /
         at_one;
}

ExpansionCoefficients project(const BallBasis& basis, const PointFunction& f, const RuleND& rule) {
  if (rule.dim != basis.params().d) throw std::invalid_argument("rule dimension does not match the basis");
  ExpansionCoefficients c;
  c.max_degree = basis.max_degree();
  for (int n = 0; n <= basis.max_degree(); ++n)
    for (const auto& i : basis.indices(n)) {
      c.index.push_back(i);
      c.norm.push_back(basis.norm(n, i.j));
    }
  c.value.assign(c.index.size(), 0.0);
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const double fv = f(rule.point(p));
    if (!std::isfinite(fv)) throw std::domain_error("function value is not finite at a quadrature node");
    const auto v = basis.eval_all(rule.point(p));
    const double w = rule.weights[p] * fv;
    for (std::size_t k = 0; k < v.size(); ++k) c.value[k] += w * v[k];
  }
  return c;
}

double projection_eval(const BallBasis& basis, const ExpansionCoefficients& c, int n, std::span<const double> x) {
  if (n > c.max_degree || n > basis.max_degree()) throw std::out_of_range("projection degree exceeds the expansion");
  const auto v = basis.eval_degree(n, x);
  const std::size_t off = basis.offset(n);
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) s += c.value[off + k] / c.norm[off + k] * v[k];
  return s;
}

double convolve(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values,
                const ScalarFunction& g, std::span<const double> x) {
  if (f_values.size() != rule.size()) throw std::invalid_argument("f_values must match the rule size");
  std::vector<double> vals(rule.size());
  for (std::size_t p = 0; p < rule.size(); ++p) vals[p] = f_values[p] * L.apply(g, x, rule.point(p));
  return quadrature::pairwise_dot(rule.weights, vals);
}

double convolve_spectral(const BallBasis& basis, const ExpansionCoefficients& c, std::span<const double> multipliers,
                         std::span<const double> x) {
  double s = 0.0;
  const int top = std::min<int>(static_cast<int>(multipliers.size()) - 1, c.max_degree);
  for (int n = 0; n <= top; ++n)
    if (multipliers[n] != 0.0) s += multipliers[n] * projection_eval(basis, c, n, x);
  return s;
}

double cesaro_kernel(const ConciseIntegrator& L, int n, double delta, std::span<const double> x,
                     std::span<const double> y) {
  const double lam = L.params().lambda_total();
  const std::vector<double> A = special::cesaro_weights(n, delta);
  std::vector<double> z(n + 1);
  return L.apply(
      [&](double t) {
        special::gegenbauer_Z_all(lam, t, z);
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += A[k] * z[k];
        return s;
      },
      x, y);
}

double cesaro_mean(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, int n,
                   double delta, std::span<const double> x) {
  const double lam = L.params().lambda_total();
  const std::vector<double> A = special::cesaro_weights(n, delta);
  std::vector<double> z(n + 1);
  return convolve(
      L, rule, f_values,
      [&](double t) {
        special::gegenbauer_Z_all(lam, t, z);
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += A[k] * z[k];
        return s;
      },
      x);
}

double poisson_kernel(const ConciseIntegrator& L, double r, std::span<const double> x, std::span<const double> y) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0,1)");
  const double lam = L.params().lambda_total();
  return L.apply([&](double t) { return special::poisson_profile(r, lam, t); }, x, y);
}

double poisson_integral(const ConciseIntegrator& L, const RuleND& rule, std::span<const double> f_values, double r,
                        std::span<const double> x) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0,1)");
  const double lam = L.params().lambda_total();
  return convolve(L, rule, f_values, [&](double t) { return special::poisson_profile(r, lam, t); }, x);
}

std::vector<LebesgueEstimate> lebesgue_sweep(std::span<const double> values_x, std::size_t grid_size,
                                             std::span<const double> values_y, std::span<const double> weights,
                                             std::span<const double> norms, std::span<const int> degree,
                                             const std::vector<std::pair<int, double>>& requests) {
  using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto M = static_cast<Eigen::Index>(norms.size());
  const auto ny = static_cast<Eigen::Index>(weights.size());
  const auto nx = static_cast<Eigen::Index>(grid_size);
  if (values_x.size() != static_cast<std::size_t>(nx * M) || values_y.size() != static_cast<std::size_t>(ny * M) ||
      degree.size() != norms.size())
    throw std::invalid_argument("lebesgue_sweep: inconsistent matrix sizes");
  const Eigen::Map<const Mat> X(values_x.data(), nx, M);
  const Eigen::Map<const Mat> Y(values_y.data(), ny, M);
  const Eigen::Map<const Eigen::VectorXd> w(weights.data(), ny);

  int top = 0;
  for (const auto& r : requests) {
    if (r.first < 0) throw std::invalid_argument("lebesgue_sweep: negative degree");
    top = std::max(top, r.first);
  }
  // Column ranges of each degree; eval_all order is degree-major.
  std::vector<Eigen::Index> start(top + 2);
  Eigen::Index col = 0;
  for (int k = 0; k <= top + 1; ++k) {
    while (col < M && degree[col] < k) ++col;
    start[k] = col;
  }
  if (M == 0 || degree[M - 1] < top) throw std::invalid_argument("lebesgue_sweep: basis does not reach the requested degree");

  std::vector<std::vector<double>> weights_n;
  for (const auto& [n, delta] : requests) weights_n.push_back(special::cesaro_weights(n, delta));
  const Eigen::Map<const Eigen::VectorXd> inv_norm_src(norms.data(), M);
  const Eigen::VectorXd inv_norm = inv_norm_src.cwiseInverse();

  std::vector<Eigen::VectorXd> row_sum(requests.size(), Eigen::VectorXd::Zero(nx));
  std::vector<double> min_k(requests.size(), std::numeric_limits<double>::infinity());
  constexpr Eigen::Index block = 256;
  std::vector<Eigen::MatrixXd> per_degree(top + 1);
  Eigen::MatrixXd K;
  for (Eigen::Index b = 0; b < ny; b += block) {
    const Eigen::Index len = std::min(block, ny - b);
    for (int k = 0; k <= top; ++k) {
      const Eigen::Index c0 = start[k], c = start[k + 1] - start[k];
      per_degree[k] = (X.middleCols(c0, c) * inv_norm.segment(c0, c).asDiagonal()) *
                      Y.block(b, c0, len, c).transpose();
    }
    for (std::size_t r = 0; r < requests.size(); ++r) {
      const int n = requests[r].first;
      K = weights_n[r][0] * per_degree[0];
      for (int k = 1; k <= n; ++k) K += weights_n[r][k] * per_degree[k];
      row_sum[r] += K.cwiseAbs() * w.segment(b, len);
      min_k[r] = std::min(min_k[r], K.minCoeff());
    }
  }
  std::vector<LebesgueEstimate> out;
  for (std::size_t r = 0; r < requests.size(); ++r)
    out.push_back({requests[r].first, requests[r].second, row_sum[r].maxCoeff(), min_k[r]});
  return out;
}

std::vector<double> polar_grid(int d) {
  std::vector<double> g;
  const double pi = std::numbers::pi;
  if (d == 2) {
    for (int i = 0; i < 40; ++i)
      for (int k = 0; k < 40; ++k) {
        const double r = i / 39.0, th = 2.0 * pi * k / 40.0;
        g.push_back(r * std::cos(th));
        g.push_back(r * std::sin(th));
      }
  } else if (d == 3) {
    for (int i = 0; i < 10; ++i)
      for (int a = 0; a < 8; ++a)
        for (int k = 0; k < 12; ++k) {
          const double r = i / 9.0, th = pi * a / 7.0, ph = 2.0 * pi * k / 12.0;
          g.push_back(r * std::sin(th) * std::cos(ph));
          g.push_back(r * std::sin(th) * std::sin(ph));
          g.push_back(r * std::cos(th));
        }
  } else {
    throw std::invalid_argument("polar grids exist for d = 2 and d = 3");
  }
  return g;
}

std::vector<double> sup_grid(int d) {
  if (d != 2 && d != 3) throw std::invalid_argument("sup grids exist for d = 2 and d = 3");
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<double> g;
  for (int q = 0; q < 40; ++q) {
    const double rad = q / 39.0, th = golden * q;
    if (d == 2) {
      g.push_back(rad * std::cos(th));
      g.push_back(rad * std::sin(th));
    } else {
      const double z = 1.0 - 2.0 * (q + 0.5) / 40.0, s = std::sqrt(1.0 - z * z);
      g.push_back(rad * s * std::cos(th));
      g.push_back(rad * s * std::sin(th));
      g.push_back(rad * z);
    }
  }
  return g;
}

double de_residual(const BallBasis& basis, const BasisIndex& i, std::span<const double> x, bool drop_correction) {
  const WeightParams& p = basis.params();
  require_in_ball(p, x, "x");
  const Poly P = basis.element(i).poly;
  const double lk = p.lambda_kappa();
  const double c1 = 2.0 * lk + 2.0 * p.mu + 2.0 * p.nu + 1.0;
  const double eta = i.n * (i.n + c1);
  const Poly EP = x_dot_grad(P);
  const Poly lhs = harmonics::h_laplacian(p.kappa, P) - x_dot_grad(EP) - c1 * EP + eta * P;
  double r = lhs.eval(x);
  if (p.nu != 0.0 && !drop_correction) {
    const double r2 = norm2(x);
    if (r2 == 0.0) throw std::domain_error("the nu != 0 equation is singular at x = 0");
    r += 2.0 * p.nu * (EP.eval(x) - (i.n - 2 * i.j) * P.eval(x)) / r2;
  }
  return std::abs(r);
}

std::pair<double, double> contiguous_residual(const WeightParams& params, int n, int j, int l) {
  params.validate();
  if (n < 0 || j < 0 || 2 * j > n) throw std::out_of_range("contiguous_residual needs 0 <= 2j <= n");
  WeightParams up = params;
  up.nu += 1.0;
  return contiguous_residual(BallBasis(params, n + 2, true), BallBasis(up, n + 2, true), n, j, l);
}

std::pair<double, double> contiguous_residual(const BallBasis& b0, const BallBasis& b1, int n, int j, int l) {
  if (n < 0 || j < 0 || 2 * j > n) throw std::out_of_range("contiguous_residual needs 0 <= 2j <= n");
  if (b0.max_degree() < n + 2 || b1.max_degree() < n + 2)
    throw std::invalid_argument("contiguous_residual needs bases up to degree n+2");
  const WeightParams& params = b0.params();
  if (std::abs(b1.params().nu - params.nu - 1.0) > 1e-15) throw std::invalid_argument("second basis must use nu+1");
  const double lk = params.lambda_kappa(), mu = params.mu, nu = params.nu;
  const int d = params.d;

  const Poly p0 = b0.element({n, j, l}).poly;
  const Poly p1 = b1.element({n, j, l}).poly;
  Poly r1 = (n + lk + nu + mu + 0.5) * p0 - (n - j + lk + nu + mu + 0.5) * p1;
  if (j >= 1) r1 = r1 - (j + mu - 0.5) * b1.element({n - 2, j - 1, l}).poly;

  const Poly r2 = (n + lk + nu + mu + 1.5) * (Poly::norm_squared(d) * p1) -
                  (j + 1.0) * b0.element({n + 2, j + 1, l}).poly - (n - j + lk + nu + 1.0) * p0;
  return {r1.max_abs_coeff(), r2.max_abs_coeff()};
}

}  // namespace ball
}  // namespace gegenball
