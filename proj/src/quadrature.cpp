#include "gegenball/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gegenball/io.hpp"
#include "gegenball/params.hpp"
#include "gegenball/special.hpp"

namespace gegenball {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::ball: return "ball";
    case Domain::sphere: return "sphere";
    case Domain::simplex: return "simplex";
    case Domain::cube: return "cube";
  }
  return "unknown";
}

namespace {

// Limit rules integrate every polynomial exactly against their limit measure.
constexpr int kExactAll = 1 << 20;

double log_jacobi_mass(double alpha, double beta) {
  return (alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
         std::lgamma(alpha + beta + 2.0);
}

// Nodes needed so that 2m-1 >= degree.
int nodes_for_degree(int degree) { return std::max(1, degree / 2 + 1); }

// Dirichlet rule on the simplex {rho_i >= 0, sum rho_i = 1} with density
// prod rho_i^{a_i}, normalized to mass 1, exact for degree `degree` in rho.
void dirichlet_rule(std::span<const double> a, int degree, std::vector<std::vector<double>>& pts,
                    std::vector<double>& wts) {
  pts.clear();
  wts.clear();
  const std::size_t k = a.size();
  if (k == 1) {
    pts.push_back({1.0});
    wts.push_back(1.0);
    return;
  }
  // rho_1 = s with density s^{a_1} (1-s)^{sum_{i>1} a_i + k-2}; the rest is
  // (1-s) times a Dirichlet point on k-1 components.
  double rest = static_cast<double>(k) - 2.0;
  for (std::size_t i = 1; i < k; ++i) rest += a[i];
  const Rule1D s_rule = quadrature::gauss_jacobi(nodes_for_degree(degree), rest, a[0]).shifted().normalized();
  std::vector<std::vector<double>> sub_pts;
  std::vector<double> sub_wts;
  dirichlet_rule(a.subspan(1), degree, sub_pts, sub_wts);
  for (std::size_t i = 0; i < s_rule.size(); ++i) {
    const double s = s_rule.nodes[i];
    for (std::size_t j = 0; j < sub_wts.size(); ++j) {
      std::vector<double> p(k);
      p[0] = s;
      for (std::size_t c = 0; c + 1 < k; ++c) p[c + 1] = (1.0 - s) * sub_pts[j][c];
      pts.push_back(std::move(p));
      wts.push_back(s_rule.weights[i] * sub_wts[j]);
    }
  }
}

void require_supported_dim(std::size_t d) {
  if (d < 2 || d > 3) throw std::invalid_argument("sphere rules are built for d = 2 and d = 3 only");
}

}  // namespace

double Rule1D::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

Rule1D Rule1D::normalized() const {
  Rule1D r = *this;
  const double m = total_mass();
  for (double& w : r.weights) w /= m;
  return r;
}

Rule1D Rule1D::shifted() const {
  if (kind != WeightKind::jacobi) throw std::logic_error("only [-1,1] Jacobi rules can be shifted");
  Rule1D r = *this;
  r.kind = WeightKind::shifted_jacobi;
  for (double& x : r.nodes) x = 0.5 * (x + 1.0);
  const double scale = std::pow(0.5, alpha + beta + 1.0);
  for (double& w : r.weights) w *= scale;
  return r;
}

double RuleND::total_mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

namespace quadrature {

Rule1D gauss_jacobi(int m, double alpha, double beta) {
  if (m < 1) throw std::invalid_argument("gauss_jacobi needs at least one node");
  special::validate(JacobiParams{alpha, beta});
  const double ab = alpha + beta;

  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 0));
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < m; ++k) {
    double b2;
    if (k == 1) {
      b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      const double s = 2.0 * k + ab;
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigenvalue solver failed");

  const JacobiParams p{alpha, beta};
  Rule1D rule;
  rule.kind = WeightKind::jacobi;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.exact_degree = 2 * m - 1;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  // Polish the eigenvalues by Newton on P_m, then use the closed-form weights.
  const double log_c = std::lgamma(m + alpha + 1.0) + std::lgamma(m + beta + 1.0) - std::lgamma(m + ab + 1.0) -
                       std::lgamma(m + 1.0) + (ab + 1.0) * std::log(2.0);
  const double mass = std::exp(log_jacobi_mass(alpha, beta));
  for (int i = 0; i < m; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const double f = special::jacobi_eval(m, p, x);
      const double df = special::jacobi_derivative(m, p, x);
      const double step = f / df;
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double df = special::jacobi_derivative(m, p, x);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_c) / ((1.0 - x * x) * df * df);
    const double gw = mass * solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
    if (!std::isfinite(rule.weights[i]) || std::abs(rule.weights[i] - gw) > 1e-6 * mass) rule.weights[i] = gw;
  }
  return rule;
}

Rule1D limit_rule(LimitSide side) {
  Rule1D r;
  r.kind = WeightKind::point_mass_limit;
  r.exact_degree = kExactAll;
  if (side == LimitSide::both_endpoints) {
    r.nodes = {-1.0, 1.0};
    r.weights = {0.5, 0.5};
  } else {
    r.nodes = {1.0};
    r.weights = {1.0};
  }
  return r;
}

Rule1D symmetric_factor(int m, double a) {
  if (a < 0.0) throw std::invalid_argument("symmetric factor exponent a must be >= 0");
  if (a == 0.0) return limit_rule(LimitSide::both_endpoints);
  return gauss_jacobi(m, a - 1.0, a - 1.0).normalized();
}

Rule1D intertwining_factor(int m, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("intertwining factor needs kappa >= 0");
  if (kappa == 0.0) return limit_rule(LimitSide::right_endpoint);
  // (1+t)(1-t^2)^{kappa-1} = (1-t)^{kappa-1} (1+t)^{kappa}
  return gauss_jacobi(m, kappa - 1.0, kappa).normalized();
}

RuleND sphere_rule(std::span<const double> kappa, int exact_degree) {
  const std::size_t d = kappa.size();
  require_supported_dim(d);
  if (exact_degree < 0) throw std::invalid_argument("exact_degree must be >= 0");
  for (double k : kappa)
    if (k < 0.0) throw std::invalid_argument("sphere_rule needs kappa_i >= 0");

  // xi_i^2 is Dirichlet(kappa_i + 1/2) distributed under h_kappa^2 dsigma.
  std::vector<double> a(d);
  for (std::size_t i = 0; i < d; ++i) a[i] = kappa[i] - 0.5;
  std::vector<std::vector<double>> rho;
  std::vector<double> w;
  dirichlet_rule(a, exact_degree / 2, rho, w);

  RuleND rule;
  rule.dim = static_cast<int>(d);
  rule.domain = Domain::sphere;
  rule.exact_degree = exact_degree;
  const std::size_t signs = std::size_t{1} << d;
  rule.points.reserve(rho.size() * signs * d);
  rule.weights.reserve(rho.size() * signs);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t mask = 0; mask < signs; ++mask) {
      for (std::size_t c = 0; c < d; ++c) {
        const double v = std::sqrt(std::max(rho[i][c], 0.0));
        rule.points.push_back((mask >> c) & 1u ? -v : v);
      }
      rule.weights.push_back(w[i] / static_cast<double>(signs));
    }
  }
  return rule;
}

namespace {

Rule1D radial_rule(const WeightParams& params, int degree_in_rho) {
  // rho = r^2 on [0,1], weight (1-rho)^{mu-1/2} rho^{gamma+nu+d/2-1}
  const double alpha = params.mu - 0.5;
  const double beta = params.gamma_kappa() + params.nu + params.d / 2.0 - 1.0;
  return gauss_jacobi(nodes_for_degree(degree_in_rho), alpha, beta).shifted().normalized();
}

}  // namespace

RuleND ball_rule(const WeightParams& params, int exact_degree) {
  params.validate();
  if (exact_degree < 0) throw std::invalid_argument("exact_degree must be >= 0");
  const Rule1D radial = radial_rule(params, exact_degree / 2);
  const RuleND sphere = sphere_rule(params.kappa, exact_degree);
  RuleND rule;
  rule.dim = params.d;
  rule.domain = Domain::ball;
  rule.exact_degree = exact_degree;
  rule.points.reserve(radial.size() * sphere.points.size());
  rule.weights.reserve(radial.size() * sphere.size());
  for (std::size_t i = 0; i < radial.size(); ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    for (std::size_t j = 0; j < sphere.size(); ++j) {
      for (double xi : sphere.point(j)) rule.points.push_back(r * xi);
      rule.weights.push_back(radial.weights[i] * sphere.weights[j]);
    }
  }
  return rule;
}

RuleND simplex_rule(const WeightParams& params, int exact_degree) {
  params.validate();
  if (exact_degree < 0) throw std::invalid_argument("exact_degree must be >= 0");
  // The pull-back f o psi has degree 2*exact_degree on the ball. Pushing the
  // ball rule forward merges the 2^d sign copies of each sphere node, so the
  // Dirichlet nodes are used directly.
  const Rule1D radial = radial_rule(params, exact_degree);
  std::vector<double> a(params.d);
  for (int i = 0; i < params.d; ++i) a[i] = params.kappa[i] - 0.5;
  std::vector<std::vector<double>> rho;
  std::vector<double> w;
  dirichlet_rule(a, exact_degree, rho, w);

  RuleND rule;
  rule.dim = params.d;
  rule.domain = Domain::simplex;
  rule.exact_degree = exact_degree;
  for (std::size_t i = 0; i < radial.size(); ++i) {
    for (std::size_t j = 0; j < rho.size(); ++j) {
      for (int c = 0; c < params.d; ++c) rule.points.push_back(radial.nodes[i] * rho[j][c]);
      rule.weights.push_back(radial.weights[i] * w[j]);
    }
  }
  return rule;
}

RuleND tensor_rule(std::span<const Rule1D> factors) {
  RuleND rule;
  rule.dim = static_cast<int>(factors.size());
  rule.domain = Domain::cube;
  rule.exact_degree = factors.empty() ? 0 : factors[0].exact_degree;
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    rule.exact_degree = std::min(rule.exact_degree, f.exact_degree);
  }
  rule.points.reserve(total * factors.size());
  rule.weights.reserve(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    double w = 1.0;
    for (std::size_t c = 0; c < factors.size(); ++c) {
      rule.points.push_back(factors[c].nodes[idx[c]]);
      w *= factors[c].weights[idx[c]];
    }
    rule.weights.push_back(w);
    for (std::size_t c = factors.size(); c-- > 0;) {
      if (++idx[c] < factors[c].size()) break;
      idx[c] = 0;
    }
  }
  return rule;
}

double pairwise_dot(std::span<const double> w, std::span<const double> v) {
  const std::size_t n = w.size();
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_dot(w.first(h), v.first(h)) + pairwise_dot(w.subspan(h), v.subspan(h));
}

double integrate(const Rule1D& rule, const ScalarFunction& f) {
  std::vector<double> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    vals[i] = f(rule.nodes[i]);
    if (!std::isfinite(vals[i]))
      throw std::domain_error("integrand is not finite at node t = " + io::format_double(rule.nodes[i]));
  }
  return pairwise_dot(rule.weights, vals);
}

double integrate(const RuleND& rule, const PointFunction& f) {
  std::vector<double> vals(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    vals[i] = f(rule.point(i));
    if (!std::isfinite(vals[i])) {
      std::string where = "(";
      for (double c : rule.point(i)) where += (where.size() > 1 ? "," : "") + io::format_double(c);
      throw std::domain_error("integrand is not finite at node " + where + ")");
    }
  }
  return pairwise_dot(rule.weights, vals);
}

std::string to_csv(const RuleND& rule) {
  std::string out;
  for (int c = 0; c < rule.dim; ++c) out += "x" + std::to_string(c + 1) + ",";
  out += "weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (double c : rule.point(i)) out += io::format_double(c) + ",";
    out += io::format_double(rule.weights[i]) + "\n";
  }
  return out;
}

}  // namespace quadrature
}  // namespace gegenball
