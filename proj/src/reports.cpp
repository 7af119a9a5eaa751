#include "gegenball/reports.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "gegenball/ball.hpp"
#include "gegenball/harmonics.hpp"
#include "gegenball/io.hpp"
#include "gegenball/oracle.hpp"
#include "gegenball/simplex.hpp"

namespace gegenball::reports {

namespace {

using io::format_double;
using json = nlohmann::json;

json params_json(const WeightParams& p) {
  return {{"d", p.d}, {"kappa", p.kappa}, {"mu", p.mu}, {"nu", p.nu}, {"lambda", p.lambda_total()}};
}

std::string alpha_string(const std::vector<int>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + std::to_string(a[i]);
  return s;
}

void require_point(const RunConfig& cfg, std::span<const double> x, const char* name) {
  if (static_cast<int>(x.size()) != cfg.params.d)
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(cfg.params.d) + " coordinates");
}

RuleND domain_rule(const RunConfig& cfg, int degree) {
  return cfg.domain == Domain::ball ? quadrature::ball_rule(cfg.params, degree)
                                    : quadrature::simplex_rule(cfg.params, degree);
}

void check_domain(const RunConfig& cfg) {
  if (cfg.domain != Domain::ball && cfg.domain != Domain::simplex)
    throw std::invalid_argument("domain: must be ball or simplex");
  cfg.params.validate();
}

// Per-element data shared by the basis and expand reports.
struct ElementRow {
  int n, j, l;
  std::vector<int> alpha;
  double norm;
  Poly poly;
};

template <class Basis>
std::vector<ElementRow> element_rows(const Basis& b, bool with_polys) {
  std::vector<ElementRow> rows;
  for (int n = 0; n <= b.max_degree(); ++n)
    for (const auto& i : b.indices(n)) {
      ElementRow r{n, i.j, i.l, {}, b.norm(n, i.j), Poly(b.params().d)};
      if constexpr (std::is_same_v<Basis, BallBasis>) {
        r.alpha = b.harmonic(n - 2 * i.j).alpha[i.l];
        if (with_polys) r.poly = b.element(i).poly;
      } else {
        r.alpha = b.ball().harmonic(2 * (n - i.j)).alpha[i.l];
        if (with_polys) r.poly = b.element(i);
      }
      rows.push_back(std::move(r));
    }
  return rows;
}

template <class Basis>
Eigen::MatrixXd values(const Basis& b, const RuleND& rule) {
  Eigen::MatrixXd V(static_cast<Eigen::Index>(rule.size()), static_cast<Eigen::Index>(b.total_size()));
  for (std::size_t p = 0; p < rule.size(); ++p) {
    const auto v = b.eval_all(rule.point(p));
    for (std::size_t k = 0; k < v.size(); ++k) V(p, k) = v[k];
  }
  return V;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("format: expected csv or json, got '" + s + "'");
}

Domain parse_domain(const std::string& s) {
  if (s == "ball") return Domain::ball;
  if (s == "simplex") return Domain::simplex;
  throw std::invalid_argument("domain: expected ball or simplex, got '" + s + "'");
}

PointFunction named_function(const std::string& name) {
  static const std::map<std::string, PointFunction> table{
      {"exp_x1", [](std::span<const double> x) { return std::exp(x[0]); }},
      {"exp_sum",
       [](std::span<const double> x) {
         double s = 0.0;
         for (double c : x) s += c;
         return std::exp(s);
       }},
      {"x1", [](std::span<const double> x) { return x[0]; }},
      {"one", [](std::span<const double>) { return 1.0; }},
      {"norm2",
       [](std::span<const double> x) {
         double s = 0.0;
         for (double c : x) s += c * c;
         return s;
       }},
      {"cos_pi_x1", [](std::span<const double> x) { return std::cos(std::numbers::pi * x[0]); }}};
  const auto it = table.find(name);
  if (it == table.end())
    throw std::invalid_argument("function: unknown '" + name + "' (exp_x1, exp_sum, x1, one, norm2, cos_pi_x1)");
  return it->second;
}

std::string basis(const RunConfig& cfg, int max_degree, Format fmt) {
  check_domain(cfg);
  if (max_degree < 0 || max_degree > 30) throw std::invalid_argument("n: basis reports need 0 <= n <= 30");
  const bool polys = fmt == Format::json && max_degree <= 8;
  std::vector<ElementRow> rows;
  Eigen::MatrixXd V;
  const RuleND rule = domain_rule(cfg, 2 * max_degree);
  if (cfg.domain == Domain::ball) {
    const BallBasis b(cfg.params, max_degree, polys);
    rows = element_rows(b, polys);
    V = values(b, rule);
  } else {
    const SimplexBasis b(cfg.params, max_degree, polys);
    rows = element_rows(b, polys);
    V = values(b, rule);
  }
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), static_cast<Eigen::Index>(rule.size()));
  const Eigen::MatrixXd G = V.transpose() * w.asDiagonal() * V;
  std::vector<double> row_off(rows.size(), 0.0);
  double off_max = 0.0;
  for (Eigen::Index a = 0; a < G.rows(); ++a)
    for (Eigen::Index b = 0; b < G.cols(); ++b)
      if (a != b) {
        const double v = std::abs(G(a, b)) / std::sqrt(G(a, a) * G(b, b));
        row_off[a] = std::max(row_off[a], v);
        off_max = std::max(off_max, v);
      }

  const std::string dom = to_string(cfg.domain);
  if (fmt == Format::csv) {
    io::CsvWriter csv({"domain", "n", "j", "l", "alpha", "norm", "quadrature_norm", "max_offdiag"});
    for (std::size_t k = 0; k < rows.size(); ++k)
      csv.row({dom, std::to_string(rows[k].n), std::to_string(rows[k].j), std::to_string(rows[k].l),
               alpha_string(rows[k].alpha), format_double(rows[k].norm),
               format_double(G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))), format_double(row_off[k])});
    return csv.str();
  }
  json j{{"domain", dom}, {"params", params_json(cfg.params)}, {"max_degree", max_degree}, {"gram_offdiag_max", off_max}};
  j["elements"] = json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    json e{{"n", rows[k].n},
           {"j", rows[k].j},
           {"l", rows[k].l},
           {"alpha", rows[k].alpha},
           {"norm", rows[k].norm},
           {"quadrature_norm", G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k))},
           {"max_offdiag", row_off[k]}};
    if (polys) e["poly"] = json::parse(to_json(rows[k].poly));
    j["elements"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string kernel(const RunConfig& cfg, int n, std::span<const double> x, std::span<const double> y,
                   const std::string& method, int resolution, Format fmt) {
  check_domain(cfg);
  require_point(cfg, x, "x");
  require_point(cfg, y, "y");
  if (n < 0 || n > 40) throw std::invalid_argument("n: kernel reports need 0 <= n <= 40");
  const bool ball_dom = cfg.domain == Domain::ball;
  std::vector<std::string> methods;
  if (method == "both")
    methods = ball_dom ? std::vector<std::string>{"direct", "concise"} : std::vector<std::string>{"folded", "concise"};
  else if (method == "all")
    methods = ball_dom ? std::vector<std::string>{"direct", "concise", "oracle"}
                       : std::vector<std::string>{"direct", "folded", "concise", "oracle"};
  else
    methods = {method};

  std::vector<double> vals;
  for (const auto& m : methods) {
    if (m == "direct") {
      vals.push_back(ball_dom ? ball::kernel_direct(BallBasis(cfg.params, n), n, x, y)
                              : simplex::kernel_direct(SimplexBasis(cfg.params, n), n, x, y));
    } else if (m == "concise") {
      vals.push_back(ball_dom ? ball::kernel_concise(cfg.params, n, x, y, resolution)
                              : simplex::kernel_concise(cfg.params, n, x, y, resolution));
    } else if (m == "folded") {
      if (ball_dom) throw std::invalid_argument("method: folded applies to the simplex only");
      vals.push_back(simplex::kernel_folded(BallBasis(cfg.params, 2 * n), n, x, y));
    } else if (m == "oracle") {
      if (n > 8) throw std::invalid_argument("n: the Gram-Schmidt oracle is limited to n <= 8");
      vals.push_back(oracle::kernel_oracle(oracle::gs_basis(cfg.params, cfg.domain, n), x, y));
    } else {
      throw std::invalid_argument("method: expected direct, concise, folded, oracle, both or all, got '" + m + "'");
    }
  }
  double disc = 0.0;
  for (double v : vals) disc = std::max(disc, std::abs(v - vals[0]));
  const std::string dom = to_string(cfg.domain);
  if (fmt == Format::csv) {
    io::CsvWriter csv({"domain", "n", "method", "value", "discrepancy"});
    for (std::size_t k = 0; k < vals.size(); ++k)
      csv.row({dom, std::to_string(n), methods[k], format_double(vals[k]), format_double(std::abs(vals[k] - vals[0]))});
    return csv.str();
  }
  json j{{"domain", dom},
         {"params", params_json(cfg.params)},
         {"n", n},
         {"x", std::vector<double>(x.begin(), x.end())},
         {"y", std::vector<double>(y.begin(), y.end())},
         {"discrepancy", disc}};
  j["values"] = json::object();
  for (std::size_t k = 0; k < vals.size(); ++k) j["values"][methods[k]] = vals[k];
  return j.dump(2) + "\n";
}

std::string expand(const RunConfig& cfg, const std::string& function, int max_degree, int resolution, Format fmt) {
  check_domain(cfg);
  if (max_degree < 0 || max_degree > 30) throw std::invalid_argument("n: expansions need 0 <= n <= 30");
  if (resolution < 0) throw std::invalid_argument("res: must be >= 0");
  const PointFunction f = named_function(function);
  const RuleND rule = domain_rule(cfg, resolution ? resolution : 2 * max_degree + 20);
  std::vector<ElementRow> rows;
  Eigen::MatrixXd V;
  if (cfg.domain == Domain::ball) {
    const BallBasis b(cfg.params, max_degree);
    rows = element_rows(b, false);
    V = values(b, rule);
  } else {
    const SimplexBasis b(cfg.params, max_degree);
    rows = element_rows(b, false);
    V = values(b, rule);
  }
  Eigen::VectorXd wf(static_cast<Eigen::Index>(rule.size()));
  for (std::size_t p = 0; p < rule.size(); ++p) wf(p) = rule.weights[p] * f(rule.point(p));
  const Eigen::VectorXd coef = V.transpose() * wf;

  const std::string dom = to_string(cfg.domain);
  if (fmt == Format::csv) {
    io::CsvWriter csv({"domain", "n", "j", "l", "coefficient", "norm"});
    for (std::size_t k = 0; k < rows.size(); ++k)
      csv.row({dom, std::to_string(rows[k].n), std::to_string(rows[k].j), std::to_string(rows[k].l),
               format_double(coef(static_cast<Eigen::Index>(k))), format_double(rows[k].norm)});
    return csv.str();
  }
  json j{{"domain", dom},
         {"params", params_json(cfg.params)},
         {"function", function},
         {"max_degree", max_degree},
         {"rule_degree", rule.exact_degree}};
  j["coefficients"] = json::array();
  for (std::size_t k = 0; k < rows.size(); ++k)
    j["coefficients"].push_back({{"n", rows[k].n},
                                 {"j", rows[k].j},
                                 {"l", rows[k].l},
                                 {"value", coef(static_cast<Eigen::Index>(k))},
                                 {"norm", rows[k].norm}});
  return j.dump(2) + "\n";
}

std::string cesaro(const RunConfig& cfg, std::span<const int> ns, std::span<const double> deltas, int resolution,
                   Format fmt) {
  check_domain(cfg);
  if (ns.empty() || deltas.empty()) throw std::invalid_argument("n/delta: the sweep needs at least one value each");
  int top = 0;
  for (int n : ns) {
    if (n < 0 || n > 24) throw std::invalid_argument("n: Cesaro sweeps need 0 <= n <= 24");
    top = std::max(top, n);
  }
  for (double dl : deltas)
    if (!(dl >= 0.0) || !std::isfinite(dl)) throw std::invalid_argument("delta: must be finite and >= 0");
  if (resolution < 0) throw std::invalid_argument("res: must be >= 0");
  const int d = cfg.params.d;
  const bool ball_dom = cfg.domain == Domain::ball;
  const int rule_degree = resolution ? resolution : (ball_dom ? (d == 2 ? 40 : 26) : (d == 2 ? 24 : 20));
  const RuleND rule = domain_rule(cfg, rule_degree);
  const std::vector<double> grid = ball_dom ? ball::polar_grid(d) : simplex::grid(d);
  const std::size_t G = grid.size() / d;

  std::vector<double> vx, vy, norms;
  std::vector<int> deg;
  auto fill = [&](const auto& b) {
    for (std::size_t k = 0; k < G; ++k) {
      const auto v = b.eval_all(std::span<const double>(grid.data() + k * d, d));
      vx.insert(vx.end(), v.begin(), v.end());
    }
    for (std::size_t k = 0; k < rule.size(); ++k) {
      const auto v = b.eval_all(rule.point(k));
      vy.insert(vy.end(), v.begin(), v.end());
    }
    for (int n = 0; n <= b.max_degree(); ++n)
      for (const auto& i : b.indices(n)) {
        norms.push_back(b.norm(n, i.j));
        deg.push_back(n);
      }
  };
  if (ball_dom)
    fill(BallBasis(cfg.params, top));
  else
    fill(SimplexBasis(cfg.params, top));

  std::vector<std::pair<int, double>> req;
  for (int n : ns)
    for (double dl : deltas) req.push_back({n, dl});
  const auto est = ball::lebesgue_sweep(vx, G, vy, rule.weights, norms, deg, req);

  const std::string dom = to_string(cfg.domain);
  if (fmt == Format::csv) {
    io::CsvWriter csv({"domain", "n", "delta", "lebesgue_est", "min_kernel"});
    for (const auto& e : est)
      csv.row({dom, std::to_string(e.n), format_double(e.delta), format_double(e.lebesgue),
               format_double(e.min_kernel)});
    return csv.str();
  }
  json j{{"domain", dom}, {"params", params_json(cfg.params)}, {"rule_degree", rule_degree}};
  j["rows"] = json::array();
  for (const auto& e : est)
    j["rows"].push_back({{"n", e.n}, {"delta", e.delta}, {"lebesgue_est", e.lebesgue}, {"min_kernel", e.min_kernel}});
  return j.dump(2) + "\n";
}

std::string poisson(const RunConfig& cfg, std::span<const double> rs, const std::string& function, int resolution,
                    Format fmt) {
  check_domain(cfg);
  if (cfg.domain != Domain::ball) throw std::invalid_argument("domain: the Poisson report is defined on the ball");
  if (rs.empty()) throw std::invalid_argument("r: at least one radius is required");
  for (double r : rs)
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r: every radius must lie in (0,1)");
  if (resolution < 0) throw std::invalid_argument("res: must be >= 0");
  const int d = cfg.params.d;
  constexpr int M = 20;
  const PointFunction f = named_function(function);
  const BallBasis b(cfg.params, M);
  const auto c = ball::project(b, f, quadrature::ball_rule(cfg.params, resolution ? resolution : 44));
  const auto grid = ball::sup_grid(d);
  std::vector<double> err(rs.size(), 0.0);
  for (std::size_t q = 0; q < grid.size() / d; ++q) {
    const std::span<const double> x(grid.data() + q * d, d);
    const double fx = f(x);
    for (std::size_t k = 0; k < rs.size(); ++k) {
      std::vector<double> m(M + 1);
      double rn = 1.0;
      for (int n = 0; n <= M; ++n, rn *= rs[k]) m[n] = rn;
      err[k] = std::max(err[k], std::abs(ball::convolve_spectral(b, c, m, x) - fx));
    }
  }
  const std::string dom = to_string(cfg.domain);
  if (fmt == Format::csv) {
    io::CsvWriter csv({"domain", "r", "sup_error"});
    for (std::size_t k = 0; k < rs.size(); ++k) csv.row({dom, format_double(rs[k]), format_double(err[k])});
    return csv.str();
  }
  json j{{"domain", dom}, {"params", params_json(cfg.params)}, {"function", function}, {"terms", M}};
  j["rows"] = json::array();
  for (std::size_t k = 0; k < rs.size(); ++k) j["rows"].push_back({{"r", rs[k]}, {"sup_error", err[k]}});
  return j.dump(2) + "\n";
}

std::string verify(const std::vector<CheckResult>& results, Format fmt) {
  if (fmt == Format::json) return verify::to_json(results) + "\n";
  io::CsvWriter csv({"name", "passed", "residual", "tolerance", "seconds"});
  for (const auto& r : results)
    csv.row({r.name, r.passed ? "true" : "false", format_double(r.residual), format_double(r.tolerance),
             format_double(r.seconds)});
  return csv.str();
}

std::string rule(const RunConfig& cfg, int exact_degree) {
  check_domain(cfg);
  return quadrature::to_csv(domain_rule(cfg, exact_degree));
}

std::string harmonics(std::span<const double> kappa, int n) {
  const HarmonicBasis h = harmonics::h_harmonic_basis(n, kappa, true);
  json j{{"degree", n}, {"kappa", h.kappa}};
  j["elements"] = json::array();
  for (std::size_t l = 0; l < h.size(); ++l)
    j["elements"].push_back({{"alpha", h.alpha[l]}, {"scale", h.scale[l]}, {"poly", json::parse(to_json(h.elements[l]))}});
  return j.dump(2) + "\n";
}

}  // namespace gegenball::reports
