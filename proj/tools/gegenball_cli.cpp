// gegenball command line front end. Talks to the library only through the C API.
//
//   gegenball <basis|kernel|expand|cesaro|poisson|verify> [flags] [--config file.json]
//
// Exit codes: 0 success, 1 invalid input or library error, 2 a verification
// check failed.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gegenball/gegenball.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string domain = "ball";
  int d = 0;
  std::vector<double> kappa;
  double mu = 0.5;
  double nu = 0.0;
  std::vector<int> n;
  std::vector<double> delta;
  int res = 0;
  std::string method;
  std::string out;
  std::string format = "csv";
  std::vector<double> x, y, r;
  std::string function = "exp_x1";
  std::string checks;
  bool corrupt_norm = false;
  std::uint64_t seed = 20240611;
};

template <class T>
std::vector<T> as_list(const json& v, const char* key) {
  if (v.is_array()) return v.get<std::vector<T>>();
  if (v.is_number()) return {v.get<T>()};
  throw UsageError(std::string("config: '") + key + "' must be a number or an array of numbers");
}

// Fills every option the command line left unset from the JSON config.
void apply_config(const std::string& path, const CLI::App& app, Options& o) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config: top level must be an object");
  static const std::set<std::string> known{"domain", "d",   "kappa",  "mu", "nu",       "n",      "delta",
                                           "res",    "method", "out", "format", "x",  "y",        "r",      "function",
                                           "checks", "corrupt_norm", "seed"};
  auto unset = [&](const char* flag) { return app.count(std::string("--") + flag) == 0; };
  try {
    for (const auto& [key, value] : cfg.items()) {
      if (!known.count(key)) throw UsageError("config: unknown key '" + key + "'");
      if (key == "corrupt_norm") {
        if (unset("corrupt-norm")) o.corrupt_norm = value.get<bool>();
        continue;
      }
      if (!unset(key.c_str())) continue;
      if (key == "domain") o.domain = value.get<std::string>();
      else if (key == "d") o.d = value.get<int>();
      else if (key == "kappa") o.kappa = as_list<double>(value, "kappa");
      else if (key == "mu") o.mu = value.get<double>();
      else if (key == "nu") o.nu = value.get<double>();
      else if (key == "n") o.n = as_list<int>(value, "n");
      else if (key == "delta") o.delta = as_list<double>(value, "delta");
      else if (key == "res") o.res = value.get<int>();
      else if (key == "method") o.method = value.get<std::string>();
      else if (key == "out") o.out = value.get<std::string>();
      else if (key == "format") o.format = value.get<std::string>();
      else if (key == "x") o.x = as_list<double>(value, "x");
      else if (key == "y") o.y = as_list<double>(value, "y");
      else if (key == "r") o.r = as_list<double>(value, "r");
      else if (key == "function") o.function = value.get<std::string>();
      else if (key == "checks") o.checks = value.get<std::string>();
      else if (key == "seed") o.seed = value.get<std::uint64_t>();
    }
  } catch (const json::type_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
}

class Context {
 public:
  Context(gb_domain dom, int d, const std::vector<double>& kappa, double mu, double nu) {
    if (gb_context_create(dom, d, kappa.data(), mu, nu, &ctx_) != GB_OK) throw UsageError(gb_last_error());
  }
  ~Context() { gb_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  const gb_context* get() const { return ctx_; }

 private:
  gb_context* ctx_ = nullptr;
};

// s is read only after the call has filled it.
std::string take(gb_status st, char** s) {
  if (st != GB_OK) throw UsageError(gb_last_error());
  std::string out(*s);
  gb_free_string(*s);
  return out;
}

int single_n(const Options& o, int fallback) {
  if (o.n.empty()) return fallback;
  if (o.n.size() != 1) throw UsageError("n: this command takes a single degree");
  return o.n[0];
}

std::vector<double> default_point(gb_domain dom, int d, bool second) {
  // Both points lie inside the simplex as well as the ball for d <= 8.
  std::vector<double> p(d);
  for (int i = 0; i < d; ++i) p[i] = second ? 0.05 + 0.01 * i : (dom == GB_BALL && i % 2 ? -0.1 : 0.1);
  return p;
}

int run(const CLI::App& app, Options& o, const std::string& config_path) {
  if (!config_path.empty()) apply_config(config_path, app, o);

  gb_format fmt;
  if (o.format == "csv") fmt = GB_FORMAT_CSV;
  else if (o.format == "json") fmt = GB_FORMAT_JSON;
  else throw UsageError("format: expected csv or json, got '" + o.format + "'");

  gb_domain dom;
  if (o.domain == "ball") dom = GB_BALL;
  else if (o.domain == "simplex") dom = GB_SIMPLEX;
  else throw UsageError("domain: expected ball or simplex, got '" + o.domain + "'");

  const bool params_given = !o.kappa.empty() || app.count("--mu") || app.count("--nu");
  int d = o.d;
  if (d == 0) d = o.kappa.empty() ? 2 : static_cast<int>(o.kappa.size());
  if (o.kappa.empty()) o.kappa.assign(d > 0 ? d : 0, 0.0);
  if (static_cast<int>(o.kappa.size()) != d)
    throw UsageError("kappa: expected " + std::to_string(d) + " values, got " + std::to_string(o.kappa.size()));
  if (o.res < 0) throw UsageError("res: must be >= 0");

  std::string text;
  int code = kExitOk;
  if (o.command == "verify") {
    gb_verify_options vo;
    gb_verify_options_init(&vo);
    vo.seed = o.seed;
    vo.corrupt_norm = o.corrupt_norm ? 1 : 0;
    vo.checks = o.checks.c_str();
    std::optional<Context> single;
    std::vector<int> dims;
    if (params_given) {
      single.emplace(dom, d, o.kappa, o.mu, o.nu);
      vo.config = single->get();
    } else if (o.d != 0 || app.count("--d")) {
      dims = {d};
      vo.dims = dims.data();
      vo.dim_count = dims.size();
    }
    int all_passed = 0;
    char* s = nullptr;
    text = take(gb_report_verify(&vo, fmt, &s, &all_passed), &s);
    if (!all_passed) code = kExitVerifyFailed;
  } else {
    const Context ctx(dom, d, o.kappa, o.mu, o.nu);
    char* s = nullptr;
    if (o.command == "basis") {
      text = take(gb_report_basis(ctx.get(), single_n(o, 3), fmt, &s), &s);
    } else if (o.command == "kernel") {
      if (o.x.empty()) o.x = default_point(dom, d, false);
      if (o.y.empty()) o.y = default_point(dom, d, true);
      if (static_cast<int>(o.x.size()) != d || static_cast<int>(o.y.size()) != d)
        throw UsageError("x, y: expected " + std::to_string(d) + " coordinates each");
      const std::string method = o.method.empty() ? "both" : o.method;
      const gb_status st =
          gb_report_kernel(ctx.get(), single_n(o, 3), o.x.data(), o.y.data(), method.c_str(), o.res, fmt, &s);
      text = take(st, &s);
    } else if (o.command == "expand") {
      text = take(gb_report_expand(ctx.get(), o.function.c_str(), single_n(o, 4), o.res, fmt, &s), &s);
    } else if (o.command == "cesaro") {
      if (o.n.empty()) o.n = {4, 8, 12};
      if (o.delta.empty()) o.delta = {0.0, 1.0, 2.0};
      const gb_status st =
          gb_report_cesaro(ctx.get(), o.n.data(), o.n.size(), o.delta.data(), o.delta.size(), o.res, fmt, &s);
      text = take(st, &s);
    } else if (o.command == "poisson") {
      if (o.r.empty()) o.r = {0.5, 0.9, 0.99};
      text = take(gb_report_poisson(ctx.get(), o.r.data(), o.r.size(), o.function.c_str(), o.res, fmt, &s), &s);
    }
  }

  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("out: cannot write '" + o.out + "'");
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials, reproducing kernels and summability on the weighted ball and simplex"};
  Options o;
  std::string config_path;
  app.add_option("command", o.command, "basis, kernel, expand, cesaro, poisson or verify")
      ->required()
      ->check(CLI::IsMember({"basis", "kernel", "expand", "cesaro", "poisson", "verify"}));
  app.add_option("--domain", o.domain, "ball or simplex");
  app.add_option("--d", o.d, "dimension");
  app.add_option("--kappa", o.kappa, "reflection multiplicities, comma separated")->delimiter(',');
  app.add_option("--mu", o.mu, "boundary exponent parameter");
  app.add_option("--nu", o.nu, "origin exponent parameter");
  app.add_option("--n", o.n, "degree (comma-separated list for cesaro)")->delimiter(',');
  app.add_option("--delta", o.delta, "Cesaro orders, comma separated")->delimiter(',');
  app.add_option("--res", o.res, "quadrature resolution (0: automatic)");
  app.add_option("--method", o.method, "kernel method: direct, concise, folded, oracle, both, all");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--config", config_path, "JSON file with defaults; command line flags win");
  app.add_option("--x", o.x, "first kernel point")->delimiter(',');
  app.add_option("--y", o.y, "second kernel point")->delimiter(',');
  app.add_option("--r", o.r, "Poisson radii, comma separated")->delimiter(',');
  app.add_option("--function", o.function, "exp_x1, exp_sum, x1, one, norm2 or cos_pi_x1");
  app.add_option("--checks", o.checks, "verify: comma-separated check names (default all)");
  app.add_flag("--corrupt-norm", o.corrupt_norm, "verify: perturb the closed-form norm");
  app.add_option("--seed", o.seed, "verify: sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  try {
    return run(app, o, config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
