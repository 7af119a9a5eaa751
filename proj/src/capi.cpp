#include "gegenball/gegenball.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "gegenball/ball.hpp"
#include "gegenball/errors.hpp"
#include "gegenball/reports.hpp"
#include "gegenball/simplex.hpp"
#include "gegenball/verify.hpp"

struct gb_context {
  gegenball::RunConfig cfg;
};

namespace {

using namespace gegenball;

thread_local std::string last_error;

template <class F>
gb_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return GB_OK;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return GB_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return GB_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return GB_DOMAIN_ERROR;
  } catch (const NumericalError& e) {
    last_error = e.what();
    return GB_NUMERICAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GB_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return GB_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw std::invalid_argument(std::string(name) + ": null pointer");
}

std::span<const double> point(const gb_context* ctx, const double* x, const char* name) {
  need(x, name);
  return {x, static_cast<std::size_t>(ctx->cfg.params.d)};
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Format fmt_of(gb_format f) {
  if (f == GB_FORMAT_CSV) return Format::csv;
  if (f == GB_FORMAT_JSON) return Format::json;
  throw std::invalid_argument("format: unknown value");
}

bool is_ball(const gb_context* ctx) { return ctx->cfg.domain == Domain::ball; }

std::vector<std::string> split(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* gb_version(void) { return "1.0.0"; }

const char* gb_last_error(void) { return last_error.c_str(); }

void gb_free_string(char* s) { std::free(s); }

gb_status gb_context_create(gb_domain domain, int d, const double* kappa, double mu, double nu, gb_context** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    if (d < 2 || d > 8) throw std::invalid_argument("d: must be between 2 and 8");
    need(kappa, "kappa");
    if (domain != GB_BALL && domain != GB_SIMPLEX) throw std::invalid_argument("domain: unknown value");
    auto ctx = std::make_unique<gb_context>();
    ctx->cfg.domain = domain == GB_BALL ? Domain::ball : Domain::simplex;
    ctx->cfg.params = WeightParams::make(std::vector<double>(kappa, kappa + d), mu, nu);
    *out = ctx.release();
  });
}

void gb_context_destroy(gb_context* ctx) { delete ctx; }

gb_status gb_weight(const gb_context* ctx, const double* x, double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    const auto xs = point(ctx, x, "x");
    *out = is_ball(ctx) ? ball::weight_eval(ctx->cfg.params, xs) : simplex::weight_eval(ctx->cfg.params, xs);
  });
}

gb_status gb_basis_norm(const gb_context* ctx, int n, int j, double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (n < 0 || j < 0) throw std::invalid_argument("n, j: must be >= 0");
    if (is_ball(ctx)) {
      if (2 * j > n) throw std::invalid_argument("j: must satisfy 2j <= n on the ball");
      *out = ball::basis_norm(ctx->cfg.params, n, j);
    } else {
      if (j > n) throw std::invalid_argument("j: must satisfy j <= n on the simplex");
      *out = ball::basis_norm(ctx->cfg.params, 2 * n, j);
    }
  });
}

gb_status gb_basis_dimension(const gb_context* ctx, int n, size_t* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (n < 0) throw std::invalid_argument("n: must be >= 0");
    // dim of degree-n polynomials orthogonal to lower degree: C(n+d-1, d-1)
    const int d = ctx->cfg.params.d;
    std::size_t c = 1;
    for (int k = 1; k <= d - 1; ++k) c = c * static_cast<std::size_t>(n + k) / static_cast<std::size_t>(k);
    *out = c;
  });
}

gb_status gb_kernel(const gb_context* ctx, int n, const double* x, const double* y, int resolution, double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (n < 0) throw std::invalid_argument("n: must be >= 0");
    const auto xs = point(ctx, x, "x");
    const auto ys = point(ctx, y, "y");
    *out = is_ball(ctx) ? ball::kernel_concise(ctx->cfg.params, n, xs, ys, resolution)
                        : simplex::kernel_concise(ctx->cfg.params, n, xs, ys, resolution);
  });
}

gb_status gb_kernel_direct(const gb_context* ctx, int n, const double* x, const double* y, double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (n < 0 || n > 40) throw std::invalid_argument("n: must be in [0, 40]");
    const auto xs = point(ctx, x, "x");
    const auto ys = point(ctx, y, "y");
    *out = is_ball(ctx) ? ball::kernel_direct(BallBasis(ctx->cfg.params, n), n, xs, ys)
                        : simplex::kernel_direct(SimplexBasis(ctx->cfg.params, n), n, xs, ys);
  });
}

gb_status gb_cesaro_kernel(const gb_context* ctx, int n, double delta, const double* x, const double* y,
                           double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (n < 0) throw std::invalid_argument("n: must be >= 0");
    const auto xs = point(ctx, x, "x");
    const auto ys = point(ctx, y, "y");
    const ConciseIntegrator L(ctx->cfg.params, ctx->cfg.domain, ConciseIntegrator::min_nodes(ctx->cfg.domain, n));
    *out = is_ball(ctx) ? ball::cesaro_kernel(L, n, delta, xs, ys) : simplex::cesaro_kernel(L, n, delta, xs, ys);
  });
}

gb_status gb_poisson_kernel(const gb_context* ctx, double r, const double* x, const double* y, double* out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    if (!is_ball(ctx)) throw std::invalid_argument("domain: the Poisson kernel is available on the ball only");
    const auto xs = point(ctx, x, "x");
    const auto ys = point(ctx, y, "y");
    const ConciseIntegrator L(ctx->cfg.params, Domain::ball, 10, 32);
    *out = ball::poisson_kernel(L, r, xs, ys);
  });
}

gb_status gb_report_basis(const gb_context* ctx, int max_degree, gb_format fmt, char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    *out = copy_out(reports::basis(ctx->cfg, max_degree, fmt_of(fmt)));
  });
}

gb_status gb_report_kernel(const gb_context* ctx, int n, const double* x, const double* y, const char* method,
                           int resolution, gb_format fmt, char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    need(method, "method");
    *out = copy_out(
        reports::kernel(ctx->cfg, n, point(ctx, x, "x"), point(ctx, y, "y"), method, resolution, fmt_of(fmt)));
  });
}

gb_status gb_report_expand(const gb_context* ctx, const char* function, int max_degree, int resolution, gb_format fmt,
                           char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    need(function, "function");
    *out = copy_out(reports::expand(ctx->cfg, function, max_degree, resolution, fmt_of(fmt)));
  });
}

gb_status gb_report_cesaro(const gb_context* ctx, const int* ns, size_t n_count, const double* deltas,
                           size_t delta_count, int resolution, gb_format fmt, char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    need(ns, "ns");
    need(deltas, "deltas");
    *out = copy_out(reports::cesaro(ctx->cfg, {ns, n_count}, {deltas, delta_count}, resolution, fmt_of(fmt)));
  });
}

gb_status gb_report_poisson(const gb_context* ctx, const double* rs, size_t r_count, const char* function,
                            int resolution, gb_format fmt, char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    need(rs, "rs");
    need(function, "function");
    *out = copy_out(reports::poisson(ctx->cfg, {rs, r_count}, function, resolution, fmt_of(fmt)));
  });
}

gb_status gb_report_rule(const gb_context* ctx, int exact_degree, char** out) {
  return guard([&] {
    need(ctx, "ctx");
    need(out, "out");
    *out = copy_out(reports::rule(ctx->cfg, exact_degree));
  });
}

void gb_verify_options_init(gb_verify_options* opts) {
  if (!opts) return;
  *opts = gb_verify_options{};
  opts->seed = VerifyOptions{}.seed;
}

const char* gb_check_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : verify::check_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return names.c_str();
}

gb_status gb_report_verify(const gb_verify_options* opts, gb_format fmt, char** out, int* all_passed) {
  return guard([&] {
    need(opts, "opts");
    need(out, "out");
    VerifyOptions vo;
    vo.seed = opts->seed;
    if (opts->config) {
      vo.configs = {opts->config->cfg.params};
      vo.dims = {opts->config->cfg.params.d};
    } else if (opts->dims) {
      vo.dims.assign(opts->dims, opts->dims + opts->dim_count);
      for (int d : vo.dims)
        if (d != 2 && d != 3) throw std::invalid_argument("dims: the acceptance grid covers d = 2 and d = 3");
    }
    if (opts->corrupt_norm) vo.norm_formula = verify::corrupted_norm_formula();
    vo.only = split(opts->checks);
    const auto results = verify::run_all(vo);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out = copy_out(reports::verify(results, fmt_of(fmt)));
  });
}

}  // extern "C"
