#pragma once

// Text reports behind the CLI commands. Every report is deterministic for a
// fixed configuration; CSV output always starts with a header row.

#include <span>
#include <string>
#include <vector>

#include "gegenball/params.hpp"
#include "gegenball/quadrature.hpp"
#include "gegenball/verify.hpp"

namespace gegenball {

enum class Format { csv, json };

struct RunConfig {
  Domain domain = Domain::ball;
  WeightParams params;
};

namespace reports {

Format parse_format(const std::string& s);
Domain parse_domain(const std::string& s);

/// Named test functions for expand and poisson: exp_x1, exp_sum, x1, one,
/// norm2, cos_pi_x1.
PointFunction named_function(const std::string& name);

/// Basis elements up to max_degree with closed-form and quadrature norms and
/// the worst normalized Gram off-diagonal entry of each row.
std::string basis(const RunConfig& cfg, int max_degree, Format fmt);

/// method: direct, concise, folded (simplex), oracle, both (direct and
/// concise) or all.
std::string kernel(const RunConfig& cfg, int n, std::span<const double> x, std::span<const double> y,
                   const std::string& method, int resolution, Format fmt);

/// Fourier coefficients <f, P> of a named function; resolution is the rule
/// degree (0: automatic).
std::string expand(const RunConfig& cfg, const std::string& function, int max_degree, int resolution, Format fmt);

/// Lebesgue-constant estimates and kernel minima for every (n, delta).
/// resolution is the degree of the y rule (0: automatic).
std::string cesaro(const RunConfig& cfg, std::span<const int> ns, std::span<const double> deltas, int resolution,
                   Format fmt);

/// sup |P_r f - f| on a fixed 40-point grid, P_r f = sum r^n proj_n f (ball).
std::string poisson(const RunConfig& cfg, std::span<const double> rs, const std::string& function, int resolution,
                    Format fmt);

std::string verify(const std::vector<CheckResult>& results, Format fmt);

/// Quadrature rule as CSV (x1..xd,weight).
std::string rule(const RunConfig& cfg, int exact_degree);

/// Degree-n h-harmonics as JSON (alpha, scale, coefficient form).
std::string harmonics(std::span<const double> kappa, int n);

}  // namespace reports
}  // namespace gegenball
