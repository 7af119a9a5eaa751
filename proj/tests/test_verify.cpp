#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gegenball/verify.hpp"

using namespace gegenball;

// Every check on a reduced set of configurations covering each limit path.
TEST_SUITE("verify") {

TEST_CASE("all checks on limit-path configurations") {
  VerifyOptions opts;
  opts.configs = {WeightParams::make({0.0, 0.0}, 0.0, 0.0), WeightParams::make({0.3, 0.7}, 1.0, 1.5),
                  WeightParams::make({0.5, 0.0, 0.0}, 0.5, 0.5)};
  for (const auto& name : verify::check_names()) {
    if (name == "cesaro_summability" || name == "poisson") continue;  // covered by the acceptance binary
    const CheckResult r = verify::run_check(name, opts);
    INFO(name << ": residual " << r.residual << " tol " << r.tolerance << " " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("check names") {
  const auto& names = verify::check_names();
  CHECK(names.size() == 10);
  CHECK(std::find(names.begin(), names.end(), "orthogonality") != names.end());
  CHECK_THROWS_AS(verify::run_check("nope", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("configs") {
  VerifyOptions opts;
  CHECK(verify::configs_for(opts, 2).size() == 27);
  opts.configs = {WeightParams::make({0.0, 0.0}, 0.5, 0.0), WeightParams::make({0.0, 0.0, 0.0}, 0.5, 0.0)};
  CHECK(verify::configs_for(opts, 3).size() == 1);
}

}
