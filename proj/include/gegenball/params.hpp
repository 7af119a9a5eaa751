#pragma once

#include <span>
#include <string>
#include <vector>

namespace gegenball {

/// Parameters of W_{kappa,mu,nu}(x) = h_kappa^2(x) |x|^{2nu} (1-|x|^2)^{mu-1/2}
/// with h_kappa(x) = prod |x_i|^{kappa_i}. The same parameters define the
/// simplex weight U_{kappa,mu,nu}.
struct WeightParams {
  int d = 2;
  std::vector<double> kappa;
  double mu = 0.5;
  double nu = 0.0;

  /// Validates and returns the parameter set; throws std::invalid_argument
  /// naming the offending field.
  static WeightParams make(std::vector<double> kappa, double mu, double nu);

  void validate() const;

  double gamma_kappa() const;
  /// lambda_kappa = gamma_kappa + (d-2)/2.
  double lambda_kappa() const;
  /// lambda_{kappa,mu,nu} = nu + mu + gamma_kappa + (d-1)/2.
  double lambda_total() const;

  std::span<const double> kappa_span() const { return kappa; }
  std::string describe() const;
};

/// The parameter grid every acceptance criterion sweeps.
std::vector<WeightParams> acceptance_grid(int d);

}  // namespace gegenball
