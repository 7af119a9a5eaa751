#include "gegenball/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gegenball {

WeightParams WeightParams::make(std::vector<double> kappa, double mu, double nu) {
  WeightParams p;
  p.d = static_cast<int>(kappa.size());
  p.kappa = std::move(kappa);
  p.mu = mu;
  p.nu = nu;
  p.validate();
  return p;
}

void WeightParams::validate() const {
  if (d != static_cast<int>(kappa.size()))
    throw std::invalid_argument("kappa: expected " + std::to_string(d) + " components, got " +
                                std::to_string(kappa.size()));
  if (d < 2 || d > 3) throw std::invalid_argument("d: only d = 2 and d = 3 are supported, got " + std::to_string(d));
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (!std::isfinite(kappa[i]) || kappa[i] < 0.0)
      throw std::invalid_argument("kappa[" + std::to_string(i) + "]: must be finite and >= 0");
  }
  if (!std::isfinite(mu) || !(mu > -0.5)) throw std::invalid_argument("mu: must satisfy mu > -1/2");
  if (!std::isfinite(nu) || !(nu + gamma_kappa() + d / 2.0 > 0.0))
    throw std::invalid_argument("nu: must satisfy nu + gamma_kappa + d/2 > 0");
}

double WeightParams::gamma_kappa() const {
  double g = 0.0;
  for (double k : kappa) g += k;
  return g;
}

double WeightParams::lambda_kappa() const { return gamma_kappa() + (d - 2) / 2.0; }

double WeightParams::lambda_total() const { return nu + mu + gamma_kappa() + (d - 1) / 2.0; }

std::string WeightParams::describe() const {
  std::ostringstream os;
  os << "d=" << d << " kappa=(";
  for (std::size_t i = 0; i < kappa.size(); ++i) os << (i ? "," : "") << kappa[i];
  os << ") mu=" << mu << " nu=" << nu;
  return os.str();
}

std::vector<WeightParams> acceptance_grid(int d) {
  std::vector<std::vector<double>> kappas;
  if (d == 2) {
    kappas = {{0.0, 0.0}, {0.5, 0.0}, {0.3, 0.7}};
  } else if (d == 3) {
    kappas = {{0.0, 0.0, 0.0}, {0.5, 0.0, 0.0}, {0.3, 0.7, 0.5}};
  } else {
    throw std::invalid_argument("acceptance grid defined for d = 2, 3 only");
  }
  std::vector<WeightParams> grid;
  for (const auto& k : kappas)
    for (double mu : {0.0, 0.5, 1.0})
      for (double nu : {0.0, 0.5, 1.5}) grid.push_back(WeightParams::make(k, mu, nu));
  return grid;
}

}  // namespace gegenball
