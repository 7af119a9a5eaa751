#include "gegenball/poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gegenball {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

Poly::Poly(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Poly Poly::constant(int dim, double c) {
  Poly p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

Poly Poly::variable(int dim, int i) {
  if (i < 0 || i >= dim) throw std::invalid_argument("variable index out of range");
  Exponent e(dim, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

Poly Poly::monomial(Exponent e, double c) {
  Poly p(static_cast<int>(e.size()));
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent");
  p.add_term(e, c);
  return p;
}

Poly Poly::norm_squared(int dim) {
  Poly p(dim);
  for (int i = 0; i < dim; ++i) {
    Exponent e(dim, 0);
    e[i] = 2;
    p.add_term(e, 1.0);
  }
  return p;
}

Poly Poly::coordinate_sum(int dim) {
  Poly p(dim);
  for (int i = 0; i < dim; ++i) p = p + variable(dim, i);
  return p;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, total(e));
  return deg;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int first = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total(t.first) == first; });
}

double Poly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double Poly::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension does not match polynomial");
  if (terms_.empty()) return 0.0;
  const int deg = degree();
  // powers[i*(deg+1)+k] = x_i^k
  std::vector<double> powers(static_cast<std::size_t>(dim_) * (deg + 1));
  for (int i = 0; i < dim_; ++i) {
    double v = 1.0;
    for (int k = 0; k <= deg; ++k) {
      powers[i * (deg + 1) + k] = v;
      v *= x[i];
    }
  }
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (int i = 0; i < dim_; ++i) m *= powers[i * (deg + 1) + e[i]];
    sum += m;
  }
  return sum;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= dim_) throw std::invalid_argument("variable index out of range");
  Poly r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add_term(f, c * e[i]);
  }
  return r;
}

Poly Poly::homogeneous_part(int k) const {
  Poly r(dim_);
  for (const auto& [e, c] : terms_)
    if (total(e) == k) r.add_term(e, c);
  return r;
}

Poly Poly::reflect(int i) const {
  if (i < 0 || i >= dim_) throw std::invalid_argument("variable index out of range");
  Poly r(dim_);
  for (const auto& [e, c] : terms_) r.add_term(e, (e[i] % 2) ? -c : c);
  return r;
}

Poly Poly::square_arguments() const {
  Poly r(dim_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int& k : f) k *= 2;
    r.add_term(f, c);
  }
  return r;
}

Poly Poly::halve_exponents() const {
  Poly r(dim_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int& k : f) {
      if (k % 2) throw std::domain_error("halve_exponents: polynomial is not even in every variable");
      k /= 2;
    }
    r.add_term(f, c);
  }
  return r;
}

Poly& Poly::add_term(const Exponent& e, double c) {
  if (static_cast<int>(e.size()) != dim_) throw std::invalid_argument("exponent dimension does not match polynomial");
  if (c == 0.0) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
  return *this;
}

void Poly::check_dim(const Poly& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
}

Poly Poly::operator-() const { return -1.0 * *this; }

Poly operator+(const Poly& a, const Poly& b) {
  a.check_dim(b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_dim(b);
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_dim(b);
  Poly r(a.dim_);
  Exponent e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(double s, const Poly& p) {
  Poly r(p.dim_);
  if (s == 0.0) return r;
  for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
  return r;
}

Poly compose_univariate(std::span<const double> coeffs, const Poly& inner) {
  Poly r(inner.dim());
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * inner + Poly::constant(inner.dim(), coeffs[k]);
  return r;
}

Poly x_dot_grad(const Poly& p) {
  Poly r(p.dim());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c * total(e));
  return r;
}

std::string to_json(const Poly& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) j["terms"].push_back(nlohmann::json::array({e, c}));
  return j.dump();
}

Poly poly_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Poly p(j.at("dim").get<int>());
  for (const auto& t : j.at("terms")) p.add_term(t.at(0).get<Exponent>(), t.at(1).get<double>());
  return p;
}

}  // namespace gegenball
