#include "etacalc/radius_polynomial.hpp"

#include <sstream>

namespace etacalc {

namespace {
const Rational kZero{};
}

RadiusPolynomial::RadiusPolynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

RadiusPolynomial::RadiusPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RadiusPolynomial::RadiusPolynomial(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs) {
  trim();
}

void RadiusPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& RadiusPolynomial::coeff(std::size_t d) const {
  return d < coeffs_.size() ? coeffs_[d] : kZero;
}

Rational RadiusPolynomial::evaluate(const Rational& rho) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * rho + *it;
  return acc;
}

RadiusPolynomial RadiusPolynomial::operator-() const {
  RadiusPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RadiusPolynomial& RadiusPolynomial::operator+=(const RadiusPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RadiusPolynomial& RadiusPolynomial::operator-=(const RadiusPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RadiusPolynomial& RadiusPolynomial::operator*=(const RadiusPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RadiusPolynomial& RadiusPolynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RadiusPolynomial RadiusPolynomial::rho(std::size_t d) {
  std::vector<Rational> c(d + 1);
  c[d] = Rational(1);
  return RadiusPolynomial(std::move(c));
}

std::string RadiusPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool unit = (a == Rational(1));
    if (d == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << '*';
      os << "rho";
      if (d > 1) os << '^' << d;
    }
  }
  return os.str();
}

}  // namespace etacalc
