#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "etacalc/rational.hpp"

namespace etacalc {

// Polynomial in rho = r^2 (r = fiber radius) with exact rational
// coefficients.  Trailing zero coefficients are trimmed; the zero polynomial
// has an empty coefficient list.
class RadiusPolynomial {
 public:
  RadiusPolynomial() = default;
  RadiusPolynomial(const Rational& constant);
  explicit RadiusPolynomial(std::vector<Rational> coeffs);
  RadiusPolynomial(std::initializer_list<Rational> coeffs);

  // Coefficient of rho^d (zero beyond the stored degree).
  const Rational& coeff(std::size_t d) const;
  // Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational constant_term() const { return coeff(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& rho) const;

  RadiusPolynomial operator-() const;
  RadiusPolynomial& operator+=(const RadiusPolynomial& o);
  RadiusPolynomial& operator-=(const RadiusPolynomial& o);
  RadiusPolynomial& operator*=(const RadiusPolynomial& o);
  RadiusPolynomial& operator*=(const Rational& s);

  friend RadiusPolynomial operator+(RadiusPolynomial a,
                                    const RadiusPolynomial& b) {
    return a += b;
  }
  friend RadiusPolynomial operator-(RadiusPolynomial a,
                                    const RadiusPolynomial& b) {
    return a -= b;
  }
  friend RadiusPolynomial operator*(RadiusPolynomial a,
                                    const RadiusPolynomial& b) {
    return a *= b;
  }
  friend RadiusPolynomial operator*(RadiusPolynomial a, const Rational& s) {
    return a *= s;
  }
  friend RadiusPolynomial operator*(const Rational& s, RadiusPolynomial a) {
    return a *= s;
  }

  friend bool operator==(const RadiusPolynomial& a,
                         const RadiusPolynomial& b) = default;

  // Monomial rho^d.
  static RadiusPolynomial rho(std::size_t d = 1);

  // Human-readable form, e.g. "1/2 + rho + 18*rho^2".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

}  // namespace etacalc
