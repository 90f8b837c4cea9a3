#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "etacalc/rational.hpp"

namespace etacalc {

// Truncated formal power series in one variable with exact rational
// coefficients.  A series of truncation order T stores exactly T+1
// coefficients; arithmetic results carry the minimum of the operand
// truncations.
class PowerSeries {
 public:
  // Zero series of the given truncation order.
  explicit PowerSeries(std::size_t truncation);
  PowerSeries(std::size_t truncation, std::vector<Rational> coeffs);

  std::size_t truncation() const { return coeffs_.size() - 1; }
  const Rational& coeff(std::size_t d) const;
  void set_coeff(std::size_t d, const Rational& v);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Index of the first nonzero coefficient; truncation()+1 if none.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > truncation(); }

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator*(const Rational& s) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  // Substitutes x -> s*x (coefficient of x^d picks up s^d).
  PowerSeries scale_argument(const Rational& s) const;
  // Multiplies by x^k, dropping coefficients past the truncation.
  PowerSeries shift_up(std::size_t k) const;
  // Truncates (or zero-extends) to order T.
  PowerSeries truncate(std::size_t T) const;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;  // size = truncation + 1
};

// Quotient num/den of two series whose leading zeros agree: den must have
// finite valuation v and num valuation >= v.  Both operands are divided by
// x^v, after which den is a unit series.  The result satisfies
// q * den = num up to the common truncation minus v.
PowerSeries series_div_valuation(const PowerSeries& num,
                                 const PowerSeries& den);

// Taylor series of sinh, cosh, exp and tanh at 0, exact to order T.
PowerSeries sinh_series(std::size_t T);
PowerSeries cosh_series(std::size_t T);
PowerSeries exp_series(std::size_t T);
PowerSeries tanh_series(std::size_t T);

// Density (tanh(c/2) - c/2) / (c * tanh(c/2)) to order T (T >= 1).
// Leading terms: -c/12 + c^3/720 - ...
PowerSeries bc_density(std::size_t T);

// A-hat density (x/2)/sinh(x/2) to order T.  Leading terms: 1 - x^2/24 + ...
PowerSeries ahat_series(std::size_t T);

// Chern character density exp(x/2) to order T.
PowerSeries ch_series(std::size_t T);

}  // namespace etacalc
