#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "etacalc/power_series.hpp"

using etacalc::DivisionByZero;
using etacalc::NegativeValuation;
using etacalc::PowerSeries;
using etacalc::Rational;

namespace {

// Independent oracle for tanh, bypassing the library's sinh/cosh division:
// tanh x = sum_{n>=1} B_{2n} 4^n (4^n - 1) / (2n)! x^{2n-1}, with the
// Bernoulli numbers entered as literals.
PowerSeries tanh_oracle(std::size_t T) {
  const Rational bern[] = {Rational(1, 6),      Rational(-1, 30),
                           Rational(1, 42),     Rational(-1, 30),
                           Rational(5, 66),     Rational(-691, 2730),
                           Rational(7, 6)};
  PowerSeries r(T);
  Rational fact(1);  // (2n)!
  Rational pow4(1);  // 4^n
  for (std::size_t n = 1; 2 * n - 1 <= T && n <= 7; ++n) {
    fact *= Rational(static_cast<long long>(2 * n - 1) *
                     static_cast<long long>(2 * n));
    pow4 *= Rational(4);
    r.set_coeff(2 * n - 1,
                bern[n - 1] * pow4 * (pow4 - Rational(1)) / fact);
  }
  return r;
}

// Naive coefficient recursion for num/den with den(0) != 0; written out
// here so the library's division routine is checked against a second,
// structurally different implementation.
std::vector<Rational> unit_divide(const std::vector<Rational>& num,
                                  const std::vector<Rational>& den,
                                  std::size_t count) {
  std::vector<Rational> q(count);
  Rational lead = den[0].inverse();
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 0; j < k; ++j)
      if (k - j < den.size()) acc -= q[j] * den[k - j];
    q[k] = acc * lead;
  }
  return q;
}

}  // namespace

TEST_CASE("elementary series match their Taylor coefficients") {
  PowerSeries sh = etacalc::sinh_series(7);
  CHECK(sh.coeff(0) == Rational(0));
  CHECK(sh.coeff(1) == Rational(1));
  CHECK(sh.coeff(3) == Rational(1, 6));
  CHECK(sh.coeff(5) == Rational(1, 120));
  CHECK(sh.coeff(7) == Rational(1, 5040));

  PowerSeries ch = etacalc::cosh_series(6);
  CHECK(ch.coeff(0) == Rational(1));
  CHECK(ch.coeff(2) == Rational(1, 2));
  CHECK(ch.coeff(4) == Rational(1, 24));
  CHECK(ch.coeff(6) == Rational(1, 720));

  PowerSeries ex = etacalc::exp_series(5);
  CHECK(ex.coeff(0) == Rational(1));
  CHECK(ex.coeff(1) == Rational(1));
  CHECK(ex.coeff(4) == Rational(1, 24));
  CHECK(ex.coeff(5) == Rational(1, 120));
}

TEST_CASE("tanh_series agrees with the Bernoulli-formula oracle") {
  CHECK(etacalc::tanh_series(13) == tanh_oracle(13));
  PowerSeries th = etacalc::tanh_series(9);
  CHECK(th.coeff(1) == Rational(1));
  CHECK(th.coeff(2) == Rational(0));
  CHECK(th.coeff(3) == Rational(-1, 3));
  CHECK(th.coeff(5) == Rational(2, 15));
  CHECK(th.coeff(7) == Rational(-17, 315));
  CHECK(th.coeff(9) == Rational(62, 2835));
}

TEST_CASE("sinh cosh tanh satisfy tanh*cosh = sinh") {
  std::size_t T = 11;
  PowerSeries lhs = etacalc::tanh_series(T) * etacalc::cosh_series(T);
  CHECK(lhs == etacalc::sinh_series(T));
}

TEST_CASE("arithmetic keeps the minimum truncation") {
  PowerSeries a(3, {Rational(1), Rational(1)});
  PowerSeries b(5, {Rational(1), Rational(-1)});
  PowerSeries prod = a * b;
  CHECK(prod.truncation() == 3);
  CHECK(prod.coeff(0) == Rational(1));
  CHECK(prod.coeff(1) == Rational(0));
  CHECK(prod.coeff(2) == Rational(-1));
  CHECK((a + b).coeff(1) == Rational(0));
  CHECK((a - b).coeff(1) == Rational(2));
}

TEST_CASE("scale_argument and shift_up act on exponents") {
  PowerSeries ex = etacalc::exp_series(4);
  PowerSeries half = ex.scale_argument(Rational(1, 2));
  CHECK(half.coeff(1) == Rational(1, 2));
  CHECK(half.coeff(2) == Rational(1, 8));
  PowerSeries shifted = ex.shift_up(2);
  CHECK(shifted.coeff(0) == Rational(0));
  CHECK(shifted.coeff(2) == Rational(1));
  CHECK(shifted.coeff(3) == Rational(1));
  CHECK(shifted.valuation() == 2);
}

TEST_CASE("valuation and zero detection") {
  PowerSeries z(4);
  CHECK(z.is_zero());
  CHECK(z.valuation() == 5);
  PowerSeries x(4);
  x.set_coeff(3, Rational(2));
  CHECK(x.valuation() == 3);
  CHECK_FALSE(x.is_zero());
}

TEST_CASE("series division: monomial quotient and identity") {
  PowerSeries c3(6), c2(6);
  c3.set_coeff(3, Rational(1));
  c2.set_coeff(2, Rational(1));
  PowerSeries q = etacalc::series_div_valuation(c3, c2);
  CHECK(q.coeff(1) == Rational(1));
  CHECK(q.valuation() == 1);

  PowerSeries den = etacalc::cosh_series(6);
  PowerSeries one = etacalc::series_div_valuation(den, den);
  CHECK(one.coeff(0) == Rational(1));
  for (std::size_t d = 1; d <= one.truncation(); ++d)
    CHECK(one.coeff(d) == Rational(0));
}

TEST_CASE("series division reproduces the hand long-division value") {
  // num = -c^3/24 + c^5/240, den = c^2/2 - c^4/24: quotient starts
  // -c/12 + c^3/720.
  PowerSeries num(5), den(5);
  num.set_coeff(3, Rational(-1, 24));
  num.set_coeff(5, Rational(1, 240));
  den.set_coeff(2, Rational(1, 2));
  den.set_coeff(4, Rational(-1, 24));
  PowerSeries q = etacalc::series_div_valuation(num, den);
  CHECK(q.coeff(1) == Rational(-1, 12));
  CHECK(q.coeff(3) == Rational(1, 720));
}

TEST_CASE("series division round-trips against multiplication") {
  std::mt19937_64 rng(911);
  std::uniform_int_distribution<long long> pick(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t T = 8;
    PowerSeries q(T), d(T);
    d.set_coeff(0, Rational(pick(rng) * 2 + 1));  // unit constant term
    for (std::size_t k = 1; k <= T; ++k) d.set_coeff(k, Rational(pick(rng)));
    for (std::size_t k = 0; k <= T; ++k) q.set_coeff(k, Rational(pick(rng)));
    PowerSeries n = q * d;
    CHECK(etacalc::series_div_valuation(n, d) == q);
  }
}

TEST_CASE("series division guards") {
  PowerSeries zero(4);
  PowerSeries x(4);
  x.set_coeff(1, Rational(1));
  CHECK_THROWS_AS(etacalc::series_div_valuation(x, zero), DivisionByZero);
  PowerSeries c2(4);
  c2.set_coeff(2, Rational(1));
  CHECK_THROWS_AS(etacalc::series_div_valuation(x, c2), NegativeValuation);
}

TEST_CASE("adiabatic density matches the independent division oracle") {
  // Build the density from the Bernoulli-formula tanh oracle and a second
  // division routine, then freeze the values the library must reproduce.
  std::size_t T = 11;
  PowerSeries th = tanh_oracle(T + 2).scale_argument(Rational(1, 2));
  // Both operands divided by c^2 by hand; the c^0 and c^1 coefficients of
  // tanh(c/2) - c/2 vanish, so nothing is lost in the shift.
  std::vector<Rational> num(T + 1), den(T + 1);
  for (std::size_t d = 0; d <= T; ++d) {
    num[d] = th.coeff(d + 2);  // (tanh(c/2) - c/2) / c^2
    den[d] = th.coeff(d + 1);  // (c * tanh(c/2)) / c^2
  }
  std::vector<Rational> q = unit_divide(num, den, T + 1);
  // First values of the quotient, also fixed as literals.
  CHECK(q[0] == Rational(0));
  CHECK(q[1] == Rational(-1, 12));
  CHECK(q[3] == Rational(1, 720));
  CHECK(q[5] == Rational(-1, 30240));
  CHECK(q[7] == Rational(1, 1209600));
  CHECK(q[9] == Rational(-1, 47900160));

  PowerSeries bc = etacalc::bc_density(T);
  for (std::size_t d = 0; d <= T; ++d) CHECK(bc.coeff(d) == q[d]);
}

TEST_CASE("adiabatic density is odd in c") {
  PowerSeries bc = etacalc::bc_density(10);
  for (std::size_t d = 0; d <= 10; d += 2) CHECK(bc.coeff(d) == Rational(0));
}

TEST_CASE("adiabatic density agrees with floating-point evaluation") {
  double c = 1e-2;
  double closed = (std::tanh(c / 2) - c / 2) / (c * std::tanh(c / 2));
  PowerSeries bc = etacalc::bc_density(5);
  double series = 0.0;
  for (std::size_t d = 0; d <= 5; ++d)
    series += bc.coeff(d).to_double() * std::pow(c, static_cast<double>(d));
  CHECK(std::abs(series - closed) <= 1e-12);
}

TEST_CASE("A-hat density values") {
  PowerSeries ah = etacalc::ahat_series(8);
  CHECK(ah.coeff(0) == Rational(1));
  CHECK(ah.coeff(1) == Rational(0));
  CHECK(ah.coeff(2) == Rational(-1, 24));
  CHECK(ah.coeff(4) == Rational(7, 5760));
  CHECK(ah.coeff(6) == Rational(-31, 967680));
  CHECK(ah.coeff(8) == Rational(127, 154828800));
  for (std::size_t d = 1; d <= 7; d += 2) CHECK(ah.coeff(d) == Rational(0));
}

TEST_CASE("Chern character density values") {
  PowerSeries ch = etacalc::ch_series(6);
  CHECK(ch.coeff(0) == Rational(1));
  CHECK(ch.coeff(1) == Rational(1, 2));
  CHECK(ch.coeff(2) == Rational(1, 8));
  CHECK(ch.coeff(3) == Rational(1, 48));
  CHECK(ch.coeff(4) == Rational(1, 384));
}

TEST_CASE("printing marks the truncation order") {
  PowerSeries bc = etacalc::bc_density(3);
  CHECK(bc.str("c") == "-1/12*c + 1/720*c^3 + O(c^4)");
}
