#include "etacalc/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "etacalc/errors.hpp"

namespace etacalc {

PowerSeries::PowerSeries(std::size_t truncation) : coeffs_(truncation + 1) {}

PowerSeries::PowerSeries(std::size_t truncation, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(truncation + 1);
}

const Rational& PowerSeries::coeff(std::size_t d) const {
  static const Rational zero{};
  return d < coeffs_.size() ? coeffs_[d] : zero;
}

void PowerSeries::set_coeff(std::size_t d, const Rational& v) {
  if (d < coeffs_.size()) coeffs_[d] = v;
}

std::size_t PowerSeries::valuation() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (!coeffs_[d].is_zero()) return d;
  return coeffs_.size();
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::size_t T = std::min(a.truncation(), b.truncation());
  PowerSeries r(T);
  for (std::size_t d = 0; d <= T; ++d)
    r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  std::size_t T = std::min(a.truncation(), b.truncation());
  PowerSeries r(T);
  for (std::size_t d = 0; d <= T; ++d)
    r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  std::size_t T = std::min(a.truncation(), b.truncation());
  PowerSeries r(T);
  for (std::size_t i = 0; i <= T; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= T; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

PowerSeries PowerSeries::operator*(const Rational& s) const {
  PowerSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

PowerSeries PowerSeries::scale_argument(const Rational& s) const {
  PowerSeries r(truncation());
  Rational p(1);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    r.coeffs_[d] = coeffs_[d] * p;
    p *= s;
  }
  return r;
}

PowerSeries PowerSeries::shift_up(std::size_t k) const {
  PowerSeries r(truncation());
  for (std::size_t d = k; d < coeffs_.size(); ++d)
    r.coeffs_[d] = coeffs_[d - k];
  return r;
}

PowerSeries PowerSeries::truncate(std::size_t T) const {
  PowerSeries r(T);
  for (std::size_t d = 0; d <= T && d < coeffs_.size(); ++d)
    r.coeffs_[d] = coeffs_[d];
  return r;
}

std::string PowerSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d].is_zero()) continue;
    Rational a = coeffs_[d];
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
    if (d == 0) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << '*';
      os << var;
      if (d > 1) os << '^' << d;
    }
  }
  if (first) os << '0';
  os << " + O(" << var << '^' << coeffs_.size() << ')';
  return os.str();
}

PowerSeries series_div_valuation(const PowerSeries& num,
                                 const PowerSeries& den) {
  std::size_t vd = den.valuation();
  if (vd > den.truncation())
    throw DivisionByZero("series division by the zero series");
  std::size_t vn = num.valuation();
  if (vn < vd)
    throw NegativeValuation("numerator valuation " + std::to_string(vn) +
                            " below denominator valuation " +
                            std::to_string(vd));

  // Divide both operands by x^vd, then divide by the resulting unit series.
  std::size_t T = std::min(num.truncation(), den.truncation());
  std::size_t Tq = T - vd;
  PowerSeries q(Tq);
  std::vector<Rational> n(Tq + 1), d(Tq + 1);
  for (std::size_t i = 0; i <= Tq; ++i) {
    n[i] = num.coeff(i + vd);
    d[i] = den.coeff(i + vd);
  }
  Rational lead = d[0].inverse();
  for (std::size_t k = 0; k <= Tq; ++k) {
    Rational acc = n[k];
    for (std::size_t j = 0; j < k; ++j) acc -= q.coeff(j) * d[k - j];
    q.set_coeff(k, acc * lead);
  }
  return q;
}

PowerSeries sinh_series(std::size_t T) {
  PowerSeries r(T);
  Rational term(1);  // 1/(2k+1)! built incrementally
  for (std::size_t d = 1; d <= T; d += 2) {
    if (d > 1) term /= Rational(static_cast<long long>(d) *
                                static_cast<long long>(d - 1));
    r.set_coeff(d, term);
  }
  return r;
}

PowerSeries cosh_series(std::size_t T) {
  PowerSeries r(T);
  Rational term(1);
  r.set_coeff(0, term);
  for (std::size_t d = 2; d <= T; d += 2) {
    term /= Rational(static_cast<long long>(d) *
                     static_cast<long long>(d - 1));
    r.set_coeff(d, term);
  }
  return r;
}

PowerSeries exp_series(std::size_t T) {
  PowerSeries r(T);
  Rational term(1);
  r.set_coeff(0, term);
  for (std::size_t d = 1; d <= T; ++d) {
    term /= Rational(static_cast<long long>(d));
    r.set_coeff(d, term);
  }
  return r;
}

PowerSeries tanh_series(std::size_t T) {
  // tanh = sinh / cosh; cosh is a unit, so no order is lost.
  return series_div_valuation(sinh_series(T), cosh_series(T));
}

PowerSeries bc_density(std::size_t T) {
  // Numerator tanh(c/2) - c/2 has valuation 3, denominator c*tanh(c/2) has
  // valuation 2, so two orders are consumed by the division.
  std::size_t Ti = T + 2;
  PowerSeries th = tanh_series(Ti).scale_argument(Rational(1, 2));
  PowerSeries half_c(Ti);
  half_c.set_coeff(1, Rational(1, 2));
  PowerSeries num = th - half_c;
  PowerSeries den = th.shift_up(1);
  return series_div_valuation(num, den).truncate(T);
}

PowerSeries ahat_series(std::size_t T) {
  std::size_t Ti = T + 1;
  PowerSeries num(Ti);
  num.set_coeff(1, Rational(1, 2));
  PowerSeries den = sinh_series(Ti).scale_argument(Rational(1, 2));
  return series_div_valuation(num, den).truncate(T);
}

PowerSeries ch_series(std::size_t T) {
  return exp_series(T).scale_argument(Rational(1, 2));
}

}  // namespace etacalc
