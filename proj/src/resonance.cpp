#include "etacalc/resonance.hpp"

#include "etacalc/errors.hpp"
#include "etacalc/geometry.hpp"

namespace etacalc {

SymmetricForm q1_gram(long long d) {
  if (d < 1) {
    throw InvalidModuli("q1_gram requires d >= 1");
  }
  SymmetricForm form(static_cast<std::size_t>(2 * d + 1));
  form.set(0, 2, Rational(1, 2));
  return form;
}

SymmetricForm q2_gram(long long g, long long m) {
  if (g < 0 || m < 0) {
    throw InvalidModuli("q2_gram requires g >= 0 and m >= 0");
  }
  if (m > g) {
    throw CliffordViolation(
        "embedded subspace dimension exceeds ambient harmonic space");
  }
  SymmetricForm form(static_cast<std::size_t>(2 * m + 2 * g));
  for (long long i = 0; i < 2 * m; ++i) {
    form.set(static_cast<std::size_t>(i), static_cast<std::size_t>(2 * m + i),
             Rational(-1, 2));
  }
  return form;
}

long long degenerate_contribution(long long l) {
  if (l == 0) {
    throw TrivialBundle("degenerate_contribution requires l != 0");
  }
  return l > 0 ? -1 : 0;
}

AdotCoefficient explicit_adot_coefficient(long long l,
                                          const Rational& norm_sq_integral) {
  if (l == 0) {
    throw TrivialBundle("explicit_adot_coefficient requires l != 0");
  }
  if (norm_sq_integral.sign() <= 0) {
    throw DomainError("norm_sq_integral must be positive");
  }
  AdotCoefficient out;
  out.coefficient = Rational(-1) / Rational(2 * l);
  out.pairing_sign = (out.coefficient * norm_sq_integral).sign();
  return out;
}

long long sf_plus(long long l, long long h_L_star) {
  if (l == 0) {
    throw TrivialBundle("sf_plus requires l != 0");
  }
  if (h_L_star < 0) {
    throw RiemannRochViolation("sf_plus requires h_L_star >= 0");
  }
  // Generic part plus the order-two contribution present only for l > 0.
  return (-1 - 2 * h_L_star) + degenerate_contribution(l);
}

long long sf_minus(long long l, long long h_L_star) {
  if (l == 0) {
    throw TrivialBundle("sf_minus requires l != 0");
  }
  return sf_plus(-l, h_L_star);
}

std::pair<long long, long long> ker_counts(long long g, long long n) {
  if (n >= 0) {
    throw InvalidModuli("ker_counts requires n < 0");
  }
  long long abs_n = -n;
  if (g < 1 + abs_n) {
    throw InvalidModuli("ker_counts requires g >= 1 + |n|");
  }
  return {2 * (g - 1 - abs_n), 2 * (g - abs_n) - 1};
}

}  // namespace etacalc
