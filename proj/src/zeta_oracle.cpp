#include "etacalc/zeta_oracle.hpp"

#include <cmath>
#include <cstddef>

#include "etacalc/errors.hpp"

namespace etacalc {

namespace {
// B_2, B_4, ..., B_20
const double kBernoulli[] = {
    1.0 / 6,      -1.0 / 30,    1.0 / 42,      -1.0 / 30,     5.0 / 66,
    -691.0 / 2730, 7.0 / 6,     -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
};
}  // namespace

double hurwitz_zeta(double s, double a, int cutoff, int bernoulli_terms) {
  if (a <= 0.0) throw DomainError("hurwitz_zeta requires a > 0");
  if (s == 1.0) throw DomainError("hurwitz_zeta has a pole at s = 1");

  double sum = 0.0;
  for (int k = 0; k < cutoff; ++k) sum += std::pow(k + a, -s);

  double x = cutoff + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(x, -s);

  // Euler-Maclaurin tail: sum_j B_2j/(2j)! * (s)_(2j-1) * x^(-s-2j+1)
  double poch = s;              // rising factorial (s)(s+1)...(s+2j-2)
  double fact = 2.0;            // (2j)!
  double xpow = std::pow(x, -s - 1.0);
  for (int j = 1; j <= bernoulli_terms && j <= 10; ++j) {
    if (j > 1) {
      poch *= (s + 2.0 * j - 3.0) * (s + 2.0 * j - 2.0);
      fact *= (2.0 * j - 1.0) * (2.0 * j);
      xpow /= x * x;
    }
    sum += kBernoulli[j - 1] / fact * poch * xpow;
  }
  return sum;
}

double eta_arithmetic_progression(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("eta_arithmetic_progression requires 0 < a < 1");
  // Positive part of the spectrum is {k + a : k >= 0}, negative part is
  // {-(k + (1-a)) : k >= 0}; eta(s) = zeta(s,a) - zeta(s,1-a).
  return hurwitz_zeta(0.0, a) - hurwitz_zeta(0.0, 1.0 - a);
}

}  // namespace etacalc
