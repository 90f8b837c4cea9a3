#pragma once

namespace etacalc {

// Hurwitz zeta zeta(s, a) = sum_{k>=0} (k+a)^(-s), continued past Re(s) > 1
// by Euler-Maclaurin summation: direct sum over k < N, integral and boundary
// terms at N, plus `bernoulli_terms` correction terms.  Valid for
// s > 1 - 2*bernoulli_terms, s != 1, a > 0.  Oracle-grade accuracy only.
double hurwitz_zeta(double s, double a, int cutoff = 10000,
                    int bernoulli_terms = 10);

// Eta invariant of the arithmetic progression spectrum {k + a : k in Z},
// evaluated as zeta(s,a) - zeta(s,1-a) at s = 0.  Requires 0 < a < 1.
// The classical closed form is 1 - 2a.
double eta_arithmetic_progression(double a);

}  // namespace etacalc
