#pragma once

#include "etacalc/radius_polynomial.hpp"
#include "etacalc/rational.hpp"

namespace etacalc {

// Reduced eta invariant xi = (dim ker + eta)/2 together with the kernel
// dimension, so eta = 2*xi - kernel_dim is always recoverable.
struct XiValue {
  RadiusPolynomial value;
  long long kernel_dim = 0;

  RadiusPolynomial eta() const {
    return value * Rational(2) - RadiusPolynomial(Rational(kernel_dim));
  }
  friend bool operator==(const XiValue&, const XiValue&) = default;
};

// Adiabatic limit of the eta invariant of the spin Dirac operator:
// l/6 - 2*sign(l)*h.
Rational adiabatic_limit_eta(long long l, long long h);

// Same limit assembled from characteristic-class series: the degree-1
// coefficient of ahat*density integrates to l over the base, plus the
// small-eigenvalue contribution -2*sign(l)*h.  Asserted equal to the
// closed form.
Rational adiabatic_limit_via_series(long long l, long long h, std::size_t T);

// xi of the spin Dirac operator for the Levi-Civita-type connection:
// l/12 - sign(l)*h + (l/12)(l^2 rho^2 - chi rho), kernel 0.
XiValue xi_spin_LC(long long l, long long g, long long h);

// Transgression between the two natural connections:
// -(l/12)(l^2 rho^2 - chi rho).
RadiusPolynomial first_transgression(long long l, long long g);
RadiusPolynomial second_transgression(long long l, long long g);

// Spectral flow of the adiabatic deformation: 2h if l > 0, else 0.
long long sf_adiabatic_deformation(long long l, long long h);

// xi of the adiabatic spin Dirac operator: constant l/12 + h with kernel
// dimension 2h (so eta = l/6 regardless of g and h).  Assembled internally
// as xi_spin_LC + spectral flow + second transgression and asserted equal.
XiValue xi_spin_adiabatic(long long l, long long g, long long h);

// APS index of the Dirac operator: -p1_integral/24 - xi.
Rational aps_index_dirac(const Rational& p1_integral, const Rational& xi);

}  // namespace etacalc
