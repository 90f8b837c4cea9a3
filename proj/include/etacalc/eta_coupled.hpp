#pragma once

#include "etacalc/eta_spin.hpp"
#include "etacalc/geometry.hpp"

namespace etacalc {

// xi of the coupled Dirac operator for the Levi-Civita-type connection:
// l/12 - sign(l)(h_L* + h_L)/2 + (l/12)(l^2 rho^2 - chi rho), kernel 0.
XiValue xi_coupled_LC(long long l, long long g, const CoupledLine& line);

// Spectral flow of the coupled adiabatic deformation:
// h_L* + h_L if l > 0, else 0.
long long coupled_sf(long long l, const CoupledLine& line);

// xi of the coupled adiabatic operator: constant l/12 + (h_L* + h_L)/2 with
// kernel dimension h_L* + h_L (so eta = l/6).  Assembled internally as
// xi_coupled_LC + coupled_sf + second_transgression and asserted equal.
XiValue xi_coupled_adiabatic(long long l, long long g,
                             const CoupledLine& line);

// Transgression from the pulled-back coupling to the flat coupling with
// residue k: k^2/(2l).
Rational third_transgression(long long k, long long l);

// Spectral flow of the coupling deformation toward the flat connection:
// -h_L if l > 0, -h_L* if l < 0.  Requires 0 < line.deg < |l|.
long long flat_coupling_sf(long long l, const CoupledLine& line);

// xi of the Dirac operator coupled to the flat connection with residue k,
// 0 < k < |l|:  l/12 + k^2/(2l) - sign(l) k/2.  The operator is invertible,
// so xi is the full invariant (kernel 0).
Rational xi_flat(long long l, long long k);

// The same formula evaluated for any integer k (no range gate).  Shifting
// k by |l| changes the value by an integer, so the fractional part depends
// only on the residue class of k.
Rational xi_flat_formal(long long l, long long k);

// eta of the same operator: l/6 + kappa^2/l - kappa*sign(l) = 2*xi_flat.
Rational eta_flat(long long l, long long kappa);

}  // namespace etacalc
