#include "etacalc/eta_coupled.hpp"

#include "etacalc/errors.hpp"

namespace etacalc {

namespace {
void require_nontrivial(long long l) {
  if (l == 0) throw TrivialBundle("degree l must be nonzero");
}
int sgn(long long l) { return l > 0 ? 1 : (l < 0 ? -1 : 0); }
}  // namespace

XiValue xi_coupled_LC(long long l, long long g, const CoupledLine& line) {
  require_nontrivial(l);
  validate_coupled(line.deg, line.h_L_star);
  long long chi = 2 - 2 * g;
  Rational hsum(line.h_L_star + line.h_L());
  RadiusPolynomial v{Rational(l, 12) - Rational(sgn(l)) * hsum / Rational(2),
                     Rational(l, 12) * Rational(-chi),
                     Rational(l, 12) * Rational(l * l)};
  return XiValue{v, 0};
}

long long coupled_sf(long long l, const CoupledLine& line) {
  require_nontrivial(l);
  return l > 0 ? line.h_L_star + line.h_L() : 0;
}

XiValue xi_coupled_adiabatic(long long l, long long g,
                             const CoupledLine& line) {
  require_nontrivial(l);
  validate_coupled(line.deg, line.h_L_star);
  long long hsum = line.h_L_star + line.h_L();
  RadiusPolynomial closed{Rational(l, 12) + Rational(hsum, 2)};

  RadiusPolynomial assembled =
      xi_coupled_LC(l, g, line).value +
      RadiusPolynomial(Rational(coupled_sf(l, line))) +
      second_transgression(l, g);
  if (assembled != closed)
    throw AssemblyMismatch("coupled pipeline " + assembled.str() +
                           " != closed form " + closed.str());
  return XiValue{closed, hsum};
}

Rational third_transgression(long long k, long long l) {
  require_nontrivial(l);
  return Rational(k * k) / Rational(2 * l);
}

long long flat_coupling_sf(long long l, const CoupledLine& line) {
  require_nontrivial(l);
  long long abs_l = l < 0 ? -l : l;
  if (line.deg <= 0 || line.deg >= abs_l)
    throw ResidueOutOfRange("coupling degree " + std::to_string(line.deg) +
                            " outside (0, |l|) with |l| = " +
                            std::to_string(abs_l));
  return l > 0 ? -line.h_L() : -line.h_L_star;
}

Rational xi_flat(long long l, long long k) {
  require_nontrivial(l);
  long long abs_l = l < 0 ? -l : l;
  if (k <= 0 || k >= abs_l)
    throw ResidueOutOfRange("residue k = " + std::to_string(k) +
                            " outside (0, |l|) with |l| = " +
                            std::to_string(abs_l));
  return Rational(l, 12) + Rational(k * k) / Rational(2 * l) -
         Rational(sgn(l) * k, 2);
}

Rational xi_flat_formal(long long l, long long k) {
  require_nontrivial(l);
  return Rational(l, 12) + Rational(k) * Rational(k) / Rational(2 * l) -
         Rational(sgn(l) * k, 2);
}

Rational eta_flat(long long l, long long kappa) {
  require_nontrivial(l);
  long long abs_l = l < 0 ? -l : l;
  if (kappa <= 0 || kappa >= abs_l)
    throw ResidueOutOfRange("residue kappa = " + std::to_string(kappa) +
                            " outside (0, |l|) with |l| = " +
                            std::to_string(abs_l));
  Rational value = Rational(l, 6) + Rational(kappa * kappa) / Rational(l) -
                   Rational(kappa * sgn(l));
  Rational doubled = Rational(2) * xi_flat(l, kappa);
  if (value != doubled)
    throw AssemblyMismatch("eta_flat " + value.str() + " != 2*xi_flat " +
                           doubled.str());
  return value;
}

}  // namespace etacalc
