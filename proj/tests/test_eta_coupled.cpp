#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "etacalc/eta_coupled.hpp"

using namespace etacalc;

TEST_CASE("coupled xi for the Levi-Civita-type connection") {
  // l=2, g=1, deg=1, h*=0: h_L = 1, chi = 0.
  XiValue a = xi_coupled_LC(2, 1, validate_coupled(1, 0));
  CHECK(a.value == RadiusPolynomial({Rational(-1, 3), Rational(0),
                                     Rational(2, 3)}));
  CHECK(a.kernel_dim == 0);

  // l=-2, g=1, deg=-1, h*=1: h_L = 0.
  XiValue b = xi_coupled_LC(-2, 1, validate_coupled(-1, 1));
  CHECK(b.value == RadiusPolynomial({Rational(1, 3), Rational(0),
                                     Rational(-2, 3)}));

  // Trivial coupling at rho = 0 reduces to the uncoupled h = 0 case.
  for (long long l : {3LL, -5LL}) {
    XiValue c = xi_coupled_LC(l, 2, validate_coupled(0, 0));
    CHECK(c.value.evaluate(Rational(0)) == Rational(l, 12));
  }
  CHECK_THROWS_AS(xi_coupled_LC(0, 1, validate_coupled(1, 0)),
                  TrivialBundle);
}

TEST_CASE("coupled spectral flow") {
  CHECK(coupled_sf(2, validate_coupled(1, 0)) == 1);
  CHECK(coupled_sf(-2, validate_coupled(1, 0)) == 0);
  CHECK(coupled_sf(-2, validate_coupled(2, 5)) == 0);
  CHECK(coupled_sf(1, validate_coupled(0, 0)) == 0);
  CHECK_THROWS_AS(coupled_sf(0, validate_coupled(1, 0)), TrivialBundle);
}

TEST_CASE("coupled adiabatic xi") {
  XiValue a = xi_coupled_adiabatic(2, 1, validate_coupled(1, 0));
  CHECK(a.value == RadiusPolynomial(Rational(2, 3)));
  CHECK(a.kernel_dim == 1);
  CHECK(a.eta() == RadiusPolynomial(Rational(1, 3)));

  XiValue b = xi_coupled_adiabatic(-6, 3, validate_coupled(0, 2));
  CHECK(b.value == RadiusPolynomial(Rational(3, 2)));
  CHECK(b.kernel_dim == 4);
  CHECK(b.eta() == RadiusPolynomial(Rational(-1)));
}

TEST_CASE("coupled eta depends only on the bundle degree") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> ls(-12, 12);
  std::uniform_int_distribution<long long> gs(0, 6);
  std::uniform_int_distribution<long long> degs(-3, 3);
  std::uniform_int_distribution<long long> hs(0, 6);
  int done = 0;
  while (done < 200) {
    long long l = ls(rng);
    if (l == 0) continue;
    long long deg = degs(rng);
    long long h_star = hs(rng) + (deg < 0 ? -deg : 0);
    XiValue v = xi_coupled_adiabatic(l, gs(rng), validate_coupled(deg, h_star));
    CHECK(v.eta() == RadiusPolynomial(Rational(l, 6)));
    ++done;
  }
}

TEST_CASE("coupled pipeline telescopes on a randomized sweep") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> ls(-15, 15);
  std::uniform_int_distribution<long long> gs(0, 8);
  std::uniform_int_distribution<long long> degs(-4, 4);
  std::uniform_int_distribution<long long> hs(0, 8);
  int done = 0;
  while (done < 200) {
    long long l = ls(rng);
    if (l == 0) continue;
    long long deg = degs(rng);
    long long h_star = hs(rng) + (deg < 0 ? -deg : 0);
    CoupledLine line = validate_coupled(deg, h_star);
    long long g = gs(rng);
    RadiusPolynomial assembled =
        xi_coupled_LC(l, g, line).value +
        RadiusPolynomial(Rational(coupled_sf(l, line))) +
        second_transgression(l, g);
    CHECK(assembled ==
          RadiusPolynomial(Rational(l, 12) +
                           Rational(line.h_L_star + line.h_L(), 2)));
    ++done;
  }
}

TEST_CASE("third transgression") {
  CHECK(third_transgression(1, 2) == Rational(1, 4));
  CHECK(third_transgression(0, 7) == Rational(0));
  CHECK(third_transgression(0, -7) == Rational(0));
  CHECK(third_transgression(3, -2) == Rational(-9, 4));
  CHECK_THROWS_AS(third_transgression(1, 0), TrivialBundle);
}

TEST_CASE("flat coupling spectral flow") {
  CHECK(flat_coupling_sf(2, validate_coupled(1, 0)) == -1);
  CHECK(flat_coupling_sf(-3, validate_coupled(1, 2)) == -2);
  // Whenever h_L vanishes, so does the flow for l > 0; the record is built
  // directly since h_L = 0 with positive coupling degree is outside the
  // Riemann-Roch bookkeeping.
  CHECK(flat_coupling_sf(5, CoupledLine{2, -2}) == 0);
  CHECK_THROWS_AS(flat_coupling_sf(0, validate_coupled(1, 0)),
                  TrivialBundle);
  CHECK_THROWS_AS(flat_coupling_sf(2, validate_coupled(2, 0)),
                  ResidueOutOfRange);
  CHECK_THROWS_AS(flat_coupling_sf(2, validate_coupled(0, 1)),
                  ResidueOutOfRange);
  CHECK_THROWS_AS(flat_coupling_sf(-3, validate_coupled(3, 0)),
                  ResidueOutOfRange);
}

TEST_CASE("xi of the flat coupling") {
  CHECK(xi_flat(2, 1) == Rational(-1, 12));
  CHECK(xi_flat(-3, 1) == Rational(1, 12));
  CHECK(xi_flat(12, 6) == Rational(-1, 2));
  CHECK_THROWS_AS(xi_flat(0, 1), TrivialBundle);
  CHECK_THROWS_AS(xi_flat(2, 0), ResidueOutOfRange);
  CHECK_THROWS_AS(xi_flat(2, 2), ResidueOutOfRange);
  CHECK_THROWS_AS(xi_flat(-3, 5), ResidueOutOfRange);
}

TEST_CASE("flat pipeline: adiabatic xi + coupling flow + transgression") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long long> ls(-15, 15);
  std::uniform_int_distribution<long long> gs(0, 6);
  std::uniform_int_distribution<long long> hs(0, 6);
  int done = 0;
  while (done < 200) {
    long long l = ls(rng);
    long long abs_l = l < 0 ? -l : l;
    if (abs_l < 2) continue;
    std::uniform_int_distribution<long long> ks(1, abs_l - 1);
    long long k = ks(rng);
    CoupledLine line = validate_coupled(k, hs(rng));
    Rational assembled =
        xi_coupled_adiabatic(l, gs(rng), line).value.constant_term() +
        Rational(flat_coupling_sf(l, line)) + third_transgression(k, l);
    CHECK(assembled == xi_flat(l, k));
    ++done;
  }
}

TEST_CASE("residue shifts move xi_flat by integers") {
  CHECK(xi_flat_formal(2, 1) == xi_flat(2, 1));
  CHECK(xi_flat_formal(2, 3) - xi_flat_formal(2, 1) == Rational(1));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> ls(-12, 12);
  std::uniform_int_distribution<long long> ks(-30, 30);
  int done = 0;
  while (done < 200) {
    long long l = ls(rng);
    if (l == 0) continue;
    long long k = ks(rng);
    long long abs_l = l < 0 ? -l : l;
    Rational step = xi_flat_formal(l, k + abs_l) - xi_flat_formal(l, k);
    CHECK(step.is_integer());
    // The fractional part depends only on the residue class of k.
    auto [canon, shift] = reduce_residue(k, l);
    (void)shift;
    Rational drop = xi_flat_formal(l, k) - xi_flat_formal(l, canon);
    CHECK(drop.is_integer());
    ++done;
  }
}

TEST_CASE("eta of the flat coupling doubles xi") {
  CHECK(eta_flat(2, 1) == Rational(-1, 6));
  CHECK(eta_flat(-3, 1) == Rational(1, 6));
  CHECK(eta_flat(6, 3) == Rational(-1, 2));
  for (long long l : {2LL, 5LL, -7LL, 9LL}) {
    long long abs_l = l < 0 ? -l : l;
    for (long long kappa = 1; kappa < abs_l; ++kappa)
      CHECK(eta_flat(l, kappa) == Rational(2) * xi_flat(l, kappa));
  }
  CHECK_THROWS_AS(eta_flat(0, 1), TrivialBundle);
  CHECK_THROWS_AS(eta_flat(3, 3), ResidueOutOfRange);
}
