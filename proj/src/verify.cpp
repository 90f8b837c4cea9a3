#include "etacalc/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "etacalc/eta_coupled.hpp"
#include "etacalc/eta_spin.hpp"
#include "etacalc/geometry.hpp"
#include "etacalc/moduli_dim.hpp"
#include "etacalc/power_series.hpp"
#include "etacalc/report.hpp"
#include "etacalc/resonance.hpp"
#include "etacalc/symmetric_form.hpp"
#include "etacalc/zeta_oracle.hpp"

namespace etacalc {

namespace {

using Rng = std::mt19937_64;

long long rand_in(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

long long rand_nonzero(Rng& rng, long long lo, long long hi) {
  long long v = 0;
  while (v == 0) v = rand_in(rng, lo, hi);
  return v;
}

Rational rand_rational(Rng& rng) {
  return Rational(Int(rand_in(rng, -60, 60)), Int(rand_in(rng, 1, 24)));
}

double rand_real(Rng& rng) {
  return std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
}

std::string expect_eq(const Rational& got, const Rational& want,
                      const char* what) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << ": got " << got.str() << ", want " << want.str();
  return os.str();
}

std::string expect_eq_poly(const RadiusPolynomial& got,
                           const RadiusPolynomial& want, const char* what) {
  if (got == want) return "";
  return std::string(what) + ": got " + got.str() + ", want " + want.str();
}

// Random irreducible asymptote with every validity constraint satisfied.
MonopoleIrreducible rand_irreducible(Rng& rng) {
  MonopoleIrreducible irr;
  long long n = rand_in(rng, -3, -1);
  long long h_star = rand_in(rng, -n, -n + 2);  // keeps h_L = h* + n >= 0
  long long g = rand_in(rng, h_star, h_star + 3);
  irr.end.genus = g;
  irr.end.degree = rand_nonzero(rng, -10, 10);
  irr.end.radius_sq = Rational(Int(rand_in(rng, 1, 9)), Int(4));
  irr.line = CoupledLine{n, h_star};
  return irr;
}

MonopoleReducible rand_reducible(Rng& rng) {
  MonopoleReducible red;
  for (;;) {
    long long l = rand_nonzero(rng, -9, 9);
    long long g = rand_in(rng, 1, 8);
    long long abs_l = l < 0 ? -l : l;
    if ((g - 1) % abs_l == 0) continue;
    red.end.genus = g;
    red.end.degree = l;
    red.kappa = rand_in(rng, -5, 5);
    return red;
  }
}

FourManifoldData rand_irreducible_manifold(Rng& rng, int max_ends) {
  FourManifoldData man;
  man.chi_hat = rand_in(rng, -4, 4);
  man.sign_hat = rand_in(rng, -4, 4);
  man.c2_integral = rand_rational(rng);
  int ends = static_cast<int>(rand_in(rng, 1, max_ends));
  for (int i = 0; i < ends; ++i) man.ends.emplace_back(rand_irreducible(rng));
  return man;
}

TangentVector<double> rand_tangent(Rng& rng) {
  TangentVector<double> xi;
  xi.psi_minus = {rand_real(rng), rand_real(rng)};
  xi.psi_plus = {rand_real(rng), rand_real(rng)};
  xi.a0 = rand_real(rng);
  xi.omega = {rand_real(rng), rand_real(rng)};
  xi.f = rand_real(rng);
  return xi;
}

Sqrt2Ext rand_sqrt2(Rng& rng) {
  return Sqrt2Ext(Rational(Int(rand_in(rng, -9, 9)), Int(rand_in(rng, 1, 5))),
                  Rational(Int(rand_in(rng, -9, 9)), Int(rand_in(rng, 1, 5))));
}

Cx<Sqrt2Ext> rand_cx_sqrt2(Rng& rng) {
  return {rand_sqrt2(rng), rand_sqrt2(rng)};
}

// Applies the elementary congruence transformation E^T A E for the
// operation encoded by (kind, i, j, k).
void congruence_op(std::vector<std::vector<Rational>>& a, int kind,
                   std::size_t i, std::size_t j, const Rational& k) {
  std::size_t n = a.size();
  if (kind == 0 && i != j) {  // col_i += k col_j, then row_i += k row_j
    for (std::size_t t = 0; t < n; ++t) a[t][i] += k * a[t][j];
    for (std::size_t t = 0; t < n; ++t) a[i][t] += k * a[j][t];
  } else if (kind == 1 && i != j) {  // swap basis vectors i and j
    for (std::size_t t = 0; t < n; ++t) std::swap(a[t][i], a[t][j]);
    for (std::size_t t = 0; t < n; ++t) std::swap(a[i][t], a[j][t]);
  } else {  // negate basis vector i
    for (std::size_t t = 0; t < n; ++t) a[t][i] = -a[t][i];
    for (std::size_t t = 0; t < n; ++t) a[i][t] = -a[i][t];
  }
}

class Harness {
 public:
  explicit Harness(std::uint64_t seed) : rng_(seed) {}

  void check(const std::string& name,
             const std::function<std::string(Rng&)>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body(rng_);
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  Rng rng_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  Harness h(seed);

  h.check("rational-axioms", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      Rational a = rand_rational(rng);
      Rational b = rand_rational(rng);
      Rational c = rand_rational(rng);
      if ((a + b) + c != a + (b + c)) return "associativity failed";
      if (!a.is_zero() && a * a.inverse() != Rational(1))
        return "inverse failed for " + a.str();
      Int k(rand_nonzero(rng, -20, 20));
      Rational scaled(a.num() * k, a.den() * k);
      if (scaled != a) return "canonicalization failed for " + a.str();
    }
    return "";
  });

  h.check("series-division-roundtrip", [](Rng& rng) -> std::string {
    for (int i = 0; i < 50; ++i) {
      PowerSeries q(8), d(8);
      for (std::size_t t = 0; t <= 8; ++t) {
        q.set_coeff(t, rand_rational(rng));
        d.set_coeff(t, rand_rational(rng));
      }
      while (d.coeff(0).is_zero()) d.set_coeff(0, rand_rational(rng));
      PowerSeries back = series_div_valuation(q * d, d);
      if (!(back == q))
        return "q*d/d != q: " + back.str() + " vs " + q.str();
    }
    return "";
  });

  h.check("bc-density-structure", [](Rng&) -> std::string {
    PowerSeries f = bc_density(13);
    for (std::size_t d = 0; d <= 13; d += 2)
      if (!f.coeff(d).is_zero())
        return "even coefficient c^" + std::to_string(d) + " nonzero";
    std::string e = expect_eq(f.coeff(1), Rational(-1, 12), "[c^1]");
    if (!e.empty()) return e;
    return expect_eq(f.coeff(3), Rational(1, 720), "[c^3]");
  });

  h.check("ahat-parity", [](Rng&) -> std::string {
    PowerSeries a = ahat_series(12);
    for (std::size_t d = 1; d <= 12; d += 2)
      if (!a.coeff(d).is_zero())
        return "odd coefficient x^" + std::to_string(d) + " nonzero";
    std::string e = expect_eq(a.coeff(0), Rational(1), "[x^0]");
    if (!e.empty()) return e;
    return expect_eq(a.coeff(2), Rational(-1, 24), "[x^2]");
  });

  h.check("signature-congruence-invariance", [](Rng& rng) -> std::string {
    for (int iter = 0; iter < 25; ++iter) {
      std::size_t n = static_cast<std::size_t>(rand_in(rng, 1, 6));
      std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Rational v = rand_rational(rng);
          a[i][j] = v;
          a[j][i] = v;
        }
      SignatureTriple before = SymmetricForm(a).signature();
      int ops = static_cast<int>(3 * n);
      for (int t = 0; t < ops; ++t) {
        int kind = static_cast<int>(rand_in(rng, 0, 2));
        std::size_t i = static_cast<std::size_t>(rand_in(rng, 0, n - 1));
        std::size_t j = static_cast<std::size_t>(rand_in(rng, 0, n - 1));
        congruence_op(a, kind, i, j, Rational(rand_in(rng, -3, 3)));
      }
      SignatureTriple after = SymmetricForm(a).signature();
      if (!(before == after)) return "signature changed under congruence";
    }
    return "";
  });

  h.check("zeta-eta-reflection", [](Rng&) -> std::string {
    for (int i = 1; i <= 19; ++i) {
      double a = i / 20.0;
      double eta = eta_arithmetic_progression(a);
      double mirror = eta_arithmetic_progression(1.0 - a);
      if (std::abs(eta + mirror) > 1e-8)
        return "reflection broke at a = " + std::to_string(a);
      if (std::abs(eta - (1.0 - 2.0 * a)) > 1e-9)
        return "closed form broke at a = " + std::to_string(a);
    }
    return "";
  });

  h.check("riemann-roch-bookkeeping", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long deg = rand_in(rng, -10, 10);
      long long lo = deg < 0 ? -deg : 0;
      long long h_star = rand_in(rng, lo, lo + 10);
      CoupledLine line = validate_coupled(deg, h_star);
      if (line.h_L() - line.h_L_star != deg) return "h_L - h_L* != deg";
      CircleBundleEnd end{rand_in(rng, 0, 8), rand_nonzero(rng, -20, 20),
                          std::nullopt};
      if ((end.epsilon() == 1) != (end.degree > 0))
        return "epsilon disagrees with sign";
    }
    return "";
  });

  h.check("residue-reduction-roundtrip", [](Rng& rng) -> std::string {
    for (int i = 0; i < 1000; ++i) {
      long long k = rand_in(rng, -500, 500);
      long long l = rand_nonzero(rng, -40, 40);
      auto [canon, shift] = reduce_residue(k, l);
      long long abs_l = l < 0 ? -l : l;
      if (canon < 0 || canon >= abs_l) return "canonical residue out of range";
      if (canon + shift * abs_l != k) return "reduction does not round-trip";
    }
    return "";
  });

  h.check("moduli-dim-two-forms", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long g = rand_in(rng, 1, 12);
      long long n = rand_in(rng, -8, -1);
      if (moduli_dim(g, n) != 2 * (g - 1 - (-n)))
        return "the two closed forms disagree";
    }
    return "";
  });

  h.check("spin-pipeline-closed-form", [](Rng&) -> std::string {
    for (long long l = -20; l <= 20; ++l) {
      if (l == 0) continue;
      for (long long g = 0; g <= 10; ++g)
        for (long long h = 0; h <= 10; ++h) {
          RadiusPolynomial lhs =
              xi_spin_LC(l, g, h).value +
              RadiusPolynomial(Rational(sf_adiabatic_deformation(l, h))) +
              second_transgression(l, g);
          RadiusPolynomial rhs(Rational(l, 12) + Rational(h));
          std::string e = expect_eq_poly(lhs, rhs, "spin pipeline");
          if (!e.empty()) return e;
          XiValue adiabatic = xi_spin_adiabatic(l, g, h);
          if (adiabatic.value.degree() > 0) return "xi not r-independent";
          if (adiabatic.kernel_dim != 2 * h) return "kernel dim != 2h";
          e = expect_eq_poly(adiabatic.eta(), RadiusPolynomial(Rational(l, 6)),
                             "eta = l/6");
          if (!e.empty()) return e;
        }
    }
    return "";
  });

  h.check("spin-adiabatic-limit-consistency", [](Rng& rng) -> std::string {
    for (int i = 0; i < 100; ++i) {
      long long l = rand_nonzero(rng, -20, 20);
      long long g = rand_in(rng, 0, 10);
      long long h = rand_in(rng, 0, 10);
      Rational at_zero = xi_spin_LC(l, g, h).value.evaluate(Rational(0));
      std::string e = expect_eq(Rational(2) * at_zero,
                                adiabatic_limit_eta(l, h), "2*xi at rho=0");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("spin-series-route", [](Rng& rng) -> std::string {
    for (std::size_t T = 1; T <= 10; ++T)
      for (int i = 0; i < 5; ++i) {
        long long l = rand_nonzero(rng, -20, 20);
        long long h = rand_in(rng, 0, 10);
        std::string e = expect_eq(adiabatic_limit_via_series(l, h, T),
                                  adiabatic_limit_eta(l, h), "series route");
        if (!e.empty()) return e;
      }
    return "";
  });

  h.check("coupled-pipeline-closed-form", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long l = rand_nonzero(rng, -20, 20);
      long long g = rand_in(rng, 0, 8);
      long long deg = rand_in(rng, -8, 8);
      long long lo = deg < 0 ? -deg : 0;
      CoupledLine line{deg, rand_in(rng, lo, lo + 6)};
      long long hsum = line.h_L_star + line.h_L();
      RadiusPolynomial lhs =
          xi_coupled_LC(l, g, line).value +
          RadiusPolynomial(Rational(coupled_sf(l, line))) +
          second_transgression(l, g);
      RadiusPolynomial rhs(Rational(l, 12) + Rational(hsum, 2));
      std::string e = expect_eq_poly(lhs, rhs, "coupled pipeline");
      if (!e.empty()) return e;
      XiValue adiabatic = xi_coupled_adiabatic(l, g, line);
      if (adiabatic.kernel_dim != hsum) return "kernel dim != h* + h_L";
      e = expect_eq_poly(adiabatic.eta(), RadiusPolynomial(Rational(l, 6)),
                         "eta = l/6");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("flat-coupling-pipeline", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long l = rand_nonzero(rng, -20, 20);
      long long abs_l = l < 0 ? -l : l;
      if (abs_l < 2) {
        --i;
        continue;
      }
      long long k = rand_in(rng, 1, abs_l - 1);
      long long g = rand_in(rng, 0, 8);
      CoupledLine line{k, rand_in(rng, 0, 6)};
      Rational lhs = xi_coupled_adiabatic(l, g, line).value.constant_term() +
                     Rational(flat_coupling_sf(l, line)) +
                     third_transgression(k, l);
      std::string e = expect_eq(lhs, xi_flat(l, k), "flat pipeline");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("residue-shift-integrality", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long l = rand_nonzero(rng, -30, 30);
      long long abs_l = l < 0 ? -l : l;
      long long k = rand_in(rng, -100, 100);
      Rational step = xi_flat_formal(l, k + abs_l) - xi_flat_formal(l, k);
      if (!step.is_integer())
        return "shift by |l| changed the fractional part";
      auto [canon, shift] = reduce_residue(k, l);
      (void)shift;
      Rational drop = xi_flat_formal(l, k) - xi_flat_formal(l, canon);
      if (!drop.is_integer())
        return "fractional part depends on more than k mod |l|";
    }
    return "";
  });

  h.check("flat-eta-doubling", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long l = rand_nonzero(rng, -20, 20);
      long long abs_l = l < 0 ? -l : l;
      if (abs_l < 2) {
        --i;
        continue;
      }
      long long k = rand_in(rng, 1, abs_l - 1);
      std::string e = expect_eq(eta_flat(l, k), Rational(2) * xi_flat(l, k),
                                "eta = 2 xi");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("clifford-relations", [](Rng& rng) -> std::string {
    using F = Sqrt2Ext;
    for (int i = 0; i < 100; ++i) {
      F u0 = rand_sqrt2(rng), u1 = rand_sqrt2(rng), u2 = rand_sqrt2(rng);
      F v0 = rand_sqrt2(rng), v1 = rand_sqrt2(rng), v2 = rand_sqrt2(rng);
      Mat2<F> cu = clifford_block(u0, u1, u2);
      Mat2<F> cv = clifford_block(v0, v1, v2);
      F inner = u0 * v0 + u1 * v1 + u2 * v2;
      Mat2<F> lhs = cu * cv + cv * cu;
      Mat2<F> rhs = (F(0) - F(2)) * (inner * Mat2<F>::identity());
      if (!(lhs == rhs)) return "anticommutator relation failed";
    }
    Mat2<F> volume = clifford_block(F(1), F(0), F(0)) *
                     clifford_block(F(0), F(1), F(0)) *
                     clifford_block(F(0), F(0), F(1));
    Mat2<F> minus_id = (F(0) - F(1)) * Mat2<F>::identity();
    if (!(volume == minus_id)) return "volume element is not -Id";
    return "";
  });

  h.check("resonance-pairing-float", [](Rng& rng) -> std::string {
    for (int i = 0; i < 1000; ++i) {
      ResonanceInstance<double> inst{{rand_real(rng), rand_real(rng)}};
      if (inst.phi_plus.is_zero()) continue;
      TangentVector<double> xi = rand_tangent(rng);
      double lhs = model_pairing(perturbation_apply(inst, xi), xi);
      double rhs = resonance_pairing(inst, xi);
      if (std::abs(lhs - rhs) > 1e-12)
        return "pairing identity off by " + std::to_string(lhs - rhs);
    }
    return "";
  });

  h.check("resonance-pairing-exact", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      ResonanceInstance<Sqrt2Ext> inst{rand_cx_sqrt2(rng)};
      TangentVector<Sqrt2Ext> xi;
      xi.psi_minus = rand_cx_sqrt2(rng);
      xi.psi_plus = rand_cx_sqrt2(rng);
      xi.a0 = rand_sqrt2(rng);
      xi.omega = rand_cx_sqrt2(rng);
      xi.f = rand_sqrt2(rng);
      Sqrt2Ext lhs = model_pairing(perturbation_apply(inst, xi), xi);
      Sqrt2Ext rhs = resonance_pairing(inst, xi);
      if (!(lhs == rhs)) return "exact pairing identity failed";
    }
    return "";
  });

  h.check("q1-signature", [](Rng&) -> std::string {
    for (long long d = 1; d <= 8; ++d) {
      SignatureTriple got = q1_gram(d).signature();
      SignatureTriple want{1, 1, static_cast<std::size_t>(2 * d - 1)};
      if (!(got == want)) return "q1 signature wrong at d=" + std::to_string(d);
    }
    return "";
  });

  h.check("q2-signature", [](Rng&) -> std::string {
    for (long long g = 0; g <= 8; ++g)
      for (long long m = 0; m <= g; ++m) {
        SignatureTriple got = q2_gram(g, m).signature();
        SignatureTriple want{static_cast<std::size_t>(2 * m),
                             static_cast<std::size_t>(2 * m),
                             static_cast<std::size_t>(2 * g - 2 * m)};
        if (!(got == want))
          return "q2 signature wrong at g=" + std::to_string(g) +
                 ", m=" + std::to_string(m);
      }
    return "";
  });

  h.check("spectral-flow-assembly", [](Rng&) -> std::string {
    for (long long l = -10; l <= 10; ++l) {
      if (l == 0) continue;
      for (long long m = 0; m <= 10; ++m) {
        if (-(1 + 2 * m) + degenerate_contribution(l) != sf_plus(l, m))
          return "assembled flow disagrees with closed form";
        if (sf_minus(l, m) != sf_plus(-l, m))
          return "sf_minus is not sf_plus with l flipped";
      }
    }
    return "";
  });

  h.check("kernel-count-decomposition", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      long long n = rand_in(rng, -6, -1);
      long long h_star = rand_in(rng, -n + 1, -n + 4);
      long long g = rand_in(rng, h_star, h_star + 4);
      long long h_L = h_star + n;  // >= 1 by construction
      auto [ker_deformed, ker_resonance] = ker_counts(g, n);
      if ((2 * h_L - 1) + (2 * g - 2 * h_star) != ker_resonance)
        return "q1/q2 kernel split does not add up";
      if (ker_deformed != 2 * (g - 1 + n))
        return "deformed kernel formula disagrees with moduli dim";
    }
    return "";
  });

  h.check("per-end-folding", [](Rng& rng) -> std::string {
    for (int i = 0; i < 300; ++i) {
      long long l = rand_nonzero(rng, -20, 20);
      long long n = rand_in(rng, -6, -1);
      long long h_star = rand_in(rng, -n, -n + 5);
      CoupledLine line{n, h_star};
      long long eps = l > 0 ? 1 : 0;
      long long lhs = line.h_L() + h_star + sf_plus(l, h_star);
      if (lhs != n - 1 - eps) return "folding identity failed";
    }
    return "";
  });

  h.check("dimension-two-route", [](Rng& rng) -> std::string {
    for (int i = 0; i < 300; ++i) {
      FourManifoldData man = rand_irreducible_manifold(rng, 4);
      DimensionReport rep = dim_v_irreducible(man);
      if (!rep.assembly_residual.is_zero()) return "nonzero residual";
      Rational via_index = ind_ow_irreducible(man);
      Rational via_betas = bulk_term(man);
      for (const auto& a : man.ends) {
        const auto& irr = std::get<MonopoleIrreducible>(a);
        via_index += Rational(moduli_dim(irr.end.genus, irr.line.deg));
        via_betas +=
            beta_irreducible(irr.end.genus, irr.end.degree, irr.line.deg);
      }
      std::string e = expect_eq(rep.dim_v, via_index, "index route");
      if (!e.empty()) return e;
      e = expect_eq(rep.dim_v, via_betas, "beta route");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("tunneling-two-route", [](Rng& rng) -> std::string {
    for (int i = 0; i < 500; ++i) {
      long long l = rand_nonzero(rng, -12, 12);
      long long g = rand_in(rng, 1, 8);
      long long n1 = rand_in(rng, -6, -1);
      long long n2 = rand_in(rng, -6, -1);
      Rational tau = tunneling_dim(l, g, n1, n2);
      Rational direct = transgression_c2(l, n1, n2) +
                        Rational(n1 + n2 + 2 * g - 2);
      std::string e = expect_eq(tau, direct, "tunneling");
      if (!e.empty()) return e;
      if (n1 == n2 && tau != Rational(2 * n1 + 2 * g - 2))
        return "symmetric tunneling value wrong";
    }
    return "";
  });

  h.check("reducible-tunneling-route", [](Rng& rng) -> std::string {
    for (int i = 0; i < 300; ++i) {
      MonopoleReducible red = rand_reducible(rng);
      long long l = red.end.degree;
      long long g = red.end.genus;
      long long n = rand_in(rng, -6, -1);
      long long eps = l > 0 ? 1 : 0;
      Rational tau = tunneling_from_reducible(l, g, red.kappa, n);
      Rational direct = transgression_c2(l, red.kappa, n) +
                        Rational(2 * g - 2 + n + eps);
      std::string e = expect_eq(tau, direct, "reducible tunneling");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("product-manifold-tunneling", [](Rng& rng) -> std::string {
    for (int i = 0; i < 100; ++i) {
      MonopoleIrreducible left = rand_irreducible(rng);
      // The right end shares the base surface, so its line bundle must be
      // drawn against the same genus to stay within the Clifford bound.
      MonopoleIrreducible right = left;
      right.end.degree = -left.end.degree;
      long long g = left.end.genus;
      long long cap = g < 3 ? g : 3;
      right.line.deg = -rand_in(rng, 1, cap);
      right.line.h_L_star = rand_in(rng, -right.line.deg, g);
      long long l = right.end.degree;  // degree at +infinity
      FourManifoldData man;
      man.chi_hat = 0;
      man.sign_hat = 0;
      man.c2_integral =
          Rational(4) * transgression_c2(l, left.line.deg, right.line.deg);
      man.ends.emplace_back(left);
      man.ends.emplace_back(right);
      Rational dim = dim_v_irreducible(man).dim_v;
      Rational tau =
          tunneling_dim(l, left.end.genus, left.line.deg, right.line.deg);
      std::string e = expect_eq(dim, tau, "product manifold");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("signature-eta-telescoping", [](Rng& rng) -> std::string {
    for (int i = 0; i < 100; ++i) {
      int ends = static_cast<int>(rand_in(rng, 1, 5));
      RadiusPolynomial sum;
      Rational constant;
      std::vector<long long> degrees;
      for (int t = 0; t < ends; ++t) {
        long long l = rand_nonzero(rng, -10, 10);
        long long g = rand_in(rng, 0, 8);
        degrees.push_back(l);
        sum += signature_eta_end(l, g) + vd3_transgression(l, g);
        constant += Rational(l, 3) - Rational(sign_of(l));
      }
      std::string e =
          expect_eq_poly(sum, RadiusPolynomial(constant), "telescoping");
      if (!e.empty()) return e;
      long long sign_hat = rand_in(rng, -3, 3);
      e = expect_eq(l_genus_integral(sign_hat, degrees),
                    Rational(sign_hat) + constant, "l-genus integral");
      if (!e.empty()) return e;
    }
    return "";
  });

  h.check("reducible-dimension-consistency", [](Rng& rng) -> std::string {
    for (int i = 0; i < 200; ++i) {
      FourManifoldData man;
      man.chi_hat = rand_in(rng, -4, 4);
      man.sign_hat = rand_in(rng, -4, 4);
      man.c2_integral = rand_rational(rng);
      MonopoleReducible red = rand_reducible(rng);
      man.ends.emplace_back(red);
      DimensionReport rep = dim_v_reducible(man);
      Rational want = bulk_term(man) + beta_reducible(red.end.genus,
                                                      red.end.degree,
                                                      red.kappa);
      std::string e = expect_eq(rep.dim_v, want, "dim_v = bulk + beta");
      if (!e.empty()) return e;
      if (!rep.audit) return "missing audit block";
      Rational via_audit =
          rep.audit->ind_vd12 + Rational(rep.audit->limit_set_adjustment);
      e = expect_eq(rep.dim_v, via_audit, "audit route");
      if (!e.empty()) return e;
      auto [canon, shift] = reduce_residue(red.kappa, red.end.degree);
      (void)shift;
      if (canon != 0) {
        e = expect_eq(eta_flat(red.end.degree, canon),
                      Rational(2) * xi_flat(red.end.degree, canon),
                      "flat eta feed");
        if (!e.empty()) return e;
      }
    }
    return "";
  });

  h.check("weighted-flow-vanishing", [](Rng& rng) -> std::string {
    if (sf_h1_to_ow() != 0) return "unweighted flow nonzero";
    for (int i = 0; i < 20; ++i) {
      Rational w(Int(rand_in(rng, 1, 50)), Int(rand_in(rng, 1, 50)));
      if (sf_h1_to_ow(w) != 0) return "weighted flow nonzero at w = " + w.str();
    }
    return "";
  });

  h.check("report-round-trip", [](Rng& rng) -> std::string {
    for (int i = 0; i < 100; ++i) {
      DimensionReport rep;
      if (i % 3 == 0) {
        FourManifoldData man;
        man.chi_hat = rand_in(rng, -4, 4);
        man.sign_hat = rand_in(rng, -4, 4);
        man.c2_integral = rand_rational(rng);
        man.ends.emplace_back(rand_reducible(rng));
        rep = dim_v_reducible(man);
      } else {
        rep = dim_v_irreducible(rand_irreducible_manifold(rng, 4));
      }
      std::string once = dump_json(report_to_json(rep));
      DimensionReport parsed = report_from_json(OrderedJson::parse(once));
      std::string twice = dump_json(report_to_json(parsed));
      if (once != twice) return "serialization is not byte-stable";
    }
    return "";
  });

  return h.take();
}

}  // namespace etacalc
