#include "etacalc/moduli_dim.hpp"

#include <string>
#include <variant>

#include "etacalc/errors.hpp"
#include "etacalc/resonance.hpp"

namespace etacalc {

namespace {

void require_nonzero_degree(long long l, const char* who) {
  if (l == 0) throw TrivialBundle(std::string(who) + " requires l != 0");
}

void require_genus(long long g, const char* who) {
  if (g < 1)
    throw InvalidModuli(std::string(who) + " requires g >= 1, got g = " +
                        std::to_string(g));
}

void require_negative(long long n, const char* who) {
  if (n >= 0)
    throw UnsupportedSign(std::string(who) + " requires n < 0, got n = " +
                          std::to_string(n));
}

bool degenerate_reducible(long long g, long long l) {
  long long m = l < 0 ? -l : l;
  return (g - 1) % m == 0;
}

// Per-end index contribution (the part subtracted from the bulk term).
Rational irreducible_index_term(const MonopoleIrreducible& irr) {
  long long l = irr.end.degree;
  long long g = irr.end.genus;
  long long ker = irr.line.h_L() + irr.line.h_L_star;
  Rational out(ker + sf_plus(l, irr.line.h_L_star));
  out += Rational(2 * g + 1, 2);
  out += Rational(l - sign_of(l), 4);
  return out;
}

Rational reducible_index_term(const MonopoleReducible& red) {
  long long l = red.end.degree;
  long long g = red.end.genus;
  Rational out(Rational(2 * g - 1, 2));
  out += Rational(l - sign_of(l), 4);
  out += Rational(red.kappa) * Rational(red.kappa) / Rational(l);
  out -= Rational(red.kappa * sign_of(l));
  return out;
}

}  // namespace

Rational beta_irreducible(long long g, long long l, long long n) {
  require_nonzero_degree(l, "beta_irreducible");
  require_negative(n, "beta_irreducible");
  require_genus(g, "beta_irreducible");
  long long eps = l > 0 ? 1 : 0;
  Rational out(eps + n - 1);
  out += Rational(2 * g - 1, 2);
  out -= Rational(l - sign_of(l), 4);
  return out;
}

Rational beta_reducible_raw(long long g, long long l, long long kappa) {
  require_nonzero_degree(l, "beta_reducible");
  require_genus(g, "beta_reducible");
  Rational out(Rational(2 * g - 1, 2));
  out -= Rational(l - sign_of(l), 4);
  out -= Rational(kappa) * Rational(kappa) / Rational(l);
  out += Rational(kappa * sign_of(l));
  return out;
}

Rational beta_reducible(long long g, long long l, long long kappa) {
  require_nonzero_degree(l, "beta_reducible");
  require_genus(g, "beta_reducible");
  if (degenerate_reducible(g, l))
    throw DegenerateReducible("g - 1 = " + std::to_string(g - 1) +
                              " is divisible by |l| = " +
                              std::to_string(l < 0 ? -l : l));
  return beta_reducible_raw(g, l, kappa);
}

Rational bulk_term(const FourManifoldData& man) {
  return man.c2_integral / Rational(4) -
         Rational(2 * man.chi_hat + 3 * man.sign_hat, 4);
}

Rational ind_ow_irreducible(const FourManifoldData& man) {
  man.validate();
  Rational ind = bulk_term(man);
  for (const auto& a : man.ends) {
    const auto* irr = std::get_if<MonopoleIrreducible>(&a);
    if (!irr)
      throw ReducibleEndPresent(
          "ind_ow_irreducible requires all asymptotes irreducible");
    require_genus(irr->end.genus, "ind_ow_irreducible");
    ind -= irreducible_index_term(*irr);
  }
  return ind;
}

DimensionReport dim_v_irreducible(const FourManifoldData& man) {
  DimensionReport report;
  report.ind_ow = ind_ow_irreducible(man);
  report.bulk = bulk_term(man);

  Rational via_index = report.ind_ow;
  Rational via_betas = report.bulk;
  for (const auto& a : man.ends) {
    const auto& irr = std::get<MonopoleIrreducible>(a);
    via_index += Rational(moduli_dim(irr.end.genus, irr.line.deg));
    Rational beta =
        beta_irreducible(irr.end.genus, irr.end.degree, irr.line.deg);
    report.betas.push_back(beta);
    via_betas += beta;
  }
  report.dim_v = via_index;
  report.assembly_residual = via_index - via_betas;
  if (!report.assembly_residual.is_zero())
    throw AssemblyMismatch("index route and beta route disagree: " +
                           via_index.str() + " vs " + via_betas.str());
  return report;
}

DimensionReport dim_v_reducible(const FourManifoldData& man) {
  man.validate();
  if (man.ends.size() != 1)
    throw MultipleEndsUnsupported(
        "dim_v_reducible handles exactly one end, got " +
        std::to_string(man.ends.size()));
  const auto* red = std::get_if<MonopoleReducible>(&man.ends.front());
  if (!red)
    throw DomainError("dim_v_reducible requires a reducible asymptote");
  long long g = red->end.genus;
  require_genus(g, "dim_v_reducible");

  DimensionReport report;
  report.bulk = bulk_term(man);
  Rational beta = beta_reducible(g, red->end.degree, red->kappa);
  report.betas.push_back(beta);
  Rational via_beta = report.bulk + beta;

  ReducibleAudit audit;
  audit.ind_vd12 = report.bulk - reducible_index_term(*red);
  audit.limit_set_adjustment = 2 * g - 1;
  Rational via_index = audit.ind_vd12 + Rational(audit.limit_set_adjustment);

  report.ind_ow = audit.ind_vd12;
  report.dim_v = via_beta;
  report.assembly_residual = via_beta - via_index;
  report.audit = audit;
  if (!report.assembly_residual.is_zero())
    throw AssemblyMismatch("beta route and index route disagree: " +
                           via_beta.str() + " vs " + via_index.str());
  return report;
}

DimensionReport dim_v_manifold(const FourManifoldData& man,
                               bool assume_beta_additivity) {
  man.validate();
  std::size_t reducibles = 0;
  for (const auto& a : man.ends)
    if (std::holds_alternative<MonopoleReducible>(a)) ++reducibles;

  if (reducibles == 0) return dim_v_irreducible(man);
  if (reducibles == 1 && man.ends.size() == 1) return dim_v_reducible(man);
  if (!assume_beta_additivity)
    throw MultipleEndsUnsupported(
        "manifest mixes reducible and irreducible ends; pass "
        "--assume-beta-additivity to assemble via beta additivity");

  DimensionReport report;
  report.bulk = bulk_term(man);
  Rational ind = report.bulk;
  Rational via_index_adjust;
  Rational via_betas = report.bulk;
  for (const auto& a : man.ends) {
    const auto& end = asymptote_end(a);
    require_genus(end.genus, "dim_v_manifold");
    if (const auto* irr = std::get_if<MonopoleIrreducible>(&a)) {
      ind -= irreducible_index_term(*irr);
      via_index_adjust += Rational(moduli_dim(end.genus, irr->line.deg));
      report.betas.push_back(
          beta_irreducible(end.genus, end.degree, irr->line.deg));
    } else {
      const auto& red = std::get<MonopoleReducible>(a);
      ind -= reducible_index_term(red);
      via_index_adjust += Rational(2 * end.genus - 1);
      report.betas.push_back(
          beta_reducible(end.genus, end.degree, red.kappa));
    }
    via_betas += report.betas.back();
  }
  report.ind_ow = ind;
  report.dim_v = via_betas;
  report.assembly_residual = via_betas - (ind + via_index_adjust);
  if (!report.assembly_residual.is_zero())
    throw AssemblyMismatch("beta route and index route disagree: " +
                           via_betas.str() + " vs " +
                           (ind + via_index_adjust).str());
  return report;
}

RadiusPolynomial signature_eta_end(long long l, long long g) {
  require_nonzero_degree(l, "signature_eta_end");
  long long chi = 2 - 2 * g;
  RadiusPolynomial out;
  out = out + RadiusPolynomial(Rational(l, 3) - Rational(sign_of(l)));
  out = out + Rational(2 * l * chi, 3) * RadiusPolynomial::rho(1);
  out = out + (Rational(-2, 3) * Rational(l) * Rational(l) * Rational(l)) *
                  RadiusPolynomial::rho(2);
  return out;
}

RadiusPolynomial vd3_transgression(long long l, long long g) {
  require_nonzero_degree(l, "vd3_transgression");
  long long chi = 2 - 2 * g;
  RadiusPolynomial out;
  out = out + Rational(-2 * l * chi, 3) * RadiusPolynomial::rho(1);
  out = out + (Rational(2, 3) * Rational(l) * Rational(l) * Rational(l)) *
                  RadiusPolynomial::rho(2);
  return out;
}

Rational l_genus_integral(long long sign_hat,
                          const std::vector<long long>& degrees) {
  Rational total(sign_hat);
  for (long long l : degrees) {
    require_nonzero_degree(l, "l_genus_integral");
    Rational constant = Rational(l, 3) - Rational(sign_of(l));
    // The rho-dependence of each end's signature eta must telescope away
    // against the transgression, for any genus.
    for (long long g : {0LL, 1LL, 2LL}) {
      RadiusPolynomial folded =
          signature_eta_end(l, g) + vd3_transgression(l, g);
      if (!(folded == RadiusPolynomial(constant)))
        throw AssemblyMismatch(
            "signature eta of an end failed to telescope: " + folded.str());
    }
    total += constant;
  }
  return total;
}

Rational transgression_c2(long long l, long long n1, long long n2) {
  require_nonzero_degree(l, "transgression_c2");
  return (Rational(n1) * Rational(n1) - Rational(n2) * Rational(n2)) /
         Rational(l);
}

Rational tunneling_dim(long long l, long long g, long long n1, long long n2) {
  require_nonzero_degree(l, "tunneling_dim");
  require_genus(g, "tunneling_dim");
  require_negative(n1, "tunneling_dim");
  require_negative(n2, "tunneling_dim");
  Rational direct = transgression_c2(l, n1, n2) +
                    Rational(n1 + n2 + 2 * g - 2);
  // Assembly route: relative c2 + boundary contribution at -infinity with
  // the orientation reversed (degree -l) + boundary contribution at
  // +infinity.
  Rational assembled = transgression_c2(l, n1, n2) +
                       beta_irreducible(g, -l, n1) +
                       beta_irreducible(g, l, n2);
  if (!(direct == assembled))
    throw AssemblyMismatch("tunneling routes disagree: " + direct.str() +
                           " vs " + assembled.str());
  return direct;
}

Rational tunneling_from_reducible(long long l, long long g, long long kappa,
                                  long long n) {
  require_nonzero_degree(l, "tunneling_from_reducible");
  require_genus(g, "tunneling_from_reducible");
  require_negative(n, "tunneling_from_reducible");
  if (degenerate_reducible(g, l))
    throw DegenerateReducible("g - 1 = " + std::to_string(g - 1) +
                              " is divisible by |l| = " +
                              std::to_string(l < 0 ? -l : l));
  long long eps = l > 0 ? 1 : 0;
  Rational direct =
      transgression_c2(l, kappa, n) + Rational(2 * g - 2 + n + eps);
  // Orientation-reversed reducible boundary contribution: transgression and
  // kappa-terms flip sign, leaving the kappa-free part with +(l - sign l)/4.
  Rational beta_rev = Rational(2 * g - 1, 2) + Rational(l - sign_of(l), 4);
  Rational assembled = transgression_c2(l, kappa, n) + beta_rev +
                       beta_irreducible(g, l, n);
  if (!(direct == assembled))
    throw AssemblyMismatch("tunneling routes disagree: " + direct.str() +
                           " vs " + assembled.str());
  return direct;
}

long long sf_h1_to_ow() { return 0; }

long long sf_h1_to_ow(const Rational& weight) {
  if (weight.sign() <= 0)
    throw DomainError("spectral-flow weight must be positive");
  return sf_h1_to_ow();
}

}  // namespace etacalc
