#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "etacalc/eta_coupled.hpp"
#include "etacalc/eta_spin.hpp"
#include "etacalc/geometry.hpp"
#include "etacalc/moduli_dim.hpp"
#include "etacalc/power_series.hpp"
#include "etacalc/report.hpp"
#include "etacalc/resonance.hpp"
#include "etacalc/verify.hpp"

namespace {

using namespace etacalc;

struct CommonOpts {
  std::string format = "table";
  std::size_t truncation = 8;
  std::uint64_t seed = 0;
  bool strict_integer = false;
  bool assume_beta_additivity = false;
  std::string input_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--truncation", o.truncation, "Series truncation order")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for randomized sweeps")
      ->capture_default_str();
  cmd->add_flag("--strict-integer", o.strict_integer,
                "Warn when a virtual dimension is not an integer");
  cmd->add_flag("--assume-beta-additivity", o.assume_beta_additivity,
                "Assemble mixed multi-end manifests by beta additivity");
  if (with_input)
    cmd->add_option("input", o.input_path,
                    "Manifest file (reads standard input when omitted)");
}

std::string slurp_input(const CommonOpts& o) {
  if (!o.input_path.empty()) {
    std::ifstream in(o.input_path);
    if (!in) throw SchemaError("cannot open manifest file " + o.input_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

void warn_strict_integer(const CommonOpts& o, const Rational& dim_v) {
  if (o.strict_integer && !dim_v.is_integer())
    std::cerr << "warning: dim_v = " << dim_v.str()
              << " is not an integer\n";
}

std::string rho_str(const CircleBundleEnd& end) {
  return end.radius_sq ? end.radius_sq->str() : "symbolic";
}

OrderedJson end_common_json(const CircleBundleEnd& end) {
  OrderedJson j;
  j["genus"] = end.genus;
  j["degree"] = end.degree;
  j["chi"] = end.chi();
  j["epsilon"] = end.epsilon();
  j["rho"] = rho_str(end);
  j["eta_spin"] = rational_to_json(Rational(end.degree, 6));
  j["signature_eta"] =
      polynomial_to_json(signature_eta_end(end.degree, end.genus));
  if (end.radius_sq)
    j["signature_eta_at_rho"] = rational_to_json(
        signature_eta_end(end.degree, end.genus).evaluate(*end.radius_sq));
  j["transgression_1"] =
      polynomial_to_json(first_transgression(end.degree, end.genus));
  return j;
}

int run_invariants(const CommonOpts& o) {
  FourManifoldData man = parse_manifest(slurp_input(o));
  std::vector<long long> degrees;
  for (const auto& a : man.ends) degrees.push_back(asymptote_end(a).degree);

  OrderedJson out;
  out["manifold"] = OrderedJson{
      {"chi", man.chi_hat},
      {"sign", man.sign_hat},
      {"c2", rational_to_json(man.c2_integral)},
      {"bulk", rational_to_json(bulk_term(man))},
      {"l_genus_integral",
       rational_to_json(l_genus_integral(man.sign_hat, degrees))}};
  out["ends"] = OrderedJson::array();

  for (const auto& a : man.ends) {
    const CircleBundleEnd& end = asymptote_end(a);
    OrderedJson je = end_common_json(end);
    if (const auto* irr = std::get_if<MonopoleIrreducible>(&a)) {
      je["type"] = "irreducible";
      je["n"] = irr->line.deg;
      je["h_star"] = irr->line.h_L_star;
      je["h_L"] = irr->line.h_L();
      XiValue lc = xi_coupled_LC(end.degree, end.genus, irr->line);
      XiValue ad = xi_coupled_adiabatic(end.degree, end.genus, irr->line);
      je["xi_coupled_LC"] = polynomial_to_json(lc.value);
      je["xi_coupled"] = rational_to_json(ad.value.constant_term());
      je["kernel_dim"] = ad.kernel_dim;
      je["eta_coupled"] = rational_to_json(
          ad.eta().constant_term());
      je["coupled_sf"] = coupled_sf(end.degree, irr->line);
      je["sf_plus"] = sf_plus(end.degree, irr->line.h_L_star);
      je["sf_minus"] = sf_minus(end.degree, irr->line.h_L_star);
      je["beta"] = rational_to_json(
          beta_irreducible(end.genus, end.degree, irr->line.deg));
      je["moduli_dim"] = moduli_dim(end.genus, irr->line.deg);
    } else {
      const auto& red = std::get<MonopoleReducible>(a);
      je["type"] = "reducible";
      auto [canon, shift] = reduce_residue(red.kappa, end.degree);
      je["kappa"] = red.kappa;
      je["kappa_canonical"] = canon;
      je["shift"] = shift;
      je["beta"] =
          rational_to_json(beta_reducible(end.genus, end.degree, red.kappa));
      if (canon == 0) {
        je["flat_coupling"] = "trivial";
      } else {
        je["xi_flat"] = rational_to_json(xi_flat(end.degree, canon));
        je["eta_flat"] = rational_to_json(eta_flat(end.degree, canon));
        je["transgression_3"] =
            rational_to_json(third_transgression(canon, end.degree));
      }
    }
    out["ends"].push_back(std::move(je));
  }

  if (o.format == "json") {
    std::cout << dump_json(out);
    return 0;
  }

  TableBuilder t;
  t.section("manifold");
  t.row("chi", man.chi_hat);
  t.row("sign", man.sign_hat);
  t.row("c2", man.c2_integral);
  t.row("bulk", bulk_term(man));
  t.row("l_genus_integral", l_genus_integral(man.sign_hat, degrees));
  std::size_t idx = 0;
  for (const auto& a : man.ends) {
    const CircleBundleEnd& end = asymptote_end(a);
    bool reducible = std::holds_alternative<MonopoleReducible>(a);
    t.section("end " + std::to_string(idx++) +
              (reducible ? " (reducible)" : " (irreducible)"));
    t.row("genus", end.genus);
    t.row("degree", end.degree);
    t.row("rho", rho_str(end));
    t.row("eta_spin", Rational(end.degree, 6));
    t.row("signature_eta", signature_eta_end(end.degree, end.genus));
    if (end.radius_sq)
      t.row("signature_eta_at_rho",
            signature_eta_end(end.degree, end.genus).evaluate(*end.radius_sq));
    t.row("transgression_1", first_transgression(end.degree, end.genus));
    if (const auto* irr = std::get_if<MonopoleIrreducible>(&a)) {
      t.row("n", irr->line.deg);
      t.row("h_star", irr->line.h_L_star);
      t.row("h_L", irr->line.h_L());
      XiValue ad = xi_coupled_adiabatic(end.degree, end.genus, irr->line);
      t.row("xi_coupled_LC",
            xi_coupled_LC(end.degree, end.genus, irr->line).value);
      t.row("xi_coupled", ad.value.constant_term());
      t.row("kernel_dim", ad.kernel_dim);
      t.row("eta_coupled", ad.eta().constant_term());
      t.row("coupled_sf", coupled_sf(end.degree, irr->line));
      t.row("sf_plus", sf_plus(end.degree, irr->line.h_L_star));
      t.row("sf_minus", sf_minus(end.degree, irr->line.h_L_star));
      t.row("beta", beta_irreducible(end.genus, end.degree, irr->line.deg));
      t.row("moduli_dim", moduli_dim(end.genus, irr->line.deg));
    } else {
      const auto& red = std::get<MonopoleReducible>(a);
      auto [canon, shift] = reduce_residue(red.kappa, end.degree);
      t.row("kappa", red.kappa);
      t.row("kappa_canonical", canon);
      t.row("shift", shift);
      t.row("beta", beta_reducible(end.genus, end.degree, red.kappa));
      if (canon == 0) {
        t.row("flat_coupling", std::string("trivial"));
      } else {
        t.row("xi_flat", xi_flat(end.degree, canon));
        t.row("eta_flat", eta_flat(end.degree, canon));
        t.row("transgression_3", third_transgression(canon, end.degree));
      }
    }
  }
  std::cout << t.str();
  return 0;
}

int run_dimension(const CommonOpts& o) {
  FourManifoldData man = parse_manifest(slurp_input(o));
  DimensionReport rep = dim_v_manifold(man, o.assume_beta_additivity);
  warn_strict_integer(o, rep.dim_v);
  if (o.format == "json")
    std::cout << dump_json(report_to_json(rep));
  else
    std::cout << report_to_table(rep);
  return 0;
}

// A tunneling manifest lists exactly two ends of the cylinder R x N:
// ends[0] is the limit at -infinity, ends[1] at +infinity.  They must have
// equal genus and opposite degrees; chi and sign must be 0, and the c2
// entry is ignored (the relative c2 is determined by the asymptotics).
int run_tunneling(const CommonOpts& o) {
  FourManifoldData man = parse_manifest(slurp_input(o));
  if (man.ends.size() != 2)
    throw MultipleEndsUnsupported(
        "a tunneling manifest lists exactly two ends, got " +
        std::to_string(man.ends.size()));
  if (man.chi_hat != 0 || man.sign_hat != 0)
    throw DomainError(
        "a tunneling manifest describes a cylinder: chi and sign must be 0");
  const CircleBundleEnd& minus_end = asymptote_end(man.ends[0]);
  const CircleBundleEnd& plus_end = asymptote_end(man.ends[1]);
  if (minus_end.genus != plus_end.genus)
    throw DomainError("tunneling requires equal genus at both ends");
  if (minus_end.degree != -plus_end.degree)
    throw DomainError("tunneling requires opposite degrees at the two ends");
  long long l = plus_end.degree;
  long long g = plus_end.genus;

  const auto* tail = std::get_if<MonopoleIrreducible>(&man.ends[1]);
  if (!tail)
    throw DomainError(
        "the +infinity end of a tunneling must be irreducible");
  long long n2 = tail->line.deg;

  DimensionReport rep;
  if (const auto* head = std::get_if<MonopoleIrreducible>(&man.ends[0])) {
    long long n1 = head->line.deg;
    rep.bulk = transgression_c2(l, n1, n2);
    rep.dim_v = tunneling_dim(l, g, n1, n2);
    rep.betas = {beta_irreducible(g, -l, n1), beta_irreducible(g, l, n2)};
  } else {
    const auto& red_head = std::get<MonopoleReducible>(man.ends[0]);
    rep.bulk = transgression_c2(l, red_head.kappa, n2);
    rep.dim_v = tunneling_from_reducible(l, g, red_head.kappa, n2);
    // Orientation-reversed reducible boundary contribution (kappa-terms
    // ride with the transgression slot).
    rep.betas = {Rational(2 * g - 1, 2) + Rational(l - sign_of(l), 4),
                 beta_irreducible(g, l, n2)};
  }
  Rational assembled = rep.bulk;
  for (const auto& b : rep.betas) assembled += b;
  rep.assembly_residual = rep.dim_v - assembled;
  rep.ind_ow = rep.dim_v - Rational(moduli_dim(g, n2));
  if (!rep.assembly_residual.is_zero())
    throw AssemblyMismatch("tunneling assembly drifted: " + rep.dim_v.str() +
                           " vs " + assembled.str());
  warn_strict_integer(o, rep.dim_v);
  if (o.format == "json")
    std::cout << dump_json(report_to_json(rep));
  else
    std::cout << report_to_table(rep);
  return 0;
}

struct SfOpts {
  long long degree = 0;
  long long genus = 0;
  long long n = 0;
  long long h_star = 0;
};

int run_sf(const CommonOpts& o, const SfOpts& s) {
  MonopoleIrreducible irr;
  irr.end.genus = s.genus;
  irr.end.degree = s.degree;
  irr.line = CoupledLine{s.n, s.h_star};
  irr.validate();
  long long g = s.genus;
  long long h_L = irr.line.h_L();
  long long eps = s.degree > 0 ? 1 : 0;
  long long abs_n = -s.n;

  OrderedJson out;
  out["degree"] = s.degree;
  out["genus"] = g;
  out["n"] = s.n;
  out["h_star"] = s.h_star;
  out["h_L"] = h_L;
  out["sf_plus"] = sf_plus(s.degree, s.h_star);
  out["sf_minus"] = sf_minus(s.degree, s.h_star);
  out["degenerate_contribution"] = degenerate_contribution(s.degree);
  out["coupled_sf"] = coupled_sf(s.degree, irr.line);
  out["fold"] = s.n - 1 - eps;

  TableBuilder t;
  t.section("spectral flow");
  t.row("degree", s.degree);
  t.row("genus", g);
  t.row("n", s.n);
  t.row("h_star", s.h_star);
  t.row("h_L", h_L);
  t.row("sf_plus", sf_plus(s.degree, s.h_star));
  t.row("sf_minus", sf_minus(s.degree, s.h_star));
  t.row("degenerate_contribution", degenerate_contribution(s.degree));
  t.row("coupled_sf", coupled_sf(s.degree, irr.line));
  t.row("fold", s.n - 1 - eps);

  if (h_L >= 1) {
    SignatureTriple q1 = q1_gram(h_L).signature();
    out["q1_signature"] = {q1.n_plus, q1.n_minus, q1.n_zero};
    t.row("q1_signature", "(" + std::to_string(q1.n_plus) + ", " +
                              std::to_string(q1.n_minus) + ", " +
                              std::to_string(q1.n_zero) + ")");
  }
  SignatureTriple q2 = q2_gram(g, s.h_star).signature();
  out["q2_signature"] = {q2.n_plus, q2.n_minus, q2.n_zero};
  t.row("q2_signature", "(" + std::to_string(q2.n_plus) + ", " +
                            std::to_string(q2.n_minus) + ", " +
                            std::to_string(q2.n_zero) + ")");
  if (g >= 1 + abs_n) {
    auto [ker_deformed, ker_resonance] = ker_counts(g, s.n);
    out["ker_deformed"] = ker_deformed;
    out["ker_resonance"] = ker_resonance;
    t.row("ker_deformed", ker_deformed);
    t.row("ker_resonance", ker_resonance);
  }

  if (o.format == "json")
    std::cout << dump_json(out);
  else
    std::cout << t.str();
  return 0;
}

int run_series(const CommonOpts& o) {
  PowerSeries bc = bc_density(o.truncation);
  PowerSeries ahat = ahat_series(o.truncation);
  PowerSeries ch = ch_series(o.truncation);
  if (o.format == "json") {
    OrderedJson out;
    out["truncation"] = o.truncation;
    out["bc_density"] = OrderedJson::array();
    out["ahat"] = OrderedJson::array();
    out["ch"] = OrderedJson::array();
    for (std::size_t d = 0; d <= o.truncation; ++d) {
      out["bc_density"].push_back(bc.coeff(d).str());
      out["ahat"].push_back(ahat.coeff(d).str());
      out["ch"].push_back(ch.coeff(d).str());
    }
    std::cout << dump_json(out);
    return 0;
  }
  TableBuilder t;
  t.section("adiabatic density");
  for (std::size_t d = 0; d <= o.truncation; ++d)
    t.row("c^" + std::to_string(d), bc.coeff(d));
  t.section("A-hat density");
  for (std::size_t d = 0; d <= o.truncation; ++d)
    t.row("x^" + std::to_string(d), ahat.coeff(d));
  t.section("Chern character density");
  for (std::size_t d = 0; d <= o.truncation; ++d)
    t.row("x^" + std::to_string(d), ch.coeff(d));
  std::cout << t.str();
  return 0;
}

int run_verify(const CommonOpts& o) {
  std::vector<CheckResult> results = run_verification(o.seed);
  bool all_pass = true;
  if (o.format == "json") {
    OrderedJson out = OrderedJson::array();
    for (const auto& r : results) {
      out.push_back(OrderedJson{
          {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    std::cout << dump_json(out);
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.pass) std::cout << ": " << r.detail;
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for eta/xi invariants of circle-bundle "
               "Dirac operators and monopole moduli dimensions"};
  app.require_subcommand(1);

  CommonOpts common;
  SfOpts sf_opts;

  CLI::App* c_inv = app.add_subcommand(
      "invariants", "Per-end eta/xi invariants from a manifest");
  add_common(c_inv, common, true);
  CLI::App* c_dim = app.add_subcommand(
      "dimension", "Virtual-dimension report from a manifest");
  add_common(c_dim, common, true);
  CLI::App* c_tun = app.add_subcommand(
      "tunneling", "Tunneling dimension from a two-end manifest");
  add_common(c_tun, common, true);
  CLI::App* c_sf =
      app.add_subcommand("sf", "Spectral-flow table for one end");
  add_common(c_sf, common, false);
  c_sf->add_option("--degree", sf_opts.degree, "Bundle degree l")->required();
  c_sf->add_option("--genus", sf_opts.genus, "Base genus g")->required();
  c_sf->add_option("--n", sf_opts.n, "Asymptotic degree n < 0")->required();
  c_sf->add_option("--h-star", sf_opts.h_star, "h_{1/2}(L*)")->required();
  CLI::App* c_ser =
      app.add_subcommand("series", "Characteristic-class densities");
  add_common(c_ser, common, false);
  CLI::App* c_ver =
      app.add_subcommand("verify", "Run the full invariant sweep");
  add_common(c_ver, common, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_inv->parsed()) return run_invariants(common);
    if (c_dim->parsed()) return run_dimension(common);
    if (c_tun->parsed()) return run_tunneling(common);
    if (c_sf->parsed()) return run_sf(common, sf_opts);
    if (c_ser->parsed()) return run_series(common);
    if (c_ver->parsed()) return run_verify(common);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
