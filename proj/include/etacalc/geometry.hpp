#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "etacalc/rational.hpp"

namespace etacalc {

inline int sign_of(long long v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// One cylindrical end: a circle bundle of degree l over a genus-g surface.
// The fiber radius enters only through rho = r^2, which may be an exact
// rational or left symbolic (nullopt).
struct CircleBundleEnd {
  long long genus = 0;
  long long degree = 0;
  std::optional<Rational> radius_sq;  // nullopt = symbolic rho

  long long chi() const { return 2 - 2 * genus; }
  int sign_l() const { return sign_of(degree); }
  // epsilon = (1 + sign l)/2, either 0 or 1
  long long epsilon() const { return degree > 0 ? 1 : 0; }

  void validate() const;
};

// Spin structure bookkeeping: h = h_{1/2} for the chosen spin structure.
struct SpinData {
  long long h_half = 0;
  void validate() const;
};

// Line bundle data on the base surface with Riemann-Roch bookkeeping:
// h_L - h_L_star = deg holds by construction.
struct CoupledLine {
  long long deg = 0;
  long long h_L_star = 0;

  long long h_L() const { return h_L_star + deg; }
};

// Validates and returns the record; rejects negative section counts.
CoupledLine validate_coupled(long long deg, long long h_L_star);

struct MonopoleIrreducible {
  CircleBundleEnd end;
  CoupledLine line;  // line.deg = n < 0
  void validate() const;
};

struct MonopoleReducible {
  CircleBundleEnd end;
  long long kappa = 0;
  void validate() const;
};

using MonopoleAsymptote = std::variant<MonopoleIrreducible, MonopoleReducible>;

const CircleBundleEnd& asymptote_end(const MonopoleAsymptote& a);
void validate_asymptote(const MonopoleAsymptote& a);

// Topological data of the 4-manifold with cylindrical ends.
struct FourManifoldData {
  long long chi_hat = 0;
  long long sign_hat = 0;
  Rational c2_integral;
  std::vector<MonopoleAsymptote> ends;

  void validate() const;
};

// Reduces k modulo |l|: returns (k_canonical, shift) with
// 0 <= k_canonical < |l| and k = k_canonical + shift * |l|.
std::pair<long long, long long> reduce_residue(long long k, long long l);

// Dimension of the moduli space of irreducible monopoles with asymptotic
// degree n < 0 over a genus-g surface: 2(g - 1 + n).
long long moduli_dim(long long g, long long n);

// JSON manifest ingestion.  Schema:
//   {"manifold": {"chi": int, "sign": int, "c2": "p/q"},
//    "ends": [{"genus": int, "degree": int, "rho": "p/q"|"symbolic",
//              "asymptote": {"type": "irreducible", "n": int, "h_star": int}
//                         | {"type": "reducible", "kappa": int}}]}
FourManifoldData parse_manifest(const std::string& json_text);

}  // namespace etacalc
