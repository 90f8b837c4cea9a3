#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "etacalc/eta_coupled.hpp"
#include "etacalc/eta_spin.hpp"
#include "etacalc/geometry.hpp"
#include "etacalc/moduli_dim.hpp"
#include "etacalc/power_series.hpp"
#include "etacalc/report.hpp"
#include "etacalc/resonance.hpp"
#include "etacalc/verify.hpp"
#include "etacalc/zeta_oracle.hpp"

namespace py = pybind11;
using namespace etacalc;

namespace {

py::tuple triple_to_tuple(const SignatureTriple& t) {
  return py::make_tuple(t.n_plus, t.n_minus, t.n_zero);
}

std::vector<std::string> series_coeffs(const PowerSeries& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_etacalc, m) {
  m.doc() =
      "Exact invariants of Dirac operators on circle bundles over surfaces: "
      "eta/xi values, spectral flows, resonance signatures, and "
      "virtual-dimension reports.";

  py::register_exception<Error>(m, "EtaCalcError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init<long long>())
      .def(py::init(&Rational::parse))
      .def("__str__", &Rational::str)
      .def("__repr__",
           [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def("numerator", [](const Rational& r) { return r.num().str(); })
      .def("denominator", [](const Rational& r) { return r.den().str(); })
      .def("is_integer", &Rational::is_integer)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__lt__",
           [](const Rational& a, const Rational& b) { return a < b; })
      .def("__hash__",
           [](const Rational& r) { return py::hash(py::str(r.str())); });

  py::class_<RadiusPolynomial>(m, "RadiusPolynomial")
      .def(py::init([](const std::vector<std::string>& coeffs) {
        std::vector<Rational> rs;
        for (const auto& c : coeffs) rs.push_back(Rational::parse(c));
        return RadiusPolynomial(std::move(rs));
      }))
      .def("__str__", [](const RadiusPolynomial& p) { return p.str(); })
      .def("coeffs", &RadiusPolynomial::coeffs)
      .def("degree", &RadiusPolynomial::degree)
      .def("evaluate", &RadiusPolynomial::evaluate)
      .def(py::self == py::self);

  py::class_<XiValue>(m, "XiValue")
      .def_readonly("value", &XiValue::value)
      .def_readonly("kernel_dim", &XiValue::kernel_dim)
      .def("eta", &XiValue::eta);

  py::class_<CoupledLine>(m, "CoupledLine")
      .def(py::init(&validate_coupled), py::arg("deg"), py::arg("h_star"))
      .def_readonly("deg", &CoupledLine::deg)
      .def_readonly("h_star", &CoupledLine::h_L_star)
      .def("h_L", &CoupledLine::h_L);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& r) {
        return (r.pass ? "<PASS " : "<FAIL ") + r.name + ">";
      });

  // Series layer.
  m.def("bc_density_coeffs",
        [](std::size_t T) { return series_coeffs(bc_density(T)); },
        py::arg("truncation"));
  m.def("ahat_coeffs",
        [](std::size_t T) { return series_coeffs(ahat_series(T)); },
        py::arg("truncation"));
  m.def("ch_coeffs",
        [](std::size_t T) { return series_coeffs(ch_series(T)); },
        py::arg("truncation"));

  // Spin pipeline.
  m.def("adiabatic_limit_eta", &adiabatic_limit_eta, py::arg("l"),
        py::arg("h"));
  m.def("adiabatic_limit_via_series", &adiabatic_limit_via_series,
        py::arg("l"), py::arg("h"), py::arg("truncation") = 8);
  m.def("xi_spin_LC", &xi_spin_LC, py::arg("l"), py::arg("g"), py::arg("h"));
  m.def("xi_spin_adiabatic", &xi_spin_adiabatic, py::arg("l"), py::arg("g"),
        py::arg("h"));
  m.def("first_transgression", &first_transgression, py::arg("l"),
        py::arg("g"));
  m.def("second_transgression", &second_transgression, py::arg("l"),
        py::arg("g"));
  m.def("sf_adiabatic_deformation", &sf_adiabatic_deformation, py::arg("l"),
        py::arg("h"));
  m.def("aps_index_dirac", &aps_index_dirac, py::arg("p1_integral"),
        py::arg("xi"));

  // Coupled pipeline.
  m.def("xi_coupled_LC", &xi_coupled_LC, py::arg("l"), py::arg("g"),
        py::arg("line"));
  m.def("xi_coupled_adiabatic", &xi_coupled_adiabatic, py::arg("l"),
        py::arg("g"), py::arg("line"));
  m.def("coupled_sf", &coupled_sf, py::arg("l"), py::arg("line"));
  m.def("third_transgression", &third_transgression, py::arg("k"),
        py::arg("l"));
  m.def("flat_coupling_sf", &flat_coupling_sf, py::arg("l"), py::arg("line"));
  m.def("xi_flat", &xi_flat, py::arg("l"), py::arg("k"));
  m.def("xi_flat_formal", &xi_flat_formal, py::arg("l"), py::arg("k"));
  m.def("eta_flat", &eta_flat, py::arg("l"), py::arg("kappa"));

  // Resonance layer.
  m.def("q1_signature",
        [](long long d) { return triple_to_tuple(q1_gram(d).signature()); },
        py::arg("d"));
  m.def("q2_signature",
        [](long long g, long long mdim) {
          return triple_to_tuple(q2_gram(g, mdim).signature());
        },
        py::arg("g"), py::arg("m"));
  m.def("sf_plus", &sf_plus, py::arg("l"), py::arg("h_star"));
  m.def("sf_minus", &sf_minus, py::arg("l"), py::arg("h_star"));
  m.def("degenerate_contribution", &degenerate_contribution, py::arg("l"));
  m.def("ker_counts", &ker_counts, py::arg("g"), py::arg("n"));
  m.def("explicit_adot_coefficient",
        [](long long l, const Rational& norm_sq) {
          AdotCoefficient c = explicit_adot_coefficient(l, norm_sq);
          return py::make_tuple(c.coefficient, c.pairing_sign);
        },
        py::arg("l"), py::arg("norm_sq_integral"));

  // Geometry and moduli.
  m.def("reduce_residue", &reduce_residue, py::arg("k"), py::arg("l"));
  m.def("moduli_dim", &moduli_dim, py::arg("g"), py::arg("n"));
  m.def("beta_irreducible", &beta_irreducible, py::arg("g"), py::arg("l"),
        py::arg("n"));
  m.def("beta_reducible", &beta_reducible, py::arg("g"), py::arg("l"),
        py::arg("kappa"));
  m.def("signature_eta_end", &signature_eta_end, py::arg("l"), py::arg("g"));
  m.def("l_genus_integral", &l_genus_integral, py::arg("sign_hat"),
        py::arg("degrees"));
  m.def("transgression_c2", &transgression_c2, py::arg("l"), py::arg("n1"),
        py::arg("n2"));
  m.def("tunneling_dim", &tunneling_dim, py::arg("l"), py::arg("g"),
        py::arg("n1"), py::arg("n2"));
  m.def("tunneling_from_reducible", &tunneling_from_reducible, py::arg("l"),
        py::arg("g"), py::arg("kappa"), py::arg("n"));
  m.def("sf_h1_to_ow", []() { return sf_h1_to_ow(); });

  // Manifest-level reports (JSON in, JSON out).
  m.def(
      "dimension_report_json",
      [](const std::string& manifest, bool assume_beta_additivity) {
        FourManifoldData man = parse_manifest(manifest);
        return dump_json(
            report_to_json(dim_v_manifold(man, assume_beta_additivity)));
      },
      py::arg("manifest"), py::arg("assume_beta_additivity") = false);

  // Oracles and the verification sweep.
  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("a"),
        py::arg("cutoff") = 10000, py::arg("bernoulli_terms") = 10);
  m.def("eta_arithmetic_progression", &eta_arithmetic_progression,
        py::arg("a"));
  m.def("run_verification", &run_verification, py::arg("seed") = 0);
}
