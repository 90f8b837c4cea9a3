#include "etacalc/report.hpp"

#include <cstdio>

#include "etacalc/errors.hpp"

namespace etacalc {

OrderedJson rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const OrderedJson& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw SchemaError("expected a rational encoded as \"p/q\"");
}

OrderedJson polynomial_to_json(const RadiusPolynomial& p) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

RadiusPolynomial polynomial_from_json(const OrderedJson& j) {
  if (!j.is_array()) throw SchemaError("expected a coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return RadiusPolynomial(std::move(coeffs));
}

OrderedJson report_to_json(const DimensionReport& r) {
  OrderedJson j;
  j["ind_Ow"] = rational_to_json(r.ind_ow);
  j["dim_v"] = rational_to_json(r.dim_v);
  j["betas"] = OrderedJson::array();
  for (const auto& b : r.betas) j["betas"].push_back(rational_to_json(b));
  j["bulk"] = rational_to_json(r.bulk);
  j["assembly_residual"] = rational_to_json(r.assembly_residual);
  if (r.audit) {
    OrderedJson a;
    a["weight_shift"] = r.audit->weight_shift;
    a["ind_vd12"] = rational_to_json(r.audit->ind_vd12);
    a["limit_set_adjustment"] = r.audit->limit_set_adjustment;
    j["audit"] = std::move(a);
  }
  return j;
}

DimensionReport report_from_json(const OrderedJson& j) {
  DimensionReport r;
  r.ind_ow = rational_from_json(j.at("ind_Ow"));
  r.dim_v = rational_from_json(j.at("dim_v"));
  for (const auto& b : j.at("betas")) r.betas.push_back(rational_from_json(b));
  r.bulk = rational_from_json(j.at("bulk"));
  r.assembly_residual = rational_from_json(j.at("assembly_residual"));
  if (j.contains("audit")) {
    ReducibleAudit a;
    a.weight_shift = j.at("audit").at("weight_shift").get<long long>();
    a.ind_vd12 = rational_from_json(j.at("audit").at("ind_vd12"));
    a.limit_set_adjustment =
        j.at("audit").at("limit_set_adjustment").get<long long>();
    r.audit = a;
  }
  return r;
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

std::string approx_str(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", r.to_double());
  return buf;
}

void TableBuilder::section(const std::string& title) {
  if (!out_.empty()) out_ += "\n";
  out_ += title + "\n";
  out_ += std::string(title.size(), '-') + "\n";
}

void TableBuilder::row(const std::string& label, const std::string& value) {
  out_ += "  " + label + " = " + value + "\n";
}

void TableBuilder::row(const std::string& label, long long value) {
  row(label, std::to_string(value));
}

void TableBuilder::row(const std::string& label, const Rational& value) {
  if (value.is_integer())
    row(label, value.str());
  else
    row(label, value.str() + " (" + approx_str(value) + ")");
}

void TableBuilder::row(const std::string& label,
                       const RadiusPolynomial& value) {
  row(label, value.str());
}

std::string report_to_table(const DimensionReport& r) {
  TableBuilder t;
  t.section("dimension report");
  t.row("ind_Ow", r.ind_ow);
  t.row("dim_v", r.dim_v);
  for (std::size_t i = 0; i < r.betas.size(); ++i)
    t.row("beta[" + std::to_string(i) + "]", r.betas[i]);
  t.row("bulk", r.bulk);
  t.row("assembly_residual", r.assembly_residual);
  if (r.audit) {
    t.row("audit.weight_shift", r.audit->weight_shift);
    t.row("audit.ind_vd12", r.audit->ind_vd12);
    t.row("audit.limit_set_adjustment", r.audit->limit_set_adjustment);
  }
  return t.str();
}

std::string TableBuilder::str() const { return out_; }

}  // namespace etacalc
