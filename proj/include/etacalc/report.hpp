#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "etacalc/moduli_dim.hpp"
#include "etacalc/radius_polynomial.hpp"
#include "etacalc/rational.hpp"

namespace etacalc {

using OrderedJson = nlohmann::ordered_json;

// Canonical JSON forms: rationals as "p/q" strings (or "p" when q = 1),
// polynomials as arrays of such strings indexed by the power of rho.
OrderedJson rational_to_json(const Rational& r);
Rational rational_from_json(const OrderedJson& j);
OrderedJson polynomial_to_json(const RadiusPolynomial& p);
RadiusPolynomial polynomial_from_json(const OrderedJson& j);

OrderedJson report_to_json(const DimensionReport& r);
DimensionReport report_from_json(const OrderedJson& j);

// Canonical serialization used everywhere JSON leaves the process: fixed
// key order, two-space indentation, trailing newline.  Re-parsing and
// re-dumping is byte-identical.
std::string dump_json(const OrderedJson& j);

// Plain "label = value" renderer for the table output format.  Rational
// and polynomial rows append a decimal approximation in parentheses when
// they are not integers.
class TableBuilder {
 public:
  void section(const std::string& title);
  void row(const std::string& label, const std::string& value);
  void row(const std::string& label, long long value);
  void row(const std::string& label, const Rational& value);
  void row(const std::string& label, const RadiusPolynomial& value);
  std::string str() const;

 private:
  std::string out_;
};

std::string report_to_table(const DimensionReport& r);

// Decimal approximation used in table output, e.g. "-0.083333".
std::string approx_str(const Rational& r);

}  // namespace etacalc
