#include "etacalc/geometry.hpp"

#include <json.hpp>

#include "etacalc/errors.hpp"

namespace etacalc {

void CircleBundleEnd::validate() const {
  if (genus < 0) throw SchemaError("genus must be >= 0");
  if (degree == 0)
    throw TrivialBundle("circle bundle must have nonzero degree");
  if (radius_sq && !(*radius_sq > Rational(0)))
    throw SchemaError("rho = r^2 must be positive");
}

void SpinData::validate() const {
  if (h_half < 0) throw SchemaError("h_{1/2} must be >= 0");
}

CoupledLine validate_coupled(long long deg, long long h_L_star) {
  if (h_L_star < 0)
    throw RiemannRochViolation("h_{1/2}(L*) = " + std::to_string(h_L_star) +
                               " < 0");
  if (h_L_star + deg < 0)
    throw RiemannRochViolation("h_L = h_L* + deg = " +
                               std::to_string(h_L_star + deg) + " < 0");
  return CoupledLine{deg, h_L_star};
}

void MonopoleIrreducible::validate() const {
  end.validate();
  if (line.deg >= 0)
    throw UnsupportedSign("irreducible asymptote requires n < 0, got n = " +
                          std::to_string(line.deg));
  validate_coupled(line.deg, line.h_L_star);
  if (line.h_L_star > end.genus)
    throw CliffordViolation("h_{1/2}(L*) = " + std::to_string(line.h_L_star) +
                            " exceeds the Clifford bound g = " +
                            std::to_string(end.genus));
}

void MonopoleReducible::validate() const {
  end.validate();
  long long l = end.degree < 0 ? -end.degree : end.degree;
  if ((end.genus - 1) % l == 0)
    throw DegenerateReducible(
        "g - 1 = " + std::to_string(end.genus - 1) +
        " is divisible by the bundle degree " + std::to_string(end.degree));
}

const CircleBundleEnd& asymptote_end(const MonopoleAsymptote& a) {
  return std::visit([](const auto& x) -> const CircleBundleEnd& { return x.end; },
                    a);
}

void validate_asymptote(const MonopoleAsymptote& a) {
  std::visit([](const auto& x) { x.validate(); }, a);
}

void FourManifoldData::validate() const {
  if (ends.empty()) throw SchemaError("manifest must list at least one end");
  for (const auto& e : ends) validate_asymptote(e);
}

std::pair<long long, long long> reduce_residue(long long k, long long l) {
  if (l == 0) throw TrivialBundle("residue reduction needs nonzero degree");
  long long m = l < 0 ? -l : l;
  long long k_canon = k % m;
  if (k_canon < 0) k_canon += m;
  long long shift = (k - k_canon) / m;
  return {k_canon, shift};
}

long long moduli_dim(long long g, long long n) {
  if (n >= 0)
    throw UnsupportedSign("moduli dimension is stated for n < 0, got n = " +
                          std::to_string(n));
  if (g < 1)
    throw InvalidModuli("moduli dimension requires genus >= 1, got g = " +
                        std::to_string(g));
  return 2 * (g - 1 + n);
}

namespace {

using nlohmann::json;

long long get_int(const json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw SchemaError(std::string(where) + " is missing \"" + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw SchemaError(std::string(where) + "." + key + " must be an integer");
  return v.get<long long>();
}

Rational get_rational(const json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw SchemaError(std::string(where) + " is missing \"" + key + "\"");
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw SchemaError(std::string(where) + "." + key +
                    " must be an integer or a \"p/q\" string");
}

}  // namespace

FourManifoldData parse_manifest(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("manifest must be a JSON object");
  if (!j.contains("manifold") || !j["manifold"].is_object())
    throw SchemaError("manifest is missing the \"manifold\" object");
  if (!j.contains("ends") || !j["ends"].is_array())
    throw SchemaError("manifest is missing the \"ends\" array");

  FourManifoldData man;
  const json& m = j["manifold"];
  man.chi_hat = get_int(m, "chi", "manifold");
  man.sign_hat = get_int(m, "sign", "manifold");
  man.c2_integral = get_rational(m, "c2", "manifold");

  for (const auto& je : j["ends"]) {
    if (!je.is_object()) throw SchemaError("each end must be an object");
    CircleBundleEnd end;
    end.genus = get_int(je, "genus", "end");
    end.degree = get_int(je, "degree", "end");
    if (je.contains("rho")) {
      const auto& rho = je.at("rho");
      if (rho.is_string() && rho.get<std::string>() == "symbolic")
        end.radius_sq = std::nullopt;
      else
        end.radius_sq = get_rational(je, "rho", "end");
    }
    if (!je.contains("asymptote") || !je["asymptote"].is_object())
      throw SchemaError("end is missing the \"asymptote\" object");
    const json& ja = je["asymptote"];
    if (!ja.contains("type") || !ja["type"].is_string())
      throw SchemaError("asymptote is missing \"type\"");
    std::string type = ja["type"].get<std::string>();
    if (type == "irreducible") {
      MonopoleIrreducible irr;
      irr.end = end;
      irr.line.deg = get_int(ja, "n", "asymptote");
      irr.line.h_L_star = get_int(ja, "h_star", "asymptote");
      man.ends.emplace_back(std::move(irr));
    } else if (type == "reducible") {
      MonopoleReducible red;
      red.end = end;
      red.kappa = get_int(ja, "kappa", "asymptote");
      man.ends.emplace_back(std::move(red));
    } else {
      throw SchemaError("asymptote type must be \"irreducible\" or "
                        "\"reducible\", got \"" +
                        type + "\"");
    }
  }
  man.validate();
  return man;
}

}  // namespace etacalc
