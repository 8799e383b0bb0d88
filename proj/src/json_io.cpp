#include "hdepth/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hdepth/errors.hpp"

namespace hdepth {

using nlohmann::json;

json to_json(const DegreeVector& v) { return json(v.coords()); }

json to_json(VarSet vars) { return json(vars.indices()); }

json to_json(const HilbertTable& table) {
  json out = json::array();
  for (std::size_t i = 0; i < table.box().size(); ++i) {
    out.push_back({{"degree", to_json(table.box().point_at(i))}, {"value", table[i]}});
  }
  return out;
}

json to_json(const HilbertPartition& p) {
  json intervals = json::array();
  for (const auto& iv : p.intervals) intervals.push_back({{"lower", to_json(iv.lower)}, {"upper", to_json(iv.upper)}});
  return {{"g", to_json(p.g)}, {"intervals", intervals}};
}

json to_json(const HilbertDecomposition& dec) {
  json out = json::array();
  for (const auto& c : dec.components) out.push_back({{"vars", to_json(c.vars)}, {"shift", to_json(c.shift)}});
  return out;
}

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

json to_json(const StanleyDecomposition& sd, const ModuleSpec& spec) {
  json out = json::array();
  for (const auto& part : sd.parts) {
    json choice = json::array();
    json terms = json::array();
    auto basis = component_basis(spec, part.generator.degree);
    for (std::size_t k = 0; k < part.generator.coeffs.size(); ++k) {
      choice.push_back(rational_string(part.generator.coeffs[k]));
      if (part.generator.coeffs[k] != 0) {
        terms.push_back({{"summand", basis.at(k).summand}, {"coeff", rational_string(part.generator.coeffs[k])}});
      }
    }
    out.push_back({{"vars", to_json(part.vars)}, {"shift", to_json(part.generator.degree)}, {"choice", choice}, {"terms", terms}});
  }
  return out;
}

json load_json_argument(std::string_view text_or_path) {
  std::string text(text_or_path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty JSON argument");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open " + text);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

DegreeVector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<int> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + " must contain integers");
    coords.push_back(x.get<int>());
  }
  return DegreeVector(std::move(coords));
}

VarSet varset_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vars must be an array of variable indices");
  VarSet vars;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw ParseError("variable indices must be nonnegative integers");
    vars.insert(x.get<std::size_t>());
  }
  return vars;
}

}  // namespace

HilbertPartition partition_from_json(const json& j) {
  const json& doc = j.contains("witness") ? j["witness"] : j;
  if (!doc.is_object() || !doc.contains("g") || !doc.contains("intervals")) {
    throw ParseError("partition must be an object with \"g\" and \"intervals\"");
  }
  HilbertPartition p{vector_from_json(doc["g"], "g"), {}};
  for (const auto& iv : doc["intervals"]) {
    DegreeVector lo;
    DegreeVector hi;
    if (iv.is_array() && iv.size() == 2) {
      lo = vector_from_json(iv[0], "interval lower corner");
      hi = vector_from_json(iv[1], "interval upper corner");
    } else if (iv.is_object() && iv.contains("lower") && iv.contains("upper")) {
      lo = vector_from_json(iv["lower"], "interval lower corner");
      hi = vector_from_json(iv["upper"], "interval upper corner");
    } else {
      throw ParseError("interval must be {\"lower\": .., \"upper\": ..} or [lower, upper]");
    }
    if (lo.size() != p.g.size() || hi.size() != p.g.size()) throw ParseError("interval dimension does not match g");
    try {
      p.intervals.emplace_back(std::move(lo), std::move(hi));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  p.canonicalize();
  return p;
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("coefficients must be integers or strings like \"2/3\"");
  const std::string s = j.get<std::string>();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in " + s);
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational \"" + s + "\"");
  }
}

StanleyCandidate candidate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array()) {
    throw ParseError("candidate must be an object with a \"components\" array");
  }
  StanleyCandidate cand;
  for (const auto& comp : j["components"]) {
    if (!comp.contains("vars") || !comp.contains("shift") || !comp.contains("choice")) {
      throw ParseError("candidate component needs \"vars\", \"shift\" and \"choice\"");
    }
    cand.decomposition.components.push_back({varset_from_json(comp["vars"]), vector_from_json(comp["shift"], "shift")});
    std::vector<Rational> choice;
    for (const auto& x : comp["choice"]) choice.push_back(parse_rational(x));
    cand.choices.push_back(std::move(choice));
  }
  return cand;
}

}  // namespace hdepth
