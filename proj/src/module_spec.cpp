#include "hdepth/module_spec.hpp"

#include <algorithm>

#include <json.hpp>

#include "hdepth/errors.hpp"

namespace hdepth {

using nlohmann::json;

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<DegreeVector> generators) : n_(n) {
  for (const auto& gen : generators) {
    if (gen.size() != n) throw DimensionError("generator " + gen.to_string() + " has wrong length");
    if (!gen.is_nonnegative()) throw DomainError("generator " + gen.to_string() + " has a negative exponent");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& gen : generators) {
    bool redundant = std::any_of(generators.begin(), generators.end(), [&](const DegreeVector& other) {
      return other != gen && precedes(other, gen);
    });
    if (!redundant) gens_.push_back(gen);
  }
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](int c) { return c == 0; });
}

bool MonomialIdeal::contains(const DegreeVector& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const DegreeVector& gen) { return precedes(gen, u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const DegreeVector& gen) { return contains(gen); });
}

DegreeVector MonomialIdeal::generator_join() const {
  DegreeVector out = DegreeVector::zeros(n_);
  for (const auto& gen : gens_) out = join(out, gen);
  return out;
}

bool Summand::nonzero_at(const DegreeVector& a) const {
  if (!precedes(shift, a)) return false;
  DegreeVector u = a - shift;
  return numerator.contains(u) && !denominator.contains(u);
}

void ModuleSpec::validate() const {
  if (n > VarSet::kMaxVars) throw ParseError("at most 64 variables are supported");
  if (var_names.size() != n) throw ParseError("expected " + std::to_string(n) + " variable names");
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& s = summands[k];
    const std::string where = "summand " + std::to_string(k) + ": ";
    if (s.shift.size() != n || s.numerator.dim() != n || s.denominator.dim() != n) {
      throw DimensionError(where + "dimension mismatch");
    }
    if (!s.shift.is_nonnegative()) {
      throw ParseError(where + "shift " + s.shift.to_string() +
                       " has a negative coordinate (shifts must lie in N^n)");
    }
    if (!s.numerator.contains(s.denominator)) throw ParseError(where + "denominator ideal is not contained in numerator");
  }
  if (g_override) {
    if (g_override->size() != n) throw DimensionError("g override has wrong length");
    DegreeVector base = natural_g(*this);
    if (!precedes(base, *g_override)) {
      throw ParseError("g override " + g_override->to_string() + " is below the determining degree " + base.to_string());
    }
  }
}

namespace {

DegreeVector read_vector(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of integers");
  std::vector<int> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(what + " must contain integers");
    coords.push_back(x.get<int>());
  }
  if (coords.size() != n) {
    throw DimensionError(what + " has length " + std::to_string(coords.size()) + ", expected " + std::to_string(n));
  }
  return DegreeVector(std::move(coords));
}

MonomialIdeal read_ideal(const json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of exponent vectors");
  std::vector<DegreeVector> gens;
  for (const auto& g : j) gens.push_back(read_vector(g, n, what + " generator"));
  try {
    return MonomialIdeal(n, std::move(gens));
  } catch (const DomainError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

json vector_json(const DegreeVector& v) { return json(v.coords()); }

}  // namespace

ModuleSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("module spec must be a JSON object");
  if (!doc.contains("vars") || !doc["vars"].is_array()) throw ParseError("missing \"vars\" array");
  if (!doc.contains("summands") || !doc["summands"].is_array()) throw ParseError("missing \"summands\" array");

  ModuleSpec spec;
  for (const auto& name : doc["vars"]) {
    if (!name.is_string()) throw ParseError("variable names must be strings");
    spec.var_names.push_back(name.get<std::string>());
  }
  spec.n = spec.var_names.size();

  for (std::size_t k = 0; k < doc["summands"].size(); ++k) {
    const auto& s = doc["summands"][k];
    const std::string where = "summand " + std::to_string(k);
    if (!s.is_object()) throw ParseError(where + " must be an object");
    Summand summand;
    summand.shift = s.contains("shift") ? read_vector(s["shift"], spec.n, where + " shift") : DegreeVector::zeros(spec.n);
    summand.numerator = s.contains("numerator_gens") ? read_ideal(s["numerator_gens"], spec.n, where + " numerator_gens")
                                                     : MonomialIdeal::unit(spec.n);
    summand.denominator = s.contains("denominator_gens")
                              ? read_ideal(s["denominator_gens"], spec.n, where + " denominator_gens")
                              : MonomialIdeal::zero(spec.n);
    spec.summands.push_back(std::move(summand));
  }
  if (doc.contains("g") && !doc["g"].is_null()) spec.g_override = read_vector(doc["g"], spec.n, "g");
  spec.validate();
  return spec;
}

std::string spec_to_json(const ModuleSpec& spec, int indent) {
  json doc;
  doc["vars"] = spec.var_names;
  doc["summands"] = json::array();
  for (const auto& s : spec.summands) {
    json num = json::array();
    json den = json::array();
    for (const auto& g : s.numerator.generators()) num.push_back(vector_json(g));
    for (const auto& g : s.denominator.generators()) den.push_back(vector_json(g));
    doc["summands"].push_back({{"shift", vector_json(s.shift)}, {"numerator_gens", num}, {"denominator_gens", den}});
  }
  if (spec.g_override) doc["g"] = vector_json(*spec.g_override);
  return doc.dump(indent);
}

DegreeVector natural_g(const ModuleSpec& spec) {
  DegreeVector g = DegreeVector::zeros(spec.n);
  for (const auto& s : spec.summands) {
    DegreeVector gens = join(s.numerator.generator_join(), s.denominator.generator_join());
    g = join(g, join(s.shift, s.shift + gens));
  }
  return g;
}

DegreeVector determine_g(const ModuleSpec& spec) {
  DegreeVector g = natural_g(spec);
  return spec.g_override ? join(g, *spec.g_override) : g;
}

std::uint64_t hilbert_value(const ModuleSpec& spec, const DegreeVector& a) {
  if (a.size() != spec.n) throw DimensionError("degree has wrong length");
  return static_cast<std::uint64_t>(
      std::count_if(spec.summands.begin(), spec.summands.end(), [&](const Summand& s) { return s.nonzero_at(a); }));
}

HilbertTable hilbert_table(const ModuleSpec& spec, const DegreeVector& g) {
  if (g.size() != spec.n) throw DimensionError("g has wrong length");
  if (!precedes(natural_g(spec), g)) {
    throw DomainError("g = " + g.to_string() + " is below the determining degree " + natural_g(spec).to_string());
  }
  HilbertTable table(g);
  const Box& box = table.box();
  std::vector<std::uint64_t> values(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) values[i] = hilbert_value(spec, box.point_at(i));
  return HilbertTable(g, std::move(values));
}

std::vector<ComponentBasisElement> component_basis(const ModuleSpec& spec, const DegreeVector& a) {
  if (a.size() != spec.n) throw DimensionError("degree has wrong length");
  std::vector<ComponentBasisElement> out;
  for (std::size_t k = 0; k < spec.summands.size(); ++k) {
    if (spec.summands[k].nonzero_at(a)) out.push_back({k, a});
  }
  return out;
}

std::optional<ComponentBasisElement> multiply(const ModuleSpec& spec, const ComponentBasisElement& e,
                                              const DegreeVector& t) {
  if (!t.is_nonnegative()) throw DomainError("multiplier exponent must be nonnegative");
  DegreeVector target = e.degree + t;
  if (!spec.summands.at(e.summand).nonzero_at(target)) return std::nullopt;
  return ComponentBasisElement{e.summand, std::move(target)};
}

bool is_dim_le_1(const ModuleSpec& spec, const DegreeVector& g) { return hilbert_table(spec, g).max_value() <= 1; }

std::uint64_t free_module_value(VarSet vars, const DegreeVector& shift, const DegreeVector& a) {
  if (!precedes(shift, a)) return 0;
  return supported_in(a - shift, vars) ? 1 : 0;
}

}  // namespace hdepth
