#include "hdepth/stanley.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hdepth/errors.hpp"

namespace hdepth {

bool ModuleElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; });
}

ModuleElement ModuleElement::basis(const ModuleSpec& spec, const ComponentBasisElement& e) {
  ModuleElement m{e.degree, {}};
  for (const auto& b : component_basis(spec, e.degree)) m.coeffs.emplace_back(b.summand == e.summand ? 1 : 0);
  return m;
}

std::string ModuleElement::to_string(const ModuleSpec& spec) const {
  auto basis = component_basis(spec, degree);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size() && i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono = monomial_string(degree - spec.summands[basis[i].summand].shift, spec.var_names);
    if (coeffs[i] != 1) os << coeffs[i] << ' ';
    if (mono != "1") os << mono << ' ';
    os << 'e' << basis[i].summand + 1;
  }
  return first ? "0" : os.str();
}

int StanleyDecomposition::depth(std::size_t n) const {
  int d = static_cast<int>(n);
  for (const auto& p : parts) d = std::min(d, static_cast<int>(p.vars.size()));
  return d;
}

StanleyDecomposition to_stanley_decomposition(const StanleyCandidate& cand) {
  StanleyDecomposition out;
  for (std::size_t i = 0; i < cand.decomposition.components.size(); ++i) {
    const auto& comp = cand.decomposition.components[i];
    out.parts.push_back({ModuleElement{comp.shift, cand.choices.at(i)}, comp.vars});
  }
  return out;
}

namespace {

// Top corner of the annihilator box for a generator in degree s.
DegreeVector annihilator_top(const DegreeVector& s, VarSet vars, const DegreeVector& g) {
  DegreeVector b = s;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (vars.contains(j)) b[j] = g[j];
  }
  return b;
}

void require_in_box(const DegreeVector& s, const DegreeVector& g) {
  if (!s.is_nonnegative() || !precedes(s, g)) {
    throw DomainError("generator degree " + s.to_string() + " is outside [0," + g.to_string() + "]");
  }
}

}  // namespace

bool annihilator_free(const ModuleSpec& spec, const ModuleElement& m, VarSet vars, const DegreeVector& g) {
  require_in_box(m.degree, g);
  auto basis = component_basis(spec, m.degree);
  if (m.coeffs.size() != basis.size()) throw DimensionError("element has wrong number of coordinates");
  if (m.is_zero()) throw PreconditionError("annihilator test on the zero element");
  for (const auto& c : Interval(m.degree, annihilator_top(m.degree, vars, g)).points()) {
    bool survives = false;
    for (std::size_t k = 0; k < basis.size() && !survives; ++k) {
      survives = m.coeffs[k] != 0 && spec.summands[basis[k].summand].nonzero_at(c);
    }
    if (!survives) return false;
  }
  return true;
}

bool annihilator_free(const ModuleSpec& spec, const ComponentBasisElement& e, VarSet vars, const DegreeVector& g) {
  if (!spec.summands.at(e.summand).nonzero_at(e.degree)) throw PreconditionError("basis element is zero");
  return annihilator_free(spec, ModuleElement::basis(spec, e), vars, g);
}

namespace {

// Components of `dec` whose Stanley space reaches degree c, i.e. s_i ⪯ c and
// c - s_i ∈ K[Z_i].
std::vector<std::size_t> columns_at(const HilbertDecomposition& dec, const DegreeVector& c) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& comp = dec.components[i];
    if (precedes(comp.shift, c) && supported_in(c - comp.shift, comp.vars)) cols.push_back(i);
  }
  return cols;
}

std::optional<std::size_t> position_of(const std::vector<ComponentBasisElement>& basis, std::size_t summand) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].summand == summand) return k;
  }
  return std::nullopt;
}

}  // namespace

CandidateCheck check_stanley_candidate(const ModuleSpec& spec, const StanleyCandidate& cand, const DegreeVector& g) {
  const auto& comps = cand.decomposition.components;
  if (cand.choices.size() != comps.size()) throw DimensionError("one generator choice per component is required");

  std::vector<std::vector<ComponentBasisElement>> bases;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    require_in_box(comps[i].shift, g);
    bases.push_back(component_basis(spec, comps[i].shift));
    if (cand.choices[i].size() != bases.back().size()) {
      throw DimensionError("component " + std::to_string(i) + ": choice has " + std::to_string(cand.choices[i].size()) +
                           " coordinates but M_" + comps[i].shift.to_string() + " has dimension " +
                           std::to_string(bases.back().size()));
    }
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    ModuleElement m{comps[i].shift, cand.choices[i]};
    if (m.is_zero()) return {false, "component " + std::to_string(i) + ": generator is zero"};
    if (!annihilator_free(spec, m, comps[i].vars, g)) {
      return {false, "component " + std::to_string(i) + ": generator in degree " + comps[i].shift.to_string() +
                         " is annihilated by a monomial of its subalgebra"};
    }
  }

  // Products of different degrees are independent, so condition (b) splits
  // into one square system per degree of the box.
  Box box(g);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    DegreeVector c = box.point_at(idx);
    auto rows = component_basis(spec, c);
    auto cols = columns_at(cand.decomposition, c);
    if (cols.size() != rows.size()) {
      return {false, "degree " + c.to_string() + ": " + std::to_string(cols.size()) + " Stanley spaces meet a component of dimension " +
                         std::to_string(rows.size())};
    }
    if (rows.empty()) continue;
    std::vector<std::vector<Rational>> matrix(cols.size(), std::vector<Rational>(rows.size()));
    for (std::size_t col = 0; col < cols.size(); ++col) {
      std::size_t i = cols[col];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (auto k = position_of(bases[i], rows[r].summand)) matrix[col][r] = cand.choices[i][*k];
      }
    }
    if (exact_rank(std::move(matrix)) != cols.size()) {
      return {false, "degree " + c.to_string() + ": products of the generators are linearly dependent"};
    }
  }
  return {true, {}};
}

bool necessary_filter(const ModuleSpec& spec, const HilbertDecomposition& dec, const DegreeVector& g) {
  for (const auto& comp : dec.components) {
    auto basis = component_basis(spec, comp.shift);
    if (basis.size() == 1 && !annihilator_free(spec, basis.front(), comp.vars, g)) return false;
  }
  return true;
}

namespace {

// Polynomial with integer coefficients in multilinear monomials over the
// generator coordinates; a monomial is its sorted list of variable ids.
using Poly = std::map<std::vector<std::size_t>, BigInt>;

bool mentions(const Poly& p, std::size_t var) {
  return std::any_of(p.begin(), p.end(), [&](const auto& term) {
    return std::binary_search(term.first.begin(), term.first.end(), var);
  });
}

Poly substitute(const Poly& p, std::size_t var, long value) {
  Poly out;
  for (const auto& [mono, coeff] : p) {
    auto it = std::lower_bound(mono.begin(), mono.end(), var);
    if (it != mono.end() && *it == var) {
      std::vector<std::size_t> rest(mono.begin(), it);
      rest.insert(rest.end(), it + 1, mono.end());
      out[rest] += coeff * value;
    } else {
      out[mono] += coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// Determinant of a square matrix whose nonzero entries are distinct
// variables (`pattern[r][c]` = variable id or none). Every permutation
// contributes its own monomial, so the determinant is the signed sum over
// perfect matchings and vanishes identically iff there is none.
Poly matching_determinant(const std::vector<std::vector<std::optional<std::size_t>>>& pattern) {
  const std::size_t k = pattern.size();
  Poly det;
  std::vector<std::size_t> perm;
  std::vector<char> used(k, 0);
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == k) {
      std::size_t inversions = 0;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
      }
      std::vector<std::size_t> mono;
      for (std::size_t r = 0; r < k; ++r) mono.push_back(*pattern[r][perm[r]]);
      std::sort(mono.begin(), mono.end());
      det[mono] += inversions % 2 == 0 ? 1 : -1;
      return;
    }
    for (std::size_t col = 0; col < k; ++col) {
      if (used[col] || !pattern[row][col]) continue;
      used[col] = 1;
      perm.push_back(col);
      self(self, row + 1);
      perm.pop_back();
      used[col] = 0;
    }
  };
  rec(rec, 0);
  return det;
}

}  // namespace

std::optional<StanleyCandidate> generic_stanley_check(const ModuleSpec& spec, const HilbertDecomposition& dec,
                                                      const DegreeVector& g) {
  const auto& comps = dec.components;
  std::vector<std::vector<ComponentBasisElement>> bases;
  std::vector<std::size_t> offset;
  std::size_t num_vars = 0;
  for (const auto& comp : comps) {
    require_in_box(comp.shift, g);
    bases.push_back(component_basis(spec, comp.shift));
    offset.push_back(num_vars);
    num_vars += bases.back().size();
  }

  // (a) A generic m_i survives multiplication iff some basis element of
  // M_{s_i} does; every coordinate chosen below is nonzero.
  for (std::size_t i = 0; i < comps.size(); ++i) {
    DegreeVector top = annihilator_top(comps[i].shift, comps[i].vars, g);
    bool survives = std::any_of(bases[i].begin(), bases[i].end(),
                                [&](const ComponentBasisElement& e) { return spec.summands[e.summand].nonzero_at(top); });
    if (!survives) return std::nullopt;
  }

  // (b) One determinant per degree of the box, in the generator coordinates.
  std::vector<Poly> dets;
  Box box(g);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    DegreeVector c = box.point_at(idx);
    auto rows = component_basis(spec, c);
    auto cols = columns_at(dec, c);
    if (cols.size() != rows.size()) return std::nullopt;
    if (rows.empty()) continue;
    std::vector<std::vector<std::optional<std::size_t>>> pattern(rows.size(),
                                                                 std::vector<std::optional<std::size_t>>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t col = 0; col < cols.size(); ++col) {
        std::size_t i = cols[col];
        if (auto k = position_of(bases[i], rows[r].summand)) pattern[r][col] = offset[i] + *k;
      }
    }
    Poly det = matching_determinant(pattern);
    if (det.empty()) return std::nullopt;
    dets.push_back(std::move(det));
  }

  // Fix coordinates one at a time to the smallest positive integer keeping
  // every determinant nonzero. Each determinant is affine in each variable,
  // so at most one value per determinant is excluded.
  std::vector<long> values(num_vars, 1);
  for (std::size_t v = 0; v < num_vars; ++v) {
    std::vector<std::size_t> touched;
    for (std::size_t d = 0; d < dets.size(); ++d) {
      if (mentions(dets[d], v)) touched.push_back(d);
    }
    for (long value = 1;; ++value) {
      std::vector<Poly> next;
      bool ok = true;
      for (std::size_t d : touched) {
        next.push_back(substitute(dets[d], v, value));
        if (next.back().empty()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        values[v] = value;
        for (std::size_t t = 0; t < touched.size(); ++t) dets[touched[t]] = std::move(next[t]);
        break;
      }
      if (value > static_cast<long>(touched.size()) + 1) throw std::logic_error("no admissible evaluation point");
    }
  }

  StanleyCandidate cand{dec, {}};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Rational> choice;
    for (std::size_t k = 0; k < bases[i].size(); ++k) choice.emplace_back(values[offset[i] + k]);
    cand.choices.push_back(std::move(choice));
  }
  auto verdict = check_stanley_candidate(spec, cand, g);
  if (!verdict) throw std::logic_error("generic Stanley witness failed re-certification: " + verdict.failure);
  return cand;
}

namespace {

// Interval-level form of the necessary filter: every component of the
// interval whose degree carries a one-dimensional space must have an
// annihilator-free generator.
IntervalFilter forced_generator_filter(const ModuleSpec& spec, const HilbertTable& table) {
  const DegreeVector g = table.bound();
  return [&spec, &table, g](const Interval& iv) {
    VarSet vars = z_set(iv.upper, g);
    for (const auto& c : g_set(iv, g)) {
      if (table.at(c) != 1) continue;
      if (!annihilator_free(spec, component_basis(spec, c).front(), vars, g)) return false;
    }
    return true;
  };
}

StanleyCandidate canonical_candidate(const ModuleSpec& spec, const HilbertDecomposition& dec) {
  StanleyCandidate cand{dec, {}};
  for (const auto& comp : dec.components) {
    cand.choices.push_back(ModuleElement::basis(spec, component_basis(spec, comp.shift).front()).coeffs);
  }
  return cand;
}

}  // namespace

StdepthResult stdepth_dim1(const ModuleSpec& spec) {
  const DegreeVector g = determine_g(spec);
  const HilbertTable table = hilbert_table(spec, g);
  if (table.max_value() > 1) {
    throw PreconditionError("M has a component of dimension " + std::to_string(table.max_value()) +
                            "; use the general Stanley depth computation");
  }
  if (table.is_zero()) return {static_cast<int>(spec.n), HilbertPartition{g, {}}, {}, true};

  auto filter = forced_generator_filter(spec, table);
  for (int j = static_cast<int>(spec.n); j >= 0; --j) {
    auto p = exists_partition(table, j, filter);
    if (!p) continue;
    StanleyCandidate cand = canonical_candidate(spec, induced_decomposition(*p));
    auto verdict = check_stanley_candidate(spec, cand, g);
    if (!verdict) throw std::logic_error("dim <= 1 witness failed re-certification: " + verdict.failure);
    return {j, std::move(*p), to_stanley_decomposition(cand), true};
  }
  throw std::logic_error("the singleton partition must induce a Stanley decomposition");
}

StdepthResult stdepth(const ModuleSpec& spec) {
  const DegreeVector g = determine_g(spec);
  const HilbertTable table = hilbert_table(spec, g);
  if (table.max_value() <= 1) return stdepth_dim1(spec);

  auto filter = forced_generator_filter(spec, table);
  const int upper = hdepth(table).depth;
  for (int d = upper; d >= 0; --d) {
    std::optional<StdepthResult> found;
    for_each_partition(table, SearchOptions{d, true, filter}, [&](const HilbertPartition& p) {
      HilbertDecomposition dec = induced_decomposition(p);
      if (!necessary_filter(spec, dec, g)) return true;
      if (auto cand = generic_stanley_check(spec, dec, g)) {
        found = StdepthResult{d, p, to_stanley_decomposition(*cand), false};
        return false;
      }
      return true;
    });
    if (found) return std::move(*found);
  }
  throw std::logic_error("the singleton partition must induce a Stanley decomposition");
}

}  // namespace hdepth
