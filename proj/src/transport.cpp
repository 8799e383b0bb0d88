#include "hdepth/transport.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hdepth/errors.hpp"

namespace hdepth {

namespace {

MonomialIdeal pad_ideal(const MonomialIdeal& ideal, std::size_t m) {
  std::vector<DegreeVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.padded(m));
  return MonomialIdeal(ideal.dim() + m, std::move(gens));
}

}  // namespace

ModuleSpec extend_scalars(const ModuleSpec& spec, std::size_t m) {
  if (m < 1) throw DomainError("scalar extension needs at least one new variable");
  ModuleSpec out;
  out.n = spec.n + m;
  out.var_names = spec.var_names;
  std::set<std::string> taken(spec.var_names.begin(), spec.var_names.end());
  for (std::size_t i = 1; i <= m; ++i) {
    std::string name = "X" + std::to_string(spec.n + i);
    while (taken.count(name)) name += "'";
    taken.insert(name);
    out.var_names.push_back(name);
  }
  for (const auto& s : spec.summands) {
    out.summands.push_back({s.shift.padded(m), pad_ideal(s.numerator, m), pad_ideal(s.denominator, m)});
  }
  if (spec.g_override) out.g_override = spec.g_override->padded(m);
  out.validate();
  return out;
}

ModuleSpec specialize_ideal_spec(const ModuleSpec& spec, std::size_t keep) {
  if (keep > spec.n) throw DomainError("cannot keep more variables than the module has");
  for (std::size_t k = 0; k < spec.summands.size(); ++k) {
    const auto& s = spec.summands[k];
    if (std::any_of(s.shift.begin(), s.shift.end(), [](int c) { return c != 0; }) || !s.denominator.is_zero()) {
      throw UnsupportedError("specialization is implemented for direct sums of monomial ideals only (summand " +
                             std::to_string(k) + " has a shift or a denominator)");
    }
  }
  ModuleSpec out;
  out.n = keep;
  out.var_names.assign(spec.var_names.begin(), spec.var_names.begin() + static_cast<std::ptrdiff_t>(keep));
  for (const auto& s : spec.summands) {
    std::vector<DegreeVector> gens;
    for (const auto& g : s.numerator.generators()) gens.push_back(g.prefix(keep));
    out.summands.push_back({DegreeVector::zeros(keep), MonomialIdeal(keep, std::move(gens)), MonomialIdeal::zero(keep)});
  }
  if (spec.g_override) out.g_override = spec.g_override->prefix(keep);
  out.validate();
  return out;
}

HilbertTable WeightedPartition::table() const {
  HilbertTable t(g);
  for (const auto& [iv, mult] : intervals) t.add_interval(iv, mult);
  return t;
}

WeightedPartition specialize_partition(const HilbertPartition& p, std::size_t keep) {
  if (keep > p.dim()) throw DomainError("cannot keep more variables than the partition has");
  std::map<Interval, std::uint64_t> merged;
  for (const auto& iv : p.intervals) {
    std::uint64_t mult = 1;
    for (std::size_t i = keep; i < p.dim(); ++i) {
      auto side = static_cast<std::uint64_t>(iv.upper[i] - iv.lower[i]) + 1;
      if (__builtin_mul_overflow(mult, side, &mult)) throw DomainError("multiplicity overflow");
    }
    merged[Interval(iv.lower.prefix(keep), iv.upper.prefix(keep))] += mult;
  }
  WeightedPartition out{p.g.prefix(keep), {}};
  for (auto& [iv, mult] : merged) out.intervals.emplace_back(iv, mult);
  return out;
}

HilbertTable collapse_table(const HilbertTable& table, std::size_t keep) {
  if (keep > table.dim()) throw DomainError("cannot keep more variables than the table has");
  HilbertTable out(table.bound().prefix(keep));
  std::vector<std::uint64_t> values(out.box().size(), 0);
  for (std::size_t i = 0; i < table.box().size(); ++i) {
    values[out.box().index_of(table.box().point_at(i).prefix(keep))] += table[i];
  }
  return HilbertTable(out.bound(), std::move(values));
}

}  // namespace hdepth
