#include "hdepth/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hdepth/errors.hpp"

namespace hdepth {

void HilbertPartition::canonicalize() { std::sort(intervals.begin(), intervals.end()); }

HilbertTable HilbertPartition::table() const {
  HilbertTable t(g);
  for (const auto& iv : intervals) t.add_interval(iv);
  return t;
}

std::string HilbertPartition::to_string(const std::vector<std::string>& names) const {
  if (intervals.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) os << " + ";
    HilbertTable q = q_interval(intervals[i], g);
    std::string poly = q.to_polynomial(names);
    if (intervals[i].mass() > 1) {
      os << '(' << poly << ')';
    } else {
      os << poly;
    }
  }
  return os.str();
}

std::string HilbertComponent::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "K[";
  bool first = true;
  for (std::size_t j : vars.indices()) {
    if (!first) os << ',';
    first = false;
    os << (j < names.size() ? names[j] : "X" + std::to_string(j + 1));
  }
  os << "](-" << shift.to_string() << ')';
  return os.str();
}

int HilbertDecomposition::depth(std::size_t n) const {
  int d = static_cast<int>(n);
  for (const auto& c : components) d = std::min(d, static_cast<int>(c.vars.size()));
  return d;
}

std::uint64_t HilbertDecomposition::value_at(const DegreeVector& a) const {
  std::uint64_t v = 0;
  for (const auto& c : components) {
    if (precedes(c.shift, a) && supported_in(a - c.shift, c.vars)) ++v;
  }
  return v;
}

int depth_of_partition(const HilbertPartition& p) {
  int d = static_cast<int>(p.dim());
  for (const auto& iv : p.intervals) d = std::min(d, rho(iv.upper, p.g));
  return d;
}

void validate_partition(const HilbertPartition& p, const HilbertTable& table) {
  if (p.g != table.bound()) {
    throw InconsistencyError("partition bound " + p.g.to_string() + " differs from table bound " +
                             table.bound().to_string());
  }
  HilbertTable sum(p.g);
  for (const auto& iv : p.intervals) {
    if (!table.box().contains(iv.lower) || !table.box().contains(iv.upper)) {
      throw InconsistencyError("interval " + iv.to_string() + " leaves the box");
    }
    sum.add_interval(iv);
  }
  if (!(sum == table)) throw InconsistencyError("intervals do not sum to the table");
}

bool is_partition_of(const HilbertPartition& p, const HilbertTable& table) {
  try {
    validate_partition(p, table);
    return true;
  } catch (const InconsistencyError&) {
    return false;
  }
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Candidate {
  std::size_t upper;               // box index of the upper corner
  std::vector<std::size_t> cells;  // box indices covered
  int rho;
};

// Backtracking state for one table and one depth bound.
class PartitionSearch {
 public:
  PartitionSearch(const HilbertTable& table, const SearchOptions& options)
      : table_(table), box_(table.box()), options_(options), rem_(table.values()) {
    const DegreeVector& g = box_.bound();
    candidates_.resize(box_.size());
    for (std::size_t p = 0; p < box_.size(); ++p) {
      if (table_[p] == 0) continue;
      DegreeVector lower = box_.point_at(p);
      for (const auto& upper : Interval(lower, g).points()) {
        int r = rho(upper, g);
        if (r < options_.min_depth) continue;
        Interval iv(lower, upper);
        if (options_.filter && !options_.filter(iv)) continue;
        Candidate cand{box_.index_of(upper), {}, r};
        bool supported = true;
        for (const auto& c : iv.points()) {
          std::size_t idx = box_.index_of(c);
          if (table_[idx] == 0) {
            supported = false;
            break;
          }
          cand.cells.push_back(idx);
        }
        if (supported) candidates_[p].push_back(std::move(cand));
      }
    }
    feasible_ = static_check();
  }

  bool feasible() const noexcept { return feasible_; }

  void run(const std::function<bool(const HilbertPartition&)>& visit) {
    if (!feasible_) return;
    visit_ = &visit;
    dfs(0, false);
  }

  BigCount count() {
    if (!feasible_) return 0;
    return count_from(0);
  }

 private:
  enum class Outcome { kNoLeaf, kLeaf, kStop };

  // Every positive cell must be covered by some admissible interval.
  bool static_check() const {
    std::vector<char> coverable(box_.size(), 0);
    for (const auto& list : candidates_) {
      for (const auto& cand : list) {
        for (auto idx : cand.cells) coverable[idx] = 1;
      }
    }
    for (std::size_t i = 0; i < box_.size(); ++i) {
      if (table_[i] > 0 && !coverable[i]) return false;
    }
    return true;
  }

  std::size_t next_positive(std::size_t from) const {
    while (from < rem_.size() && rem_[from] == 0) ++from;
    return from;
  }

  bool fits(const Candidate& cand) const {
    return std::all_of(cand.cells.begin(), cand.cells.end(), [&](std::size_t i) { return rem_[i] > 0; });
  }
  void take(const Candidate& cand) {
    for (auto i : cand.cells) --rem_[i];
  }
  void give(const Candidate& cand) {
    for (auto i : cand.cells) ++rem_[i];
  }

  std::vector<std::uint64_t> key(bool hit) const {
    std::vector<std::uint64_t> k = rem_;
    if (options_.exact_depth) k.push_back(hit ? 1 : 0);
    return k;
  }

  Outcome leaf(bool hit) {
    if (options_.exact_depth && !hit) return Outcome::kNoLeaf;
    HilbertPartition p{box_.bound(), {}};
    p.intervals.reserve(chosen_.size());
    for (const auto& [lower, cand] : chosen_) {
      p.intervals.emplace_back(box_.point_at(lower), box_.point_at(candidates_[lower][cand].upper));
    }
    return (*visit_)(p) ? Outcome::kLeaf : Outcome::kStop;
  }

  // `hit`: some chosen interval has ρ equal to min_depth.
  Outcome dfs(std::size_t from, bool hit) {
    std::size_t p = next_positive(from);
    if (p == rem_.size()) return leaf(hit);
    auto k = key(hit);
    if (dead_.count(k)) return Outcome::kNoLeaf;
    Outcome out = choose(p, 0, hit);
    if (out == Outcome::kNoLeaf) dead_.insert(std::move(k));
    return out;
  }

  Outcome choose(std::size_t p, std::size_t start, bool hit) {
    if (rem_[p] == 0) return dfs(p + 1, hit);
    bool any = false;
    const auto& list = candidates_[p];
    for (std::size_t j = start; j < list.size(); ++j) {
      const Candidate& cand = list[j];
      if (!fits(cand)) continue;
      take(cand);
      chosen_.emplace_back(p, j);
      Outcome out = choose(p, j, hit || cand.rho == options_.min_depth);
      chosen_.pop_back();
      give(cand);
      if (out == Outcome::kStop) return out;
      any = any || out == Outcome::kLeaf;
    }
    return any ? Outcome::kLeaf : Outcome::kNoLeaf;
  }

  BigCount count_from(std::size_t from) {
    std::size_t p = next_positive(from);
    if (p == rem_.size()) return 1;
    auto it = counts_.find(rem_);
    if (it != counts_.end()) return it->second;
    auto snapshot = rem_;
    BigCount c = count_choose(p, 0);
    counts_.emplace(std::move(snapshot), c);
    return c;
  }

  BigCount count_choose(std::size_t p, std::size_t start) {
    if (rem_[p] == 0) return count_from(p + 1);
    BigCount total = 0;
    const auto& list = candidates_[p];
    for (std::size_t j = start; j < list.size(); ++j) {
      if (!fits(list[j])) continue;
      take(list[j]);
      total += count_choose(p, j);
      give(list[j]);
    }
    return total;
  }

  const HilbertTable& table_;
  const Box& box_;
  SearchOptions options_;
  std::vector<std::uint64_t> rem_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> dead_;
  std::unordered_map<std::vector<std::uint64_t>, BigCount, VectorHash> counts_;
  const std::function<bool(const HilbertPartition&)>* visit_ = nullptr;
  bool feasible_ = true;
};

}  // namespace

void for_each_partition(const HilbertTable& table, const SearchOptions& options,
                        const std::function<bool(const HilbertPartition&)>& visit) {
  if (options.min_depth < 0 || options.min_depth > static_cast<int>(table.dim())) {
    throw DomainError("depth bound " + std::to_string(options.min_depth) + " outside [0, n]");
  }
  if (table.is_zero()) {
    if (!options.exact_depth || options.min_depth == static_cast<int>(table.dim())) {
      visit(HilbertPartition{table.bound(), {}});
    }
    return;
  }
  PartitionSearch search(table, options);
  search.run(visit);
}

std::optional<HilbertPartition> exists_partition(const HilbertTable& table, int d, const IntervalFilter& filter) {
  std::optional<HilbertPartition> found;
  for_each_partition(table, SearchOptions{d, false, filter}, [&](const HilbertPartition& p) {
    found = p;
    return false;
  });
  return found;
}

HdepthResult hdepth(const HilbertTable& table) {
  for (int d = static_cast<int>(table.dim()); d >= 0; --d) {
    if (auto p = exists_partition(table, d)) return {d, std::move(*p)};
  }
  // Unreachable for a valid table: all singletons always partition it.
  throw std::logic_error("no Hilbert partition found");
}

std::vector<HilbertPartition> enumerate_partitions(const HilbertTable& table, int d, std::optional<std::size_t> limit) {
  std::vector<HilbertPartition> out;
  if (limit && *limit == 0) return out;
  for_each_partition(table, SearchOptions{d, false, {}}, [&](const HilbertPartition& p) {
    out.push_back(p);
    return !limit || out.size() < *limit;
  });
  return out;
}

BigCount count_partitions(const HilbertTable& table, int d) {
  if (d < 0 || d > static_cast<int>(table.dim())) throw DomainError("depth bound outside [0, n]");
  if (table.is_zero()) return 1;
  PartitionSearch search(table, SearchOptions{d, false, {}});
  return search.count();
}

HilbertDecomposition induced_decomposition(const HilbertPartition& p) {
  HilbertDecomposition dec;
  for (const auto& iv : p.intervals) {
    VarSet vars = z_set(iv.upper, p.g);
    for (auto& c : g_set(iv, p.g)) dec.components.push_back({vars, std::move(c)});
  }
  return dec;
}

HilbertPartition partition_from_decomposition(const HilbertDecomposition& dec, const DegreeVector& g) {
  HilbertPartition p{g, {}};
  for (const auto& comp : dec.components) {
    if (comp.shift.size() != g.size()) throw DimensionError("component shift has wrong length");
    if (!comp.shift.is_nonnegative() || !precedes(comp.shift, g)) continue;
    DegreeVector upper = comp.shift;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (comp.vars.contains(j)) upper[j] = g[j];
    }
    p.intervals.emplace_back(comp.shift, std::move(upper));
  }
  p.canonicalize();
  return p;
}

HilbertPartition partition_from_decomposition(const HilbertDecomposition& dec, const HilbertTable& table) {
  HilbertPartition p = partition_from_decomposition(dec, table.bound());
  try {
    validate_partition(p, table);
  } catch (const InconsistencyError& e) {
    throw InconsistencyError(std::string("not a Hilbert decomposition of this table: ") + e.what());
  }
  return p;
}

}  // namespace hdepth
