#pragma once

// Hilbert partitions: expressions of a truncated Hilbert series as a sum of
// interval polynomials Q[a,b], and the Hilbert decompositions they induce.
//
// The search is an exact cover with multiplicities. The first point of the
// box (in lexicographic order) with positive remaining multiplicity can only
// be covered by intervals whose lower corner is that point, so each search
// level picks the multiset of upper corners for that point. Upper corners
// sharing a lower corner are chosen in non-decreasing order, which makes
// every multiset of intervals appear exactly once, already sorted.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hdepth/lattice.hpp"
#include "hdepth/table.hpp"

namespace hdepth {

using BigCount = boost::multiprecision::cpp_int;

struct HilbertPartition {
  DegreeVector g;
  std::vector<Interval> intervals;  // sorted, repetitions allowed

  std::size_t dim() const noexcept { return g.size(); }
  void canonicalize();
  // Σ Q[a,b] over the intervals.
  HilbertTable table() const;
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend auto operator<=>(const HilbertPartition&, const HilbertPartition&) = default;
  friend bool operator==(const HilbertPartition&, const HilbertPartition&) = default;
};

struct HilbertComponent {
  VarSet vars;
  DegreeVector shift;

  // "K[X1,X2](-(0,0))"
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend auto operator<=>(const HilbertComponent&, const HilbertComponent&) = default;
  friend bool operator==(const HilbertComponent&, const HilbertComponent&) = default;
};

// M ≅ ⊕ K[vars_i](-shift_i) as multigraded vector spaces.
struct HilbertDecomposition {
  std::vector<HilbertComponent> components;

  // min |vars_i|; `n` for the empty decomposition.
  int depth(std::size_t n) const;
  // Σ_i dim K[vars_i](-shift_i)_a.
  std::uint64_t value_at(const DegreeVector& a) const;
};

// min ρ(b) over the intervals; the ambient dimension for the empty partition.
int depth_of_partition(const HilbertPartition& p);

// Throws InconsistencyError unless the intervals lie in [0,g] and sum to `table`.
void validate_partition(const HilbertPartition& p, const HilbertTable& table);
bool is_partition_of(const HilbertPartition& p, const HilbertTable& table);

// Extra admissibility test for intervals during the search; returning false
// removes the interval from every branch.
using IntervalFilter = std::function<bool(const Interval&)>;

struct SearchOptions {
  int min_depth = 0;
  // Only visit partitions whose depth is exactly min_depth.
  bool exact_depth = false;
  IntervalFilter filter;
};

// Visits partitions in canonical (lexicographic) order until the visitor
// returns false.
void for_each_partition(const HilbertTable& table, const SearchOptions& options,
                        const std::function<bool(const HilbertPartition&)>& visit);

// First partition of depth ≥ d in canonical order.
std::optional<HilbertPartition> exists_partition(const HilbertTable& table, int d, const IntervalFilter& filter = {});

struct HdepthResult {
  int depth = 0;
  HilbertPartition witness;
};
HdepthResult hdepth(const HilbertTable& table);

std::vector<HilbertPartition> enumerate_partitions(const HilbertTable& table, int d,
                                                   std::optional<std::size_t> limit = std::nullopt);

// Exact number of partitions of depth ≥ d (memoized; does not materialize them).
BigCount count_partitions(const HilbertTable& table, int d);

HilbertDecomposition induced_decomposition(const HilbertPartition& p);

// Interval [s, b(s)] per component with s ⪯ g, where b(s)_j = g_j for
// j ∈ vars and s_j otherwise. Components with s ⋠ g are dropped.
HilbertPartition partition_from_decomposition(const HilbertDecomposition& dec, const DegreeVector& g);
// As above, and throws InconsistencyError unless the result partitions `table`.
HilbertPartition partition_from_decomposition(const HilbertDecomposition& dec, const HilbertTable& table);

}  // namespace hdepth
