#pragma once

// Moving modules, tables, and partitions along K[X_1..X_n] -> K[X_1..X_{n+m}]
// (scalar extension) and along X_i -> 1 for i > n (specialization).

#include <cstdint>
#include <utility>
#include <vector>

#include "hdepth/module_spec.hpp"
#include "hdepth/partition.hpp"

namespace hdepth {

// M ⊗_K K[X_{n+1}, ..., X_{n+m}]: every degree vector is padded with m zeros.
ModuleSpec extend_scalars(const ModuleSpec& spec, std::size_t m);

// Image of a direct sum of plain monomial ideals (shift 0, denominator 0)
// under X_i -> 1 for i ≥ keep. Throws UnsupportedError for other specs.
ModuleSpec specialize_ideal_spec(const ModuleSpec& spec, std::size_t keep);

// A partition whose intervals carry integer multiplicities.
struct WeightedPartition {
  DegreeVector g;
  std::vector<std::pair<Interval, std::uint64_t>> intervals;  // sorted, distinct

  HilbertTable table() const;
};

// [a', b'] -> ([a'|keep, b'|keep], ∏_{i ≥ keep} (b'_i - a'_i + 1)), equal
// images merged.
WeightedPartition specialize_partition(const HilbertPartition& p, std::size_t keep);

// Sum of the table over the dropped coordinates: H(X_1..X_keep, 1, ..., 1).
HilbertTable collapse_table(const HilbertTable& table, std::size_t keep);

}  // namespace hdepth
