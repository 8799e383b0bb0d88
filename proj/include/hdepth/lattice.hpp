#pragma once

// Degree vectors in Z^n with the componentwise order, intervals [a,b], and
// the quantities an interval acquires relative to a bounding degree g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hdepth {

class DegreeVector {
 public:
  using value_type = int;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  DegreeVector(std::initializer_list<int> coords) : coords_(coords) {}

  static DegreeVector zeros(std::size_t n) { return DegreeVector(std::vector<int>(n, 0)); }
  static DegreeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_nonnegative() const noexcept;

  // Checked componentwise arithmetic; throws DimensionError on length
  // mismatch and DomainError on integer overflow.
  DegreeVector operator+(const DegreeVector& other) const;
  DegreeVector operator-(const DegreeVector& other) const;

  // First `k` coordinates, and the vector padded with `extra` zeros.
  DegreeVector prefix(std::size_t k) const;
  DegreeVector padded(std::size_t extra) const;

  std::string to_string() const;

  // Lexicographic, first coordinate most significant. This is a linear
  // extension of the componentwise order and doubles as the canonical order.
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<int> coords_;
};

enum class PartialOrdering { kLessOrEqual, kGreaterOrEqual, kEqual, kIncomparable };

PartialOrdering partial_cmp(const DegreeVector& a, const DegreeVector& b);

// a ⪯ b componentwise.
bool precedes(const DegreeVector& a, const DegreeVector& b);

struct MeetJoin {
  DegreeVector meet;
  DegreeVector join;
};
MeetJoin meet_join(const DegreeVector& a, const DegreeVector& b);
DegreeVector meet(const DegreeVector& a, const DegreeVector& b);
DegreeVector join(const DegreeVector& a, const DegreeVector& b);

// Subset of variable indices {0, ..., n-1}; n is limited to 64.
class VarSet {
 public:
  static constexpr std::size_t kMaxVars = 64;

  VarSet() = default;
  explicit VarSet(std::uint64_t mask) : mask_(mask) {}
  VarSet(std::initializer_list<std::size_t> members);
  static VarSet all(std::size_t n);
  static VarSet from_indices(std::span<const std::size_t> members);

  bool contains(std::size_t i) const noexcept { return i < kMaxVars && ((mask_ >> i) & 1U) != 0; }
  void insert(std::size_t i);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  bool subset_of(VarSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::vector<std::size_t> indices() const;

  friend auto operator<=>(const VarSet&, const VarSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Exponent t has support inside `vars` (X^t ∈ K[vars]).
bool supported_in(const DegreeVector& t, VarSet vars);

struct Interval {
  DegreeVector lower;
  DegreeVector upper;

  // Throws DimensionError / DomainError unless lower ⪯ upper.
  Interval(DegreeVector lower_corner, DegreeVector upper_corner);

  bool contains(const DegreeVector& c) const;
  // Number of lattice points, ∏ (b_j - a_j + 1).
  std::uint64_t mass() const;
  // Lattice points of the interval in lexicographic order.
  std::vector<DegreeVector> points() const;
  std::string to_string() const;

  friend auto operator<=>(const Interval&, const Interval&) = default;
  friend bool operator==(const Interval&, const Interval&) = default;
};

enum class BoxOrder { kLex, kColex };

// The lattice box [0, g] with a dense lexicographic index.
class Box {
 public:
  explicit Box(DegreeVector g);

  const DegreeVector& bound() const noexcept { return g_; }
  std::size_t dim() const noexcept { return g_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool contains(const DegreeVector& c) const;
  std::size_t index_of(const DegreeVector& c) const;
  DegreeVector point_at(std::size_t index) const;

 private:
  DegreeVector g_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

// Every point of [0, g] exactly once, in an order that refines ⪯.
std::vector<DegreeVector> box_iter(const DegreeVector& g, BoxOrder order = BoxOrder::kLex);

// Z_b = {j : b_j = g_j}; requires b ⪯ g.
VarSet z_set(const DegreeVector& b, const DegreeVector& g);
// ρ(b) = |Z_b|.
int rho(const DegreeVector& b, const DegreeVector& g);

// G[a,b]: points of [a,b] frozen at a_j wherever b_j = g_j.
// Requires 0 ⪯ a ⪯ b ⪯ g.
std::vector<DegreeVector> g_set(const Interval& iv, const DegreeVector& g);

}  // namespace hdepth
