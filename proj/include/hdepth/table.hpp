#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdepth/lattice.hpp"

namespace hdepth {

// Multiplicity function on the box [0, g]; the coefficients of the
// Hilbert series truncated at g.
class HilbertTable {
 public:
  explicit HilbertTable(DegreeVector g);
  HilbertTable(DegreeVector g, std::vector<std::uint64_t> values);

  const Box& box() const noexcept { return box_; }
  const DegreeVector& bound() const noexcept { return box_.bound(); }
  std::size_t dim() const noexcept { return box_.dim(); }
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }

  std::uint64_t at(const DegreeVector& c) const { return values_[box_.index_of(c)]; }
  std::uint64_t operator[](std::size_t index) const { return values_[index]; }
  void set(const DegreeVector& c, std::uint64_t value) { values_[box_.index_of(c)] = value; }

  // Adds Q[a,b] `times` times. The interval must lie in the box.
  void add_interval(const Interval& iv, std::uint64_t times = 1);

  bool is_zero() const noexcept;
  std::uint64_t max_value() const noexcept;
  std::uint64_t total() const;

  // "1 + 2X1 + X1X2" style rendering; names default to X1..Xn.
  std::string to_polynomial(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const HilbertTable& a, const HilbertTable& b) {
    return a.box_.bound() == b.box_.bound() && a.values_ == b.values_;
  }

 private:
  Box box_;
  std::vector<std::uint64_t> values_;
};

// Q[a,b] as a table on [0, g].
HilbertTable q_interval(const Interval& iv, const DegreeVector& g);

std::string monomial_string(const DegreeVector& exponent, const std::vector<std::string>& names);

}  // namespace hdepth
