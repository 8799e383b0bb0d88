#include "hdepth/table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hdepth/errors.hpp"

namespace hdepth {

HilbertTable::HilbertTable(DegreeVector g) : box_(std::move(g)), values_(box_.size(), 0) {}

HilbertTable::HilbertTable(DegreeVector g, std::vector<std::uint64_t> values)
    : box_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != box_.size()) throw DimensionError("table size does not match box");
}

void HilbertTable::add_interval(const Interval& iv, std::uint64_t times) {
  if (!box_.contains(iv.lower) || !box_.contains(iv.upper)) {
    throw DomainError("interval " + iv.to_string() + " leaves box [0," + bound().to_string() + "]");
  }
  for (const auto& c : iv.points()) {
    auto& v = values_[box_.index_of(c)];
    if (__builtin_add_overflow(v, times, &v)) throw DomainError("table multiplicity overflow");
  }
}

bool HilbertTable::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](std::uint64_t v) { return v == 0; });
}

std::uint64_t HilbertTable::max_value() const noexcept {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::uint64_t HilbertTable::total() const {
  std::uint64_t sum = 0;
  for (auto v : values_) {
    if (__builtin_add_overflow(sum, v, &sum)) throw DomainError("table total overflow");
  }
  return sum;
}

std::string monomial_string(const DegreeVector& exponent, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < exponent.size(); ++j) {
    if (exponent[j] == 0) continue;
    out += j < names.size() ? names[j] : "X" + std::to_string(j + 1);
    if (exponent[j] > 1) out += "^" + std::to_string(exponent[j]);
  }
  return out.empty() ? "1" : out;
}

std::string HilbertTable::to_polynomial(const std::vector<std::string>& names) const {
  // Terms ordered by total degree; within a degree X1 comes before X2.
  std::vector<std::size_t> order(values_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> degree(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    auto p = box_.point_at(i);
    degree[i] = std::accumulate(p.begin(), p.end(), 0);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] != degree[b] ? degree[a] < degree[b] : a > b;
  });

  std::ostringstream os;
  bool first = true;
  for (std::size_t i : order) {
    if (values_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono = monomial_string(box_.point_at(i), names);
    if (mono == "1") {
      os << values_[i];
    } else {
      if (values_[i] != 1) os << values_[i];
      os << mono;
    }
  }
  return first ? "0" : os.str();
}

HilbertTable q_interval(const Interval& iv, const DegreeVector& g) {
  HilbertTable t(g);
  t.add_interval(iv);
  return t;
}

}  // namespace hdepth
