#include "hdepth/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hdepth/errors.hpp"

namespace hdepth {

namespace {

void require_same_dim(const DegreeVector& a, const DegreeVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("degree vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " combined");
  }
}

}  // namespace

DegreeVector DegreeVector::unit(std::size_t n, std::size_t i) {
  DegreeVector e = zeros(n);
  e.coords_.at(i) = 1;
  return e;
}

bool DegreeVector::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

DegreeVector DegreeVector::operator+(const DegreeVector& other) const {
  require_same_dim(*this, other);
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (__builtin_add_overflow(coords_[i], other.coords_[i], &out[i])) {
      throw DomainError("degree coordinate overflow");
    }
  }
  return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::operator-(const DegreeVector& other) const {
  require_same_dim(*this, other);
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (__builtin_sub_overflow(coords_[i], other.coords_[i], &out[i])) {
      throw DomainError("degree coordinate overflow");
    }
  }
  return DegreeVector(std::move(out));
}

DegreeVector DegreeVector::prefix(std::size_t k) const {
  if (k > size()) throw DimensionError("prefix longer than vector");
  return DegreeVector(std::vector<int>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(k)));
}

DegreeVector DegreeVector::padded(std::size_t extra) const {
  std::vector<int> out = coords_;
  out.resize(size() + extra, 0);
  return DegreeVector(std::move(out));
}

std::string DegreeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

PartialOrdering partial_cmp(const DegreeVector& a, const DegreeVector& b) {
  require_same_dim(a, b);
  bool le = true;
  bool ge = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    le = le && a[i] <= b[i];
    ge = ge && a[i] >= b[i];
  }
  if (le && ge) return PartialOrdering::kEqual;
  if (le) return PartialOrdering::kLessOrEqual;
  if (ge) return PartialOrdering::kGreaterOrEqual;
  return PartialOrdering::kIncomparable;
}

bool precedes(const DegreeVector& a, const DegreeVector& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

MeetJoin meet_join(const DegreeVector& a, const DegreeVector& b) {
  require_same_dim(a, b);
  std::vector<int> lo(a.size());
  std::vector<int> hi(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    lo[i] = std::min(a[i], b[i]);
    hi[i] = std::max(a[i], b[i]);
  }
  return {DegreeVector(std::move(lo)), DegreeVector(std::move(hi))};
}

DegreeVector meet(const DegreeVector& a, const DegreeVector& b) { return meet_join(a, b).meet; }
DegreeVector join(const DegreeVector& a, const DegreeVector& b) { return meet_join(a, b).join; }

VarSet::VarSet(std::initializer_list<std::size_t> members) {
  for (std::size_t i : members) insert(i);
}

VarSet VarSet::all(std::size_t n) {
  if (n > kMaxVars) throw DomainError("at most 64 variables are supported");
  return VarSet(n == kMaxVars ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

VarSet VarSet::from_indices(std::span<const std::size_t> members) {
  VarSet s;
  for (std::size_t i : members) s.insert(i);
  return s;
}

void VarSet::insert(std::size_t i) {
  if (i >= kMaxVars) throw DomainError("variable index " + std::to_string(i) + " out of range");
  mask_ |= std::uint64_t{1} << i;
}

std::size_t VarSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool supported_in(const DegreeVector& t, VarSet vars) {
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] != 0 && !vars.contains(j)) return false;
  }
  return true;
}

Interval::Interval(DegreeVector lower_corner, DegreeVector upper_corner)
    : lower(std::move(lower_corner)), upper(std::move(upper_corner)) {
  if (!precedes(lower, upper)) {
    throw DomainError("interval lower corner " + lower.to_string() + " is not below upper corner " +
                      upper.to_string());
  }
}

bool Interval::contains(const DegreeVector& c) const { return precedes(lower, c) && precedes(c, upper); }

std::uint64_t Interval::mass() const {
  std::uint64_t m = 1;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    auto side = static_cast<std::uint64_t>(upper[j] - lower[j]) + 1;
    if (__builtin_mul_overflow(m, side, &m)) throw DomainError("interval too large");
  }
  return m;
}

std::vector<DegreeVector> Interval::points() const {
  std::vector<DegreeVector> out;
  DegreeVector c = lower;
  const std::size_t n = c.size();
  while (true) {
    out.push_back(c);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (c[j] < upper[j]) {
        ++c[j];
        for (std::size_t k = j + 1; k < n; ++k) c[k] = lower[k];
        break;
      }
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::string Interval::to_string() const { return "[" + lower.to_string() + "," + upper.to_string() + "]"; }

Box::Box(DegreeVector g) : g_(std::move(g)), strides_(g_.size(), 1) {
  if (!g_.is_nonnegative()) throw DomainError("box bound " + g_.to_string() + " has a negative coordinate");
  for (std::size_t j = g_.size(); j > 0; --j) {
    strides_[j - 1] = size_;
    auto side = static_cast<std::size_t>(g_[j - 1]) + 1;
    if (__builtin_mul_overflow(size_, side, &size_)) throw DomainError("box too large");
  }
}

bool Box::contains(const DegreeVector& c) const {
  if (c.size() != g_.size()) return false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0 || c[j] > g_[j]) return false;
  }
  return true;
}

std::size_t Box::index_of(const DegreeVector& c) const {
  if (c.size() != g_.size()) throw DimensionError("point dimension does not match box");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] < 0 || c[j] > g_[j]) {
      throw DomainError("point " + c.to_string() + " outside box [0," + g_.to_string() + "]");
    }
    idx += static_cast<std::size_t>(c[j]) * strides_[j];
  }
  return idx;
}

DegreeVector Box::point_at(std::size_t index) const {
  std::vector<int> c(g_.size());
  for (std::size_t j = 0; j < g_.size(); ++j) {
    c[j] = static_cast<int>(index / strides_[j]);
    index %= strides_[j];
  }
  return DegreeVector(std::move(c));
}

std::vector<DegreeVector> box_iter(const DegreeVector& g, BoxOrder order) {
  Box box(g);
  std::vector<DegreeVector> out;
  out.reserve(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) out.push_back(box.point_at(i));
  if (order == BoxOrder::kColex) {
    std::sort(out.begin(), out.end(), [](const DegreeVector& a, const DegreeVector& b) {
      return std::lexicographical_compare(a.coords().rbegin(), a.coords().rend(), b.coords().rbegin(),
                                          b.coords().rend());
    });
  }
  return out;
}

VarSet z_set(const DegreeVector& b, const DegreeVector& g) {
  if (!precedes(b, g)) throw DomainError(b.to_string() + " is not below " + g.to_string());
  VarSet z;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == g[j]) z.insert(j);
  }
  return z;
}

int rho(const DegreeVector& b, const DegreeVector& g) { return static_cast<int>(z_set(b, g).size()); }

std::vector<DegreeVector> g_set(const Interval& iv, const DegreeVector& g) {
  if (!iv.lower.is_nonnegative() || !precedes(iv.upper, g)) {
    throw DomainError("interval " + iv.to_string() + " not inside [0," + g.to_string() + "]");
  }
  DegreeVector top = iv.upper;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (iv.upper[j] == g[j]) top[j] = iv.lower[j];
  }
  return Interval(iv.lower, top).points();
}

}  // namespace hdepth
