#pragma once

// Stanley decompositions induced by Hilbert partitions.
//
// A Hilbert decomposition ⊕ K[Z_i](-s_i) coming from a partition of the
// table on [0,g] becomes a Stanley decomposition ⊕ m_i K[Z_i] exactly when
//   (a) no monomial of K[Z_i] kills m_i, and
//   (b) the products X^t m_i with s_i + t ⪯ g are linearly independent.
// Both conditions only involve degrees inside the box, so they are decided
// by finite exact computations.

#include <optional>
#include <string>
#include <vector>

#include "hdepth/linalg.hpp"
#include "hdepth/module_spec.hpp"
#include "hdepth/partition.hpp"

namespace hdepth {

// Homogeneous element of M_degree, as coefficients over component_basis(spec, degree).
struct ModuleElement {
  DegreeVector degree;
  std::vector<Rational> coeffs;

  bool is_zero() const;
  static ModuleElement basis(const ModuleSpec& spec, const ComponentBasisElement& e);
  // "X1 e2 + 1/2 e1"; e_k is the generator of summand k (1-based).
  std::string to_string(const ModuleSpec& spec) const;
};

struct StanleyCandidate {
  HilbertDecomposition decomposition;
  std::vector<std::vector<Rational>> choices;  // m_i coordinates, one vector per component
};

struct StanleyPart {
  ModuleElement generator;
  VarSet vars;
};

struct StanleyDecomposition {
  std::vector<StanleyPart> parts;

  int depth(std::size_t n) const;
};

StanleyDecomposition to_stanley_decomposition(const StanleyCandidate& cand);

// No monomial of K[vars] annihilates m (m ∈ M_s, s ⪯ g, m ≠ 0). Checked on
// the box [s, b] with b_j = g_j for j ∈ vars and s_j otherwise; beyond it
// multiplication is injective because M is positively g-determined.
bool annihilator_free(const ModuleSpec& spec, const ModuleElement& m, VarSet vars, const DegreeVector& g);
bool annihilator_free(const ModuleSpec& spec, const ComponentBasisElement& e, VarSet vars, const DegreeVector& g);

struct CandidateCheck {
  bool passed = false;
  std::string failure;  // empty when passed

  explicit operator bool() const noexcept { return passed; }
};

CandidateCheck check_stanley_candidate(const ModuleSpec& spec, const StanleyCandidate& cand, const DegreeVector& g);

// False when some component sits in a one-dimensional M_s whose generator
// fails the annihilator test: then no choice of generators can work.
// True is not a certificate.
bool necessary_filter(const ModuleSpec& spec, const HilbertDecomposition& dec, const DegreeVector& g);

// Decides whether some choice of generators turns `dec` into a Stanley
// decomposition (over Q). Returns a concrete, re-certified choice when one
// exists.
std::optional<StanleyCandidate> generic_stanley_check(const ModuleSpec& spec, const HilbertDecomposition& dec,
                                                      const DegreeVector& g);

struct StdepthResult {
  int depth = 0;
  HilbertPartition partition;
  StanleyDecomposition witness;
  bool used_dim1 = false;
};

// dim_K M_a ≤ 1 everywhere; throws PreconditionError otherwise.
StdepthResult stdepth_dim1(const ModuleSpec& spec);
StdepthResult stdepth(const ModuleSpec& spec);

}  // namespace hdepth
