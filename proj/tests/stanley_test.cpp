#include "hdepth/stanley.hpp"

#include <random>

#include <gtest/gtest.h>

#include "hdepth/errors.hpp"
#include "hdepth/transport.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

namespace hdepth {
namespace {

using testing::spec_of;

HilbertDecomposition decomposition(std::vector<HilbertComponent> comps) { return {std::move(comps)}; }

std::vector<Rational> q(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

// Two known Stanley decompositions of R ⊕ (X1,X2)R:
//   (1,0)K[X1,X2] ⊕ (0,X1)K[X1,X2] ⊕ (0,X2)K[X2]
//   (1,0)K[X1,X2] ⊕ (0,X1X2)K[X1,X2] ⊕ (0,X1)K[X1] ⊕ (0,X2)K[X2]
StanleyCandidate listed_candidate_p1() {
  return {decomposition({{VarSet{0, 1}, {0, 0}}, {VarSet{0, 1}, {1, 0}}, {VarSet{1}, {0, 1}}}),
          {q({1}), q({0, 1}), q({0, 1})}};
}

StanleyCandidate listed_candidate_p3() {
  return {decomposition({{VarSet{0, 1}, {0, 0}}, {VarSet{0, 1}, {1, 1}}, {VarSet{0}, {1, 0}}, {VarSet{1}, {0, 1}}}),
          {q({1}), q({0, 1}), q({0, 1}), q({0, 1})}};
}

TEST(AnnihilatorFree, Examples) {
  auto mixed = spec_of(testing::kMixedQuotients);
  ModuleElement k_gen{{0, 0}, q({1})};
  EXPECT_FALSE(annihilator_free(mixed, k_gen, VarSet{1}, {1, 1}));
  EXPECT_TRUE(annihilator_free(mixed, k_gen, VarSet{}, {1, 1}));

  auto ideal = spec_of(testing::kMaximalIdeal);
  EXPECT_TRUE(annihilator_free(ideal, ComponentBasisElement{0, {1, 0}}, VarSet::all(2), {1, 1}));

  // X2 R/(X1) is killed by X1 but not by X2.
  EXPECT_FALSE(annihilator_free(mixed, ComponentBasisElement{1, {0, 1}}, VarSet{0}, {1, 1}));
  EXPECT_TRUE(annihilator_free(mixed, ComponentBasisElement{1, {0, 1}}, VarSet{1}, {1, 1}));
  // A combination survives X1 as soon as it involves the free summand.
  EXPECT_TRUE(annihilator_free(mixed, ModuleElement{{0, 1}, q({1, 1})}, VarSet::all(2), {1, 1}));

  EXPECT_THROW(annihilator_free(mixed, ModuleElement{{0, 0}, q({0})}, VarSet{}, {1, 1}), PreconditionError);
  EXPECT_THROW(annihilator_free(mixed, ModuleElement{{2, 0}, q({})}, VarSet{}, {1, 1}), DomainError);
}

TEST(CheckStanleyCandidate, ListedCertificates) {
  auto free_max = spec_of(testing::kFreePlusMaximalIdeal);
  EXPECT_TRUE(check_stanley_candidate(free_max, listed_candidate_p1(), {1, 1}));
  EXPECT_TRUE(check_stanley_candidate(free_max, listed_candidate_p3(), {1, 1}));
}

TEST(CheckStanleyCandidate, DetectsDependence) {
  auto free_max = spec_of(testing::kFreePlusMaximalIdeal);
  // (1,X1) instead of (0,X1): X1·(1,0) and (1,X1) are independent, but
  // X1·(1,0) and (1,0)·X1 from a repeated choice are not.
  auto cand = listed_candidate_p1();
  cand.choices[1] = q({1, 0});
  auto verdict = check_stanley_candidate(free_max, cand, {1, 1});
  EXPECT_FALSE(verdict);
  EXPECT_NE(verdict.failure.find("linearly dependent"), std::string::npos);

  cand.choices[1] = q({1, 1});
  EXPECT_TRUE(check_stanley_candidate(free_max, cand, {1, 1}));

  cand.choices[1] = q({0, 0});
  EXPECT_FALSE(check_stanley_candidate(free_max, cand, {1, 1}));

  cand.choices[1] = q({1});
  EXPECT_THROW(check_stanley_candidate(free_max, cand, {1, 1}), DimensionError);
}

TEST(CheckStanleyCandidate, SecondExampleHasNoCertificate) {
  auto mixed = spec_of(testing::kMixedQuotients);
  auto dec = decomposition({{VarSet{1}, {0, 0}}, {VarSet{0, 1}, {0, 1}}});
  for (int a : {1, -2, 7}) {
    for (int b : {0, 1, 3}) {
      for (int c : {0, 1, -1}) {
        if (b == 0 && c == 0) continue;
        StanleyCandidate cand{dec, {q({a}), q({b, c})}};
        auto verdict = check_stanley_candidate(mixed, cand, {1, 1});
        EXPECT_FALSE(verdict);
        EXPECT_NE(verdict.failure.find("component 0"), std::string::npos);
      }
    }
  }
}

TEST(NecessaryFilter, Examples) {
  auto mixed = spec_of(testing::kMixedQuotients);
  auto d1 = decomposition({{VarSet{1}, {0, 0}}, {VarSet{0, 1}, {0, 1}}});
  auto d2 = decomposition({{VarSet{1}, {0, 0}}, {VarSet{1}, {0, 1}}, {VarSet{0, 1}, {1, 1}}});
  EXPECT_FALSE(necessary_filter(mixed, d1, {1, 1}));
  EXPECT_FALSE(necessary_filter(mixed, d2, {1, 1}));

  auto fine = decomposition({{VarSet{}, {0, 0}}, {VarSet{}, {0, 1}}, {VarSet{}, {0, 1}}, {VarSet{}, {1, 1}}});
  EXPECT_TRUE(necessary_filter(mixed, fine, {1, 1}));
}

TEST(GenericStanleyCheck, Examples) {
  auto free_max = spec_of(testing::kFreePlusMaximalIdeal);
  auto found = generic_stanley_check(free_max, listed_candidate_p1().decomposition, {1, 1});
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(check_stanley_candidate(free_max, *found, {1, 1}));
  EXPECT_TRUE(generic_stanley_check(free_max, listed_candidate_p3().decomposition, {1, 1}).has_value());

  auto mixed = spec_of(testing::kMixedQuotients);
  EXPECT_FALSE(generic_stanley_check(mixed, decomposition({{VarSet{1}, {0, 0}}, {VarSet{0, 1}, {0, 1}}}), {1, 1}));

  auto free = spec_of(testing::kFree2);
  auto one = generic_stanley_check(free, decomposition({{VarSet::all(2), {0, 0}}}), {0, 0});
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->choices, std::vector<std::vector<Rational>>{q({1})});
}

// Two copies of R: the repeated component needs distinct generators, which
// the deterministic point search has to find.
TEST(GenericStanleyCheck, SeparatesRepeatedComponents) {
  auto twice = parse_spec(R"({"vars": ["X"], "summands": [{"shift": [0]}, {"shift": [0]}]})");
  auto dec = decomposition({{VarSet{0}, {0}}, {VarSet{0}, {0}}});
  auto found = generic_stanley_check(twice, dec, {0});
  ASSERT_TRUE(found.has_value());
  EXPECT_NE(found->choices[0], found->choices[1]);
  EXPECT_TRUE(check_stanley_candidate(twice, *found, {0}));
}

TEST(GenericStanleyCheck, AgreesWithRandomChoicesAndFilter) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    auto spec = testing::random_spec(rng, 2, 3, 1, 1);
    auto g = determine_g(spec);
    auto table = hilbert_table(spec, g);
    for (const auto& p : enumerate_partitions(table, 0, 30)) {
      auto dec = induced_decomposition(p);
      auto generic = generic_stanley_check(spec, dec, g);
      if (!necessary_filter(spec, dec, g)) EXPECT_FALSE(generic.has_value());
      for (int sample = 0; sample < 5; ++sample) {
        StanleyCandidate cand{dec, {}};
        bool zero = false;
        for (const auto& comp : dec.components) {
          std::vector<Rational> choice;
          for (std::size_t k = 0; k < component_basis(spec, comp.shift).size(); ++k) choice.emplace_back(coeff(rng));
          zero = zero || std::all_of(choice.begin(), choice.end(), [](const Rational& x) { return x == 0; });
          cand.choices.push_back(std::move(choice));
        }
        if (zero) continue;
        if (check_stanley_candidate(spec, cand, g)) ASSERT_TRUE(generic.has_value()) << spec_to_json(spec);
      }
    }
  }
}

TEST(StdepthDim1, Examples) {
  auto ideal = stdepth_dim1(spec_of(testing::kMaximalIdeal));
  EXPECT_EQ(ideal.depth, 1);
  EXPECT_EQ(ideal.witness.depth(2), 1);
  EXPECT_EQ(stdepth_dim1(spec_of(testing::kFree2)).depth, 2);
  EXPECT_EQ(stdepth_dim1(spec_of(testing::kResidueField)).depth, 0);
  EXPECT_THROW(stdepth_dim1(spec_of(testing::kFreePlusMaximalIdeal)), PreconditionError);
}

TEST(StdepthDim1, MaximalIdealAgreesWithNaiveOracle) {
  auto spec = spec_of(testing::kMaximalIdeal);
  auto table = hilbert_table(spec, {1, 1});
  auto naive = testing::naive_partitions(table, true);
  // Every Hilbert partition induces a Stanley decomposition here (dim ≤ 1
  // and the ideal is torsion-free), so the naive maximum depth is the answer.
  int best = -1;
  for (const auto& ivs : naive.partitions) {
    HilbertPartition p{{1, 1}, ivs};
    if (necessary_filter(spec, induced_decomposition(p), {1, 1})) best = std::max(best, depth_of_partition(p));
  }
  EXPECT_EQ(best, 1);
  EXPECT_EQ(stdepth_dim1(spec).depth, best);
}

TEST(Stdepth, Examples) {
  auto r35 = stdepth(spec_of(testing::kFreePlusMaximalIdeal));
  EXPECT_EQ(r35.depth, 1);
  EXPECT_FALSE(r35.used_dim1);
  auto r36 = stdepth(spec_of(testing::kMixedQuotients));
  EXPECT_EQ(r36.depth, 0);
  auto xyxz = stdepth(spec_of(testing::kIdealXYXZ));
  EXPECT_EQ(xyxz.depth, 2);
  EXPECT_TRUE(xyxz.used_dim1);

  ModuleSpec zero{2, {"X1", "X2"}, {}, std::nullopt};
  EXPECT_EQ(stdepth(zero).depth, 2);
}

TEST(Stdepth, WitnessIsCertified) {
  for (const char* text : {testing::kFreePlusMaximalIdeal, testing::kMixedQuotients, testing::kIdealXYXZ}) {
    auto spec = spec_of(text);
    auto g = determine_g(spec);
    auto res = stdepth(spec);
    EXPECT_EQ(res.witness.depth(spec.n), res.depth);
    StanleyCandidate cand{{}, {}};
    for (const auto& part : res.witness.parts) {
      cand.decomposition.components.push_back({part.vars, part.generator.degree});
      cand.choices.push_back(part.generator.coeffs);
    }
    EXPECT_TRUE(check_stanley_candidate(spec, cand, g));
  }
}

// Post-hoc reference: every partition, no interval pruning, generic check.
int reference_stdepth(const ModuleSpec& spec) {
  auto g = determine_g(spec);
  auto table = hilbert_table(spec, g);
  int best = -1;
  for (const auto& p : enumerate_partitions(table, 0)) {
    int d = depth_of_partition(p);
    if (d <= best) continue;
    if (generic_stanley_check(spec, induced_decomposition(p), g)) best = d;
  }
  return best;
}

TEST(Stdepth, AgreesWithPostHocReference) {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    auto spec = testing::random_spec(rng, 2, 3, 1, 1);
    auto res = stdepth(spec);
    EXPECT_EQ(res.depth, reference_stdepth(spec)) << spec_to_json(spec);
    EXPECT_LE(res.depth, hdepth(hilbert_table(spec, determine_g(spec))).depth);
  }
}

TEST(StdepthDim1, IntervalPruningMatchesPostHocFiltering) {
  std::mt19937 rng(31337);
  int checked = 0;
  while (checked < 40) {
    auto spec = testing::random_spec(rng, 2, 2, 2, 1);
    auto g = determine_g(spec);
    auto table = hilbert_table(spec, g);
    if (table.max_value() > 1) continue;
    int post_hoc = -1;
    for (int j = static_cast<int>(spec.n); j >= 0 && post_hoc < 0; --j) {
      for (const auto& p : enumerate_partitions(table, j)) {
        if (necessary_filter(spec, induced_decomposition(p), g)) {
          post_hoc = j;
          break;
        }
      }
    }
    if (table.is_zero()) post_hoc = static_cast<int>(spec.n);
    EXPECT_EQ(stdepth_dim1(spec).depth, post_hoc) << spec_to_json(spec);
    ++checked;
  }
}

TEST(Stdepth, ScalarExtensionAddsM) {
  for (const char* text : {testing::kFreePlusMaximalIdeal, testing::kMixedQuotients, testing::kIdealXYXZ}) {
    auto spec = spec_of(text);
    int base = stdepth(spec).depth;
    for (std::size_t m : {1U, 2U}) EXPECT_EQ(stdepth(extend_scalars(spec, m)).depth, base + static_cast<int>(m));
  }
}

TEST(Stdepth, SpecializationInequalities) {
  std::mt19937 rng(99);
  std::vector<ModuleSpec> specs = {spec_of(testing::kIdealXYXZ)};
  for (int i = 0; i < 15; ++i) specs.push_back(testing::random_spec(rng, 3, 1, 2, 0, false));
  for (const auto& spec : specs) {
    for (std::size_t keep = 1; keep < spec.n; ++keep) {
      auto small = specialize_ideal_spec(spec, keep);
      const int m = static_cast<int>(spec.n - keep);
      EXPECT_LE(hdepth(hilbert_table(spec, determine_g(spec))).depth,
                hdepth(hilbert_table(small, determine_g(small))).depth + m);
      EXPECT_LE(stdepth(spec).depth, stdepth(small).depth + m);
    }
  }
}

TEST(ModuleElement, Rendering) {
  auto free_max = spec_of(testing::kFreePlusMaximalIdeal);
  ModuleElement e{{1, 0}, q({0, 1})};
  EXPECT_EQ(e.to_string(free_max), "X1 e2");
  ModuleElement f{{1, 1}, {Rational(1, 2), Rational(-3)}};
  EXPECT_EQ(f.to_string(free_max), "1/2 X1X2 e1 + -3 X1X2 e2");
}

}  // namespace
}  // namespace hdepth
