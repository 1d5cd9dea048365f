#include <gtest/gtest.h>

#include "covext/errors.hpp"
#include "covext/extend.hpp"

using namespace covext;

namespace {

const Alphabet kA({"alpha1", "alpha2"});
const Alphabet kG({"gamma"});

ExtensionProblem problem(std::vector<Permutation> images, std::vector<const char*> incl, bool assume = false) {
  std::vector<Word> ws;
  for (const char* t : incl) ws.push_back(parse_word(kG, t));
  return {MonodromyRep(Presentation::free(kA), std::move(images)), Presentation::free(kG),
          InclusionMap(kA, kG, std::move(ws)), assume};
}

}  // namespace

TEST(WeakExtend, TranspositionPairCollapsesToOneSheet) {
  // Two distinct transpositions generate S3; pushing both to gamma^{±1}
  // kills the 3-cycle alpha1 alpha2, so everything collapses.
  const auto p = problem({Permutation::from_cycles(3, {{0, 2}}), Permutation::from_cycles(3, {{1, 2}})},
                         {"gamma", "gamma^-1"});
  const ExtensionOutcome out = weak_extend(p);
  ASSERT_EQ(out.status, ExtensionStatus::Extended);
  EXPECT_EQ(out.result->b1, 1u);
  EXPECT_EQ(out.result->fiber_map, (std::vector<std::uint32_t>{0, 0, 0}));
  EXPECT_FALSE(out.result->strong);
  EXPECT_TRUE(out.abelianization.spans);
}

TEST(WeakExtend, EqualSwapsStayTwoSheeted) {
  const Permutation t = Permutation::from_cycles(2, {{0, 1}});
  const auto p = problem({t, t}, {"gamma", "gamma^-1"});
  const ExtensionResult r = *weak_extend(p).result;
  EXPECT_EQ(r.b1, 2u);
  EXPECT_TRUE(r.strong);
  EXPECT_TRUE(is_strong(r));
  EXPECT_EQ(r.rho1.image(0), t);
}

TEST(WeakExtend, FiberMapIsEquivariant) {
  const auto p = problem({Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 2}})},
                         {"gamma", "gamma gamma"});
  const ExtensionResult r = *weak_extend(p).result;
  for (GeneratorId g = 0; g < kA.size(); ++g) {
    const Permutation img = r.rho1.evaluate(p.inclusion.image(g));
    for (std::uint32_t s = 0; s < 4; ++s) EXPECT_EQ(r.fiber_map[p.rho0.image(g)(s)], img(r.fiber_map[s]));
  }
  EXPECT_LE(r.b1, 4u);
}

TEST(WeakExtend, Errors) {
  const Permutation t = Permutation::from_cycles(3, {{0, 1}});
  EXPECT_THROW(weak_extend(problem({t, t}, {"gamma", "gamma"})), NotConnected);
  // gamma -> gamma^2 on both generators cannot be onto Z.
  const Permutation s = Permutation::from_cycles(2, {{0, 1}});
  EXPECT_THROW(weak_extend(problem({s, s}, {"gamma gamma", "gamma gamma"}, true)), HypothesisViolated);
  const ExtensionOutcome unassumed = weak_extend(problem({s, s}, {"gamma gamma", "gamma gamma"}));
  EXPECT_FALSE(unassumed.abelianization.spans);
  EXPECT_EQ(unassumed.abelianization.cokernel_torsion, (std::vector<long>{2}));
}

TEST(WeakExtend, CapReportsIndexNotEstablished) {
  // Trivial image in a free group of rank 2: infinite index.
  const Alphabet g2({"x", "y"});
  ExtensionProblem p{MonodromyRep(Presentation::free(kA),
                                  {Permutation::identity(1), Permutation::identity(1)}),
                     Presentation::free(g2), InclusionMap(kA, g2, {parse_word(g2, "x"), parse_word(g2, "x")}),
                     false, 50};
  const ExtensionOutcome out = weak_extend(p);
  EXPECT_EQ(out.status, ExtensionStatus::IndexNotEstablished);
  EXPECT_FALSE(out.result.has_value());
  EXPECT_EQ(out.cap, 50u);
}

TEST(Maximality, CandidatesAreBoundedByTheComputedExtension) {
  const Permutation t = Permutation::from_cycles(2, {{0, 1}});
  const auto p = problem({t, t}, {"gamma", "gamma^-1"});
  const ExtensionResult r = *weak_extend(p).result;
  const MonodromyRep same(Presentation::free(kG), {t});
  const MaximalityVerdict v = maximality_check(p, r, same);
  EXPECT_TRUE(v.holds());
  EXPECT_TRUE(v.equal_degree);
  EXPECT_TRUE(v.conjugator.has_value());
  const MonodromyRep one(Presentation::free(kG), {Permutation::identity(1)});
  EXPECT_TRUE(maximality_check(p, r, one).holds());
  const MonodromyRep cyc3(Presentation::free(kG), {Permutation::from_cycles(3, {{0, 1, 2}})});
  EXPECT_THROW(maximality_check(p, r, cyc3), NotAnExtension);
}

TEST(Equivalence, SimultaneousConjugacy) {
  const Presentation f = Presentation::free(kA);
  const MonodromyRep a(f, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})});
  const MonodromyRep b(f, {Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{0, 2}})});
  const MonodromyRep c(f, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1}})});
  EXPECT_TRUE(equivalent(a, b));
  EXPECT_FALSE(equivalent(a, c));
}

TEST(TwoSheet, UniqueForEveryRank) {
  for (std::size_t k = 1; k <= 8; ++k) EXPECT_TRUE(two_sheet_unique(k)) << k;
  EXPECT_THROW(two_sheet_unique(0), CapacityError);
  EXPECT_THROW(two_sheet_unique(9), CapacityError);
}
