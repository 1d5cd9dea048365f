#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "covext/coset.hpp"
#include "covext/errors.hpp"

using namespace covext;

namespace {

const Alphabet kAB({"a", "b"});

std::vector<Word> words(const Alphabet& al, std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(al, t));
  return out;
}

// ⟨a, b | a², b³, (ab)⁵⟩ ≅ A5.
Presentation a5() { return Presentation(kAB, words(kAB, {"a a", "b b b", "a b a b a b a b a b"})); }

}  // namespace

TEST(ToddCoxeter, FiniteGroupOrders) {
  EXPECT_EQ(todd_coxeter(a5(), {}).index(), 60u);
  EXPECT_EQ(todd_coxeter(a5(), words(kAB, {"a"})).index(), 30u);
  EXPECT_EQ(todd_coxeter(a5(), words(kAB, {"b"})).index(), 20u);
  EXPECT_EQ(todd_coxeter(a5(), words(kAB, {"a", "b"})).index(), 1u);
  const Presentation s3(kAB, words(kAB, {"a a", "b b", "a b a b a b"}));
  EXPECT_EQ(todd_coxeter(s3, {}).index(), 6u);
}

TEST(ToddCoxeter, CapStopsInfiniteIndex) {
  const CosetTable t = todd_coxeter(Presentation::free(kAB), words(kAB, {"a b a^-1 b^-1"}), 200);
  EXPECT_FALSE(t.closed());
  EXPECT_EQ(t.cap(), 200u);
  EXPECT_THROW(coset_action(t), Error);
  EXPECT_THROW(todd_coxeter(Presentation::free(kAB), {}, 0), CapacityError);
}

TEST(ToddCoxeter, CosetActionIsTransitiveAndTraceable) {
  const CosetTable t = todd_coxeter(a5(), words(kAB, {"a"}));
  const MonodromyRep act = coset_action(t);
  EXPECT_EQ(act.degree(), 30u);
  EXPECT_TRUE(act.is_transitive());
  // Subgroup generators fix the trivial coset.
  EXPECT_EQ(t.trace(0, parse_word(kAB, "a")), 0u);
  for (std::uint32_t c = 0; c < t.index(); ++c) {
    EXPECT_EQ(t.act(t.act(c, 0, 1), 0, -1), c);
    EXPECT_EQ(t.trace(c, parse_word(kAB, "b b b")), c);
  }
  std::ostringstream os;
  dump_table(os, t);
  EXPECT_FALSE(os.str().empty());
}

TEST(Schreier, RankFormulaOnFreeGroups) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Permutation> images;
    for (int g = 0; g < 2; ++g) {
      std::vector<std::uint32_t> p(n);
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      images.emplace_back(p);
    }
    const MonodromyRep rep(Presentation::free(kAB), images);
    if (!rep.is_transitive()) {
      EXPECT_THROW(schreier_generators(rep), NotConnected);
      continue;
    }
    const SchreierData s = schreier_generators(rep);
    ASSERT_EQ(s.representatives.size(), n);
    EXPECT_TRUE(s.representatives[0].empty());
    for (std::uint32_t i = 0; i < n; ++i) EXPECT_EQ(rep.evaluate(s.representatives[i])(0), i);
    // A free group of rank k has index-n subgroups of rank 1 + n(k-1).
    EXPECT_EQ(s.stabilizer_generators.size(), 1 + n);
    for (const Word& w : s.stabilizer_generators) EXPECT_TRUE(lift_is_closed(rep, w, 0));
    EXPECT_EQ(todd_coxeter(Presentation::free(kAB), s.stabilizer_generators).index(), n);
  }
}
