#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "covext/errors.hpp"
#include "covext/monodromy.hpp"
#include "covext/perm.hpp"

using namespace covext;

namespace {

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

}  // namespace

TEST(Perm, ComposeIsLeftToRight) {
  const Permutation p = Permutation::from_cycles(3, {{0, 1}});
  const Permutation q = Permutation::from_cycles(3, {{1, 2}});
  // x -> q(p(x)): 0 -> 1 -> 2.
  EXPECT_EQ(compose(p, q)(0), 2u);
  EXPECT_EQ(to_cycle_string(compose(p, q)), "(1 3 2)");
  EXPECT_EQ(to_one_line_string(p), "[1 0 2]");
}

TEST(Perm, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0}), InvalidRep);
  EXPECT_THROW(Permutation({0, 2}), InvalidRep);
}

TEST(Perm, CyclesIncludeFixedPoints) {
  const Permutation p = Permutation::from_cycles(4, {{1, 3}});
  const std::vector<std::vector<std::uint32_t>> expect = {{0}, {1, 3}, {2}};
  EXPECT_EQ(p.cycles(), expect);
  EXPECT_EQ(cycle_type(p), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(Perm, ClosureOrders) {
  const std::vector<Permutation> s3 = {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})};
  EXPECT_EQ(std::get<std::size_t>(closure_order(s3, 1000)), 6u);
  const std::vector<Permutation> c3 = {Permutation::from_cycles(3, {{0, 1, 2}})};
  EXPECT_EQ(std::get<std::size_t>(closure_order(c3, 1000)), 3u);
  const std::vector<Permutation> s6 = {Permutation::from_cycles(6, {{0, 1}}),
                                       Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  EXPECT_TRUE(std::holds_alternative<Exceeded>(closure_order(s6, 100)));
  EXPECT_EQ(std::get<std::size_t>(closure_order(s6, 1000)), 720u);
}

TEST(Perm, TransitivityAndOrbits) {
  const std::vector<Permutation> gens = {Permutation::from_cycles(4, {{0, 1}})};
  EXPECT_FALSE(is_transitive(gens, 4));
  EXPECT_EQ(orbit(gens, 4, 0), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_TRUE(is_transitive(std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1, 2, 3}})}));
}

TEST(Perm, ConjugatingPermutationFindsSmallest) {
  const std::vector<Permutation> a = {Permutation::from_cycles(3, {{0, 1}})};
  const std::vector<Permutation> b = {Permutation::from_cycles(3, {{1, 2}})};
  const auto s = conjugating_permutation(a, b);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(conjugate(a[0], *s), b[0]);
  const std::vector<Permutation> c = {Permutation::from_cycles(3, {{0, 1, 2}})};
  EXPECT_FALSE(conjugating_permutation(a, c).has_value());
}

TEST(PermProperty, RandomPermutationIdentities) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const Permutation p = random_perm(rng, n);
    const Permutation q = random_perm(rng, n);
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_EQ(compose(p, q).inverse(), compose(q.inverse(), p.inverse()));
    const auto ct = cycle_type(p);
    EXPECT_EQ(std::accumulate(ct.begin(), ct.end(), std::size_t{0}), n);
    std::size_t l = 1;
    for (auto c : ct) l = std::lcm(l, c);
    EXPECT_EQ(order(p), l);
    EXPECT_TRUE(power(p, static_cast<long>(order(p))).is_identity());
    EXPECT_EQ(power(p, -1), p.inverse());
    EXPECT_EQ(cycle_type(conjugate(p, q)), ct);
    EXPECT_EQ(Permutation::from_cycles(n, p.cycles()), p);
  }
}

TEST(Monodromy, ValidatesRelatorsAndEvaluatesLeftToRight) {
  const Alphabet al({"x", "y"});
  const Presentation commuting(al, {parse_word(al, "x y x^-1 y^-1")});
  const Permutation t01 = Permutation::from_cycles(3, {{0, 1}});
  const Permutation t12 = Permutation::from_cycles(3, {{1, 2}});
  EXPECT_THROW(MonodromyRep(commuting, {t01, t12}), InvalidRep);
  const MonodromyRep free_rep(Presentation::free(al), {t01, t12});
  EXPECT_EQ(free_rep.evaluate(parse_word(al, "x y")), compose(t01, t12));
  EXPECT_TRUE(free_rep.is_transitive());
  EXPECT_TRUE(lift_is_closed(free_rep, parse_word(al, "x"), 2));
  EXPECT_FALSE(lift_is_closed(free_rep, parse_word(al, "x"), 0));
  EXPECT_THROW(MonodromyRep(Presentation::free(al), {t01}), InvalidRep);
  EXPECT_EQ(MonodromyRep::trivial(commuting).degree(), 1u);
}
