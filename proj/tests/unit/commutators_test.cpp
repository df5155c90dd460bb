#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "semiab/commutators.hpp"
#include "semiab/error.hpp"
#include "semiab/families.hpp"

using namespace semiab;

namespace {

OracleResult run(FiniteGroup const& g, std::vector<Subgroup> parts, std::size_t len = 16) {
  CommutatorRequest req{g, std::move(parts)};
  req.max_word_syllables = len;
  return higher_commutator_oracle(req);
}

// Fold of every word of (X|Y|Z) up to `len` syllables, with membership
// decided by the three one-factor-killing retractions.
oracle::Members naive_ternary(FiniteGroup const& g, Subgroup const& x, Subgroup const& y,
                              Subgroup const& z, std::size_t len) {
  std::vector<FiniteGroup> fs{as_group(x).group, as_group(y).group, as_group(z).group};
  std::vector<SubgroupAsGroup> emb{as_group(x), as_group(y), as_group(z)};
  auto fp = FreeProduct::of(fs);
  oracle::Members seeds;
  for (auto const& w : enumerate_words(fp, len, EnumerationBounds{len, 5'000'000})) {
    oracle::Letters l;
    for (auto const& s : w.syllables()) l.emplace_back(s.factor, s.elem);
    bool inside = true;
    for (std::size_t drop = 0; drop < 3 && inside; ++drop) {
      oracle::Letters kept;
      for (auto const& p : l)
        if (p.first != drop) kept.push_back(p);
      inside = oracle::reduce(fs, kept).empty();
    }
    if (!inside) continue;
    Elem v = g.identity();
    for (auto [k, e] : l) v = g.mul(v, emb[k].embedding(e));
    seeds.push_back(v);
  }
  return oracle::closure(g, seeds);
}

}  // namespace

TEST(Binary, MatchesNaiveClosure) {
  for (auto const& g : family_list(12)) {
    auto subs = all_subgroups(g);
    for (auto const& x : subs)
      for (auto const& y : subs) {
        auto c = binary_commutator(x, y);
        ASSERT_EQ(c.members(), oracle::commutator(g, x.members(), y.members())) << g.name();
        auto h = huq_commutator(x, y);
        ASSERT_TRUE(c.is_subset_of(h));
        ASSERT_TRUE(oracle::is_normal(g, h.members()));
      }
  }
}

TEST(Binary, DerivedSubgroups) {
  auto derived = [](FiniteGroup const& g) {
    auto w = Subgroup::whole(g);
    return binary_commutator(w, w).size();
  };
  EXPECT_EQ(derived(symmetric(3)), 3u);
  EXPECT_EQ(derived(dihedral(4)), 2u);
  EXPECT_EQ(derived(quaternion8()), 2u);
  EXPECT_EQ(derived(alternating(4)), 4u);
  EXPECT_EQ(derived(symmetric(4)), 12u);
  EXPECT_EQ(derived(cyclic(12)), 1u);
}

TEST(Binary, SmallExamples) {
  // Two distinct transposition subgroups of S3 give A3.
  auto g = symmetric(3);
  std::vector<Subgroup> twos;
  for (auto const& s : all_subgroups(g))
    if (s.size() == 2) twos.push_back(s);
  ASSERT_EQ(twos.size(), 3u);
  EXPECT_TRUE(binary_commutator(twos[0], twos[0]).is_trivial());
  EXPECT_EQ(binary_commutator(twos[0], twos[1]).size(), 3u);
  // D4: reflections s and rs generate a Higgins commutator ⟨r^2⟩.
  auto d = dihedral(4);
  auto s = subgroup_generated(d, {4}), rs = subgroup_generated(d, {5});
  EXPECT_EQ(binary_commutator(s, rs).members(), (std::vector<Elem>{0, 2}));
  EXPECT_THROW(binary_commutator(s, Subgroup::whole(cyclic(8))), Error);
}

TEST(Oracle, BinaryCaseOnSmallGroups) {
  for (auto const& g : {symmetric(3), dihedral(4), quaternion8()}) {
    auto subs = all_subgroups(g);
    for (auto const& x : subs)
      for (auto const& y : subs) {
        auto r = run(g, {x, y});
        ASSERT_NE(r.flag, OracleFlag::BoundHit) << g.name();
        ASSERT_EQ(r.result, binary_commutator(x, y)) << g.name();
      }
  }
}

TEST(Oracle, TernaryS3IsA3) {
  auto g = symmetric(3);
  auto w = Subgroup::whole(g);
  auto r = run(g, {w, w, w});
  EXPECT_EQ(r.result.size(), 3u);
  EXPECT_EQ(r.result, binary_commutator(w, w));
  EXPECT_EQ(r.flag, OracleFlag::Exact);
  ASSERT_TRUE(r.upper_bound.has_value());
  EXPECT_EQ(r.result, *r.upper_bound);
  // Three distinct transposition subgroups already reach A3.
  std::vector<Subgroup> twos;
  for (auto const& s : all_subgroups(g))
    if (s.size() == 2) twos.push_back(s);
  auto t = run(g, twos);
  EXPECT_EQ(t.result.size(), 3u);
  EXPECT_EQ(naive_ternary(g, twos[0], twos[1], twos[2], 12), t.result.members());
}

TEST(Oracle, TernaryAgainstNaiveEnumeration) {
  // Every triple of subgroups of order <= 2; their free products are small
  // enough to enumerate to 12 syllables directly.
  for (auto const& g : {symmetric(3), dihedral(4), quaternion8()}) {
    std::vector<Subgroup> small;
    for (auto const& s : all_subgroups(g))
      if (s.size() <= 2) small.push_back(s);
    for (auto const& x : small)
      for (auto const& y : small)
        for (auto const& z : small) {
          auto r = run(g, {x, y, z});
          auto naive = naive_ternary(g, x, y, z, 12);
          ASSERT_TRUE(oracle::subset(naive, r.result.members())) << g.name();
          if (r.flag != OracleFlag::BoundHit) {
            ASSERT_EQ(naive, r.result.members()) << g.name();
          }
        }
  }
}

TEST(Oracle, AbelianHigherCommutatorsAreTrivial) {
  for (auto const& g : family_list(12)) {
    if (!g.is_abelian()) continue;
    auto w = Subgroup::whole(g);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto r = run(g, std::vector<Subgroup>(n, w), n == 4 ? 8 : 16);
      EXPECT_TRUE(r.result.is_trivial()) << g.name() << " n=" << n;
    }
  }
}

TEST(Oracle, FlagsAndErrors) {
  auto g = symmetric(3);
  auto w = Subgroup::whole(g);
  EXPECT_EQ(shortest_commutator_length(2), 4u);
  EXPECT_EQ(shortest_commutator_length(3), 10u);
  EXPECT_EQ(shortest_commutator_length(4), 22u);
  // A bound below the shortest ternary commutator cannot stabilize.
  CommutatorRequest tight{g, {w, w, w}};
  tight.max_word_syllables = 6;
  tight.use_upper_bound = false;
  auto r = higher_commutator_oracle(tight);
  EXPECT_EQ(r.flag, OracleFlag::BoundHit);
  EXPECT_LE(r.covered_length, 6u);
  EXPECT_TRUE(r.result.is_subset_of(binary_commutator(w, w)));
  try {
    run(g, {w});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewFactors);
  }
  try {
    run(g, {w, Subgroup::whole(cyclic(6))});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
  EXPECT_EQ(to_string(OracleFlag::Stabilized), "stabilized");
}

TEST(Ternary, RecipeAgreesOnSmallGroups) {
  for (auto const& g : {symmetric(3), dihedral(4), quaternion8()}) {
    auto w = Subgroup::whole(g);
    auto t = ternary_recipe(w, w, w);
    EXPECT_NE(t.agreement, Agreement::Disagree) << g.name();
    std::vector<Elem> seeds;
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y)
        for (Elem z = 0; z < g.order(); ++z) seeds.push_back(g.commutator(g.commutator(x, y), z));
    EXPECT_EQ(ternary_generators(w, w, w).members(), oracle::closure(g, seeds)) << g.name();
  }
}

TEST(Enumeration, DirectFormAgreesForPairs) {
  auto g = symmetric(3);
  auto w = Subgroup::whole(g);
  auto direct = cross_effect_image_by_enumeration({w, w}, 4);
  EXPECT_EQ(direct, binary_commutator(w, w));
}
