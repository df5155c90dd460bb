#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "semiab/error.hpp"
#include "semiab/families.hpp"
#include "semiab/free_product.hpp"

using namespace semiab;

namespace {

oracle::Letters letters(FreeWord const& w) {
  oracle::Letters out;
  for (auto const& s : w.syllables()) out.emplace_back(s.factor, s.elem);
  return out;
}

FreeWord from(FreeProduct const& fp, oracle::Letters const& l) {
  FreeWord w(fp);
  for (auto [k, x] : l) w = w * FreeWord::letter(fp, k, x);
  return w;
}

std::vector<FiniteGroup> groups_of(FreeProduct const& fp) {
  std::vector<FiniteGroup> out;
  for (std::size_t i = 0; i < fp.size(); ++i) out.push_back(fp.factor(i).group());
  return out;
}

// Every non-identity single syllable of every factor.
std::vector<FreeWord> single_syllables(FreeProduct const& fp) {
  std::vector<FreeWord> out;
  for (std::size_t k = 0; k < fp.size(); ++k) {
    auto const& g = fp.factor(k).group();
    for (Elem x = 0; x < g.order(); ++x)
      if (x != g.identity()) out.push_back(FreeWord::letter(fp, k, x));
  }
  return out;
}

}  // namespace

TEST(FreeWord, NormalFormMatchesStackReduction) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto fs = groups_of(fp);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    oracle::Letters raw;
    std::size_t const n = rng() % 12;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t const k = rng() % 2;
      raw.emplace_back(k, static_cast<Elem>(rng() % fs[k].order()));
    }
    EXPECT_EQ(letters(from(fp, raw)), oracle::reduce(fs, raw));
  }
}

TEST(FreeWord, CommutatorWordShape) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto g = FreeWord::letter(fp, 1, 1);
  auto a = FreeWord::letter(fp, 0, 1);
  auto c = commutator_word(g, a);
  EXPECT_EQ(to_string(c), "G:1 A:1 G:1 A:2");
  EXPECT_EQ(c, generator_word(fp, 1, 1));
  EXPECT_TRUE(commutator_word(a, a).empty());
  EXPECT_TRUE(commutator_word(a, FreeWord(fp)).empty());
}

TEST(FreeWord, MixingProductsIsRejected) {
  auto p = FreeProduct::of({cyclic(3), cyclic(2)});
  auto q = FreeProduct::of({cyclic(3), cyclic(3)});
  try {
    (void)(FreeWord::letter(p, 0, 1) * FreeWord::letter(q, 0, 1));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorMismatch);
  }
}

TEST(FreeWord, ConcatIsAssociativeWithIdentity) {
  auto fp = FreeProduct::of({cyclic(2), cyclic(3)});
  auto words = enumerate_words(fp, 3);
  FreeWord const e(fp);
  for (auto const& u : words) {
    EXPECT_EQ(u * e, u);
    EXPECT_EQ(e * u, u);
    EXPECT_TRUE((u * u.inverse()).empty());
    for (auto const& v : words)
      for (auto const& w : words) ASSERT_EQ((u * v) * w, u * (v * w));
  }
}

TEST(Enumeration, CountsAndOrder) {
  auto z2z2 = FreeProduct::of({cyclic(2), cyclic(2)});
  EXPECT_EQ(enumerate_words(z2z2, 0).size(), 1u);
  EXPECT_EQ(enumerate_words(z2z2, 2).size(), 5u);
  auto z2z3 = FreeProduct::of({cyclic(2), cyclic(3)});
  // 1 + 3 + (1·2 + 2·1) + (1·2·1 + 2·1·2)
  EXPECT_EQ(enumerate_words(z2z3, 3).size(), 1u + 3u + 4u + 6u);
  auto all = enumerate_words(z2z3, 6);
  std::uint64_t total = 0;
  for (std::size_t l = 0; l <= 6; ++l) total += count_words(z2z3, l);
  EXPECT_EQ(all.size(), total);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(seen.insert(to_string(all[i])).second);
    if (i > 0) {
      EXPECT_LE(all[i - 1].length(), all[i].length());
    }
    EXPECT_EQ(letters(all[i]), oracle::reduce(groups_of(z2z3), letters(all[i])));
  }
  try {
    enumerate_words(z2z3, 40);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Text, ParsePrintRoundTrip) {
  auto fp = FreeProduct::of({symmetric(3), cyclic(2)});
  for (auto const& w : enumerate_words(fp, 4)) EXPECT_EQ(parse_word(to_string(w), fp), w);
  EXPECT_EQ(to_string(FreeWord(fp)), "e");
  EXPECT_TRUE(parse_word("e", fp).empty());
}

TEST(Text, CommutatorSugar) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto w = parse_word("[G:1,A:2] A:1", fp);
  // G:1 A:2 G:1 A:1 then A:1 merges into the last syllable.
  EXPECT_EQ(to_string(w), "G:1 A:2 G:1 A:2");
  EXPECT_EQ(w.length(), 4u);
  auto nested = parse_word("[[A:1,G:1],A:1]", fp);
  auto a = FreeWord::letter(fp, 0, 1), g = FreeWord::letter(fp, 1, 1);
  EXPECT_EQ(nested, commutator_word(commutator_word(a, g), a));
}

TEST(Text, ErrorsNameTheColumn) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  for (char const* bad : {"A:3", "Q:1", "A:", "[A:1,G:1", "A:1 ]", "A:-1", "[A:1]"}) {
    try {
      parse_word(bad, fp);
      ADD_FAILURE() << bad;
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
      EXPECT_NE(std::string(e.what()).find("column"), std::string::npos) << e.what();
    }
  }
}

TEST(Commutators, QuotedIdentitiesOnSingleSyllables) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2), cyclic(2)});
  auto c = [](FreeWord const& x, FreeWord const& y) { return commutator_word(x, y); };
  auto singles = single_syllables(fp);
  std::size_t checked = 0;
  for (auto const& x : singles)
    for (auto const& y : singles)
      for (auto const& z : singles) {
        EXPECT_EQ(c(x, c(y, z)), c(x * y, z) * c(z, x) * c(z, y));
        EXPECT_EQ(x * c(y, z), c(x, y) * c(y, x * z) * x);
        ++checked;
      }
  EXPECT_EQ(checked, 64u);
}

TEST(Membership, BMapAndCrossEffect) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto a = FreeWord::letter(fp, 0, 1);
  auto g = FreeWord::letter(fp, 1, 1);
  EXPECT_EQ(b_map(FreeWord(fp)), std::make_pair(Elem{0}, Elem{0}));
  EXPECT_EQ(b_map(a), std::make_pair(Elem{1}, Elem{0}));
  EXPECT_TRUE(in_TG(a));
  EXPECT_FALSE(in_cross_effect(a));
  EXPECT_FALSE(in_TG(g));
  EXPECT_FALSE(in_cross_effect(g));
  auto ga = commutator_word(g, a);
  EXPECT_TRUE(in_cross_effect(ga));
  auto a2 = FreeWord::letter(fp, 0, 2);
  EXPECT_EQ(b_map(ga * a2 * g), std::make_pair(Elem{2}, Elem{1}));
}

TEST(Membership, BMapIsAHomomorphism) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto fs = groups_of(fp);
  auto words = enumerate_words(fp, 4);
  for (auto const& u : words) {
    auto bu = b_map(u);
    auto ref = oracle::b_map(fs, letters(u));
    EXPECT_EQ(bu, std::make_pair(ref[0], ref[1]));
    EXPECT_EQ(in_cross_effect(u), ref[0] == 0 && ref[1] == 0);
    EXPECT_EQ(in_TG(u), ref[1] == 0);
    for (auto const& v : words) {
      auto bv = b_map(v), buv = b_map(u * v);
      ASSERT_EQ(buv.first, fs[0].mul(bu.first, bv.first));
      ASSERT_EQ(buv.second, fs[1].mul(bu.second, bv.second));
    }
  }
}

TEST(Membership, StructuredWordsFollowTheDisplayedFormula) {
  auto a_grp = symmetric(3), g_grp = cyclic(4);
  auto fp = FreeProduct::of({a_grp, g_grp});
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    FreeWord w(fp);
    std::size_t const terms = rng() % 6;
    for (std::size_t i = 0; i < terms; ++i) {
      auto t = generator_word(fp, static_cast<Elem>(rng() % 4), static_cast<Elem>(rng() % 6));
      w = w * (rng() % 2 ? t : t.inverse());
    }
    Elem const a = static_cast<Elem>(rng() % 6), g = static_cast<Elem>(rng() % 4);
    w = w * FreeWord::letter(fp, 0, a) * FreeWord::letter(fp, 1, g);
    ASSERT_EQ(b_map(w), std::make_pair(a, g)) << to_string(w);
  }
}

TEST(Decomposition, Examples) {
  auto fp = FreeProduct::of({cyclic(3), cyclic(2)});
  auto a = FreeWord::letter(fp, 0, 1);
  auto g = FreeWord::letter(fp, 1, 1);
  auto d = commutator_decomposition(g * a);
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms[0], (CommutatorTerm{1, 1, 1}));
  EXPECT_EQ(d.residual_a, 1u);
  EXPECT_EQ(d.residual_g, 1u);
  auto e = commutator_decomposition(a * g);
  EXPECT_TRUE(e.terms.empty());
  // a [g,a'] a⁻¹ = [g,a]⁻¹ [g,aa'] with a = a' = 1.
  auto x = commutator_decomposition(a * generator_word(fp, 1, 1) * a.inverse());
  EXPECT_EQ(x.terms, (std::vector<CommutatorTerm>{{1, 1, -1}, {1, 2, 1}}));
  EXPECT_EQ(x.residual_a, 0u);
  EXPECT_EQ(x.residual_g, 0u);
}

TEST(Decomposition, ReassemblyIsExactUpToSixSyllables) {
  auto fp = FreeProduct::of({symmetric(3), cyclic(2)});
  std::size_t n = 0;
  for (auto const& w : enumerate_words(fp, 6)) {
    auto d = commutator_decomposition(w);
    ASSERT_EQ(reassemble(d, fp), w) << to_string(w);
    for (auto const& t : d.terms) {
      ASSERT_NE(t.g, 0u);
      ASSERT_NE(t.a, 0u);
      ASSERT_TRUE(t.z == 1 || t.z == -1);
    }
    ++n;
  }
  // 1 + 6 + 2·(5·1) + ... counted by count_words.
  std::uint64_t total = 0;
  for (std::size_t l = 0; l <= 6; ++l) total += count_words(fp, l);
  EXPECT_EQ(n, total);
}

TEST(Evaluation, CanonicalMaps) {
  auto s3 = symmetric(3);
  auto fp = FreeProduct::of({cyclic(2), cyclic(3)});
  // Z2 → S3 onto a transposition, Z3 → S3 onto a 3-cycle.
  Elem t = 0, r = 0;
  for (Elem x = 0; x < 6; ++x) {
    if (!t && s3.element_order(x) == 2) t = x;
    if (!r && s3.element_order(x) == 3) r = x;
  }
  std::vector<GroupHom> homs{GroupHom::make(cyclic(2), s3, {0, t}),
                             GroupHom::make(cyclic(3), s3, {0, r, s3.mul(r, r)})};
  EXPECT_EQ(eval_word(FreeWord(fp), homs), s3.identity());
  auto w = commutator_word(FreeWord::letter(fp, 1, 1), FreeWord::letter(fp, 0, 1));
  EXPECT_EQ(eval_word(w, homs), s3.commutator(r, t));
  std::vector<GroupHom> retract{GroupHom::identity(cyclic(2)), GroupHom::zero(cyclic(3), cyclic(2))};
  EXPECT_EQ(eval_word(w, retract), 0u);
  std::vector<GroupHom> wrong{GroupHom::identity(cyclic(2))};
  try {
    eval_word(w, wrong);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SignatureMismatch);
  }
}

TEST(MultiCrossEffect, RecursiveMembership) {
  auto fp = FreeProduct::of({cyclic(2), cyclic(3), cyclic(2)});
  auto x = FreeWord::letter(fp, 0, 1);
  auto y = FreeWord::letter(fp, 1, 1);
  auto z = FreeWord::letter(fp, 2, 1);
  EXPECT_TRUE(in_multi_cross_effect(commutator_word(commutator_word(x, y), z)));
  EXPECT_FALSE(in_multi_cross_effect(commutator_word(x, y)));
  EXPECT_TRUE(in_multi_cross_effect(commutator_word(x, y), {0, 1}));
  EXPECT_FALSE(in_multi_cross_effect(x * y));
  EXPECT_TRUE(in_multi_cross_effect(x * x));
  EXPECT_TRUE(in_multi_cross_effect(FreeWord(fp)));
  EXPECT_FALSE(in_multi_cross_effect(y));
  auto two = FreeProduct::of({cyclic(2), cyclic(2)});
  EXPECT_TRUE(in_multi_cross_effect(generator_word(two, 1, 1)));
  auto one = FreeProduct::of({cyclic(2)}, {"X"});
  try {
    in_multi_cross_effect(FreeWord::letter(one, 0, 1));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewFactors);
  }
}

TEST(MultiCrossEffect, AgreesWithRetractionsAndFold) {
  // w ∈ (X|Y|Z) iff every retraction killing one factor kills w.
  auto fp = FreeProduct::of({cyclic(2), cyclic(2), cyclic(2)});
  for (auto const& w : enumerate_words(fp, 6)) {
    bool expect = true;
    for (FactorMask drop = 0; drop < 3; ++drop)
      expect = expect && project(w, fp.all_mask() & ~(FactorMask{1} << drop)).empty();
    ASSERT_EQ(in_multi_cross_effect(w), expect) << to_string(w);
  }
}

TEST(Projection, RetractionsAndRestriction) {
  auto fp = FreeProduct::of({cyclic(2), cyclic(3), cyclic(2)});
  auto w = parse_word("X1:1 X2:1 X3:1 X2:2 X1:1", fp);
  EXPECT_EQ(to_string(project(w, 0b101)), "X1:1 X3:1 X1:1");
  EXPECT_TRUE(project(w, 0b010).empty());
  auto r = restrict_to(w, {0, 2});
  EXPECT_EQ(r.product().size(), 2u);
  EXPECT_EQ(r.length(), 3u);
  auto masks = cross_effect_retractions(3);
  EXPECT_FALSE(masks.empty());
  for (auto m : masks) EXPECT_NE(m, fp.all_mask());
}

TEST(FreeFactors, LettersAndInverses) {
  auto fp = FreeProduct::with_factors({Factor::free(2, "K"), Factor::finite(cyclic(2), "G")});
  auto k0 = FreeWord::letter(fp, 0, 0);
  auto k0inv = FreeWord::letter(fp, 0, 1);
  EXPECT_TRUE((k0 * k0inv).empty());
  auto kk = k0 * k0;
  EXPECT_EQ(kk.length(), 2u);
  EXPECT_TRUE((kk * kk.inverse()).empty());
  EXPECT_EQ(fp.factor(0).letter_count(), 4u);
}
