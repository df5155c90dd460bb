#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "semiab/actions.hpp"
#include "semiab/error.hpp"
#include "semiab/families.hpp"

using namespace semiab;

namespace {

ActionData inversion_z2_z3() { return ActionData(cyclic(2), cyclic(3), {0, 1, 2, 0, 2, 1}); }

ActionData conjugation(FiniteGroup const& e) {
  std::vector<Elem> t(e.order() * e.order());
  for (Elem g = 0; g < e.order(); ++g)
    for (Elem a = 0; a < e.order(); ++a) t[g * e.order() + a] = e.conj(g, a);
  return ActionData(e, e, std::move(t));
}

oracle::Letters letters(FreeWord const& w) {
  oracle::Letters out;
  for (auto const& s : w.syllables()) out.emplace_back(s.factor, s.elem);
  return out;
}

ErrorKind kind_of(std::function<void()> const& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no semiab::Error thrown";
  return ErrorKind::ParseError;
}

}  // namespace

// Counts from oracle::actions, which tries every map G -> Aut(A).
TEST(Enumerate, FrozenCounts) {
  auto v4 = direct_product(cyclic(2), cyclic(2)).group;
  EXPECT_EQ(enumerate_actions(cyclic(2), cyclic(3)).size(), 2u);
  EXPECT_EQ(enumerate_actions(cyclic(2), v4).size(), 4u);
  EXPECT_EQ(enumerate_actions(cyclic(2), quaternion8()).size(), 10u);
  EXPECT_EQ(enumerate_actions(cyclic(2), named_group("Z2^3")).size(), 22u);
  EXPECT_EQ(enumerate_actions(symmetric(3), symmetric(3)).size(), 10u);
  EXPECT_EQ(enumerate_actions(v4, v4).size(), 10u);
  EXPECT_EQ(enumerate_actions(cyclic(3), cyclic(7)).size(), 3u);
  EXPECT_EQ(enumerate_actions(cyclic(5), cyclic(4)).size(), 1u);
}

TEST(Enumerate, MatchesOracleOnSmallPairs) {
  auto fl = family_list(6);
  for (auto const& g : fl)
    for (auto const& a : fl) {
      std::set<std::vector<Elem>> lib;
      for (auto const& phi : enumerate_actions(g, a)) {
        EXPECT_TRUE(validate_action(phi).all());
        lib.insert(phi.table());
      }
      EXPECT_EQ(lib, oracle::actions(g, a)) << g.name() << " on " << a.name();
    }
}

TEST(Enumerate, TrivialActionFirst) {
  auto acts = enumerate_actions(cyclic(2), cyclic(3));
  EXPECT_EQ(acts.front(), ActionData::trivial(cyclic(2), cyclic(3)));
  EXPECT_EQ(acts.back(), inversion_z2_z3());
}

TEST(Validate, ReportsEachCondition) {
  auto ok = validate_action(inversion_z2_z3());
  EXPECT_TRUE(ok.all());
  EXPECT_TRUE(ok.automorphism_ok);
  auto unit = validate_action(ActionData(cyclic(2), cyclic(3), {0, 2, 1, 0, 2, 1}));
  EXPECT_FALSE(unit.unit_ok);
  auto endo = validate_action(ActionData(cyclic(2), cyclic(3), {0, 1, 2, 0, 1, 1}));
  EXPECT_FALSE(endo.endomorphism_ok);
  EXPECT_FALSE(endo.automorphism_ok);
  // Both non-identity elements of Z3 invert, but φ(1,φ(1,a)) = a differs from φ(2,a).
  auto assoc = validate_action(ActionData(cyclic(3), cyclic(3), {0, 1, 2, 0, 2, 1, 0, 2, 1}));
  EXPECT_TRUE(assoc.endomorphism_ok);
  EXPECT_FALSE(assoc.associativity_ok);
  EXPECT_FALSE(assoc.witnesses.empty());
  EXPECT_EQ(kind_of([] { ActionData(cyclic(2), cyclic(3), {0, 1, 2}); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { ActionData(cyclic(2), cyclic(3), {0, 1, 2, 0, 1, 3}); }),
            ErrorKind::MalformedTable);
}

TEST(Semidirect, InversionGivesS3) {
  auto sd = semidirect(inversion_z2_z3());
  EXPECT_EQ(sd.product.order(), 6u);
  EXPECT_TRUE(is_isomorphic(sd.product, symmetric(3)));
  EXPECT_TRUE(is_isomorphic(semidirect(ActionData::trivial(cyclic(2), cyclic(3))).product, cyclic(6)));
  EXPECT_EQ(compose(sd.p, sd.s), GroupHom::identity(cyclic(2)));
  EXPECT_EQ(kernel(sd.p), image(sd.l));
  EXPECT_TRUE(sd.l.is_injective());
  // (a,g) has index a·|G| + g.
  EXPECT_EQ(sd.l(1), 2u);
  EXPECT_EQ(sd.s(1), 1u);
  auto pair = pair_table(inversion_z2_z3());
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) EXPECT_EQ(pair[x * 6 + y], sd.product.mul(x, y));
}

TEST(Semidirect, RejectsNonActions) {
  try {
    semidirect(ActionData(cyclic(2), cyclic(3), {0, 1, 2, 0, 1, 1}));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidAction);
    EXPECT_NE(std::string(e.what()).find("endomorphism"), std::string::npos) << e.what();
  }
}

TEST(Semidirect, ConjugationGivesDirectSquare) {
  for (auto const& e : family_list(12)) {
    auto sd = semidirect(conjugation(e));
    auto dp = direct_product(e, e);
    std::size_t const n = e.order();
    // θ(a,g) = (ag, g).
    std::vector<Elem> theta(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem g = 0; g < n; ++g) theta[a * n + g] = e.mul(a, g) * n + g;
    ASSERT_TRUE(oracle::is_hom(sd.product, dp.group, theta)) << e.name();
    auto hom = GroupHom::make(sd.product, dp.group, theta);
    ASSERT_TRUE(hom.is_injective());
    ASSERT_EQ(compose(dp.proj_right, hom), sd.p) << e.name();
  }
}

TEST(Psi, MatchesSemidirectEvaluation) {
  auto a = cyclic(3), g = cyclic(2);
  auto fp = FreeProduct::of({a, g});
  for (auto const& phi : enumerate_actions(g, a)) {
    for (auto const& w : enumerate_words(fp, 6)) {
      if (!in_cross_effect(w)) continue;
      auto [pa, pg] = oracle::semidirect_eval(a, g, phi.table(), letters(w));
      ASSERT_EQ(pg, g.identity());
      ASSERT_EQ(psi_eval(phi, w), pa) << to_string(w);
    }
  }
  auto phi = inversion_z2_z3();
  EXPECT_EQ(phi.psi_generator(1, 1), 1u);
  EXPECT_EQ(psi_eval(phi, generator_word(fp, 1, 1)), 1u);
  EXPECT_EQ(kind_of([&] { psi_eval(phi, FreeWord::letter(fp, 0, 1)); }),
            ErrorKind::NotInCrossEffect);
  auto other = FreeProduct::of({cyclic(2), cyclic(3)});
  EXPECT_EQ(kind_of([&] { psi_eval(phi, generator_word(other, 1, 1)); }),
            ErrorKind::SignatureMismatch);
}

TEST(Psi, NonAbelianActedGroup) {
  auto a = symmetric(3), g = cyclic(2);
  auto fp = FreeProduct::of({a, g});
  auto acts = enumerate_actions(g, a);
  ASSERT_EQ(acts.size(), 4u);
  for (auto const& phi : acts)
    for (auto const& w : enumerate_words(fp, 5)) {
      if (!in_cross_effect(w)) continue;
      ASSERT_EQ(psi_eval(phi, w), oracle::semidirect_eval(a, g, phi.table(), letters(w)).first);
    }
}

TEST(Coequalizer, HoldsForActionsFailsForCorruptedTable) {
  for (auto const& phi : enumerate_actions(cyclic(2), cyclic(3))) {
    auto r = coequalizer_check(phi, 6);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.surjective);
    EXPECT_GT(r.words_checked, 0u);
  }
  auto bad = coequalizer_check(ActionData(cyclic(2), cyclic(3), {0, 1, 2, 0, 1, 1}), 6);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_TRUE(in_cross_effect(*bad.counterexample));
}

TEST(Points, RoundTrips) {
  for (auto const& g : family_list(4))
    for (auto const& a : family_list(6))
      for (auto const& phi : enumerate_actions(g, a)) {
        auto there = action_point_roundtrip(phi);
        ASSERT_TRUE(there.ok) << there.detail;
        auto sd = semidirect(phi);
        auto back = point_action_roundtrip(Point{sd.product, sd.p, sd.s});
        ASSERT_TRUE(back.ok) << back.detail;
      }
}

TEST(Points, SignOfS3) {
  // q: S3 -> Z2 the sign, s picks a transposition.
  auto s3 = symmetric(3), z2 = cyclic(2);
  std::vector<Elem> sign(6);
  Elem t = 0;
  for (Elem x = 0; x < 6; ++x) {
    sign[x] = s3.element_order(x) == 2 ? 1 : 0;
    if (!t && sign[x]) t = x;
  }
  Point pt{s3, GroupHom::make(s3, z2, sign), GroupHom::make(z2, s3, {0, t})};
  EXPECT_NO_THROW(require_splitting(pt));
  auto pa = point_to_action(pt);
  EXPECT_EQ(pa.kernel.size(), 3u);
  EXPECT_TRUE(validate_action(pa.action).all());
  auto rt = point_action_roundtrip(pt);
  EXPECT_TRUE(rt.ok) << rt.detail;
  ASSERT_TRUE(rt.iso.has_value());
  EXPECT_TRUE(rt.iso->is_injective());
  Point broken{s3, GroupHom::make(s3, z2, sign), GroupHom::zero(z2, s3)};
  EXPECT_EQ(kind_of([&] { require_splitting(broken); }), ErrorKind::SectionNotSplitting);
}

TEST(Universal, InducedMapOutOfSemidirect) {
  auto phi = inversion_z2_z3();
  auto s3 = symmetric(3);
  Elem r = 0, t = 0;
  for (Elem x = 0; x < 6; ++x) {
    if (!r && s3.element_order(x) == 3) r = x;
    if (!t && s3.element_order(x) == 2) t = x;
  }
  auto fa = GroupHom::make(cyclic(3), s3, {0, r, s3.mul(r, r)});
  auto fg = GroupHom::make(cyclic(2), s3, {0, t});
  auto h = universal_property(phi, fa, fg);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->is_injective());
  auto sd = semidirect(phi);
  EXPECT_EQ(compose(*h, sd.l), fa);
  EXPECT_EQ(compose(*h, sd.s), fg);
  EXPECT_FALSE(universal_property(ActionData::trivial(cyclic(2), cyclic(3)), fa, fg).has_value());
}

TEST(Restrict, StableSubgroups) {
  auto a = dihedral(4);
  auto phi = conjugation(a);
  auto center = subgroup_generated(a, {2});
  auto whole = Subgroup::whole(a);
  auto r = restrict_action(phi, center, whole);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(validate_action(*r).all());
  EXPECT_EQ(r->acted().order(), 2u);
  EXPECT_FALSE(restrict_action(phi, subgroup_generated(a, {4}), whole).has_value());
}

TEST(SemidirectMaps, KernelAndImageSplit) {
  auto s = sample_semidirect_maps(200, 1);
  EXPECT_EQ(s.samples, 200u);
  EXPECT_EQ(s.kernel_matches, 200u);
  EXPECT_EQ(s.image_matches, 200u);
  EXPECT_TRUE(s.mismatches.empty());
  EXPECT_GT(s.nontrivial_f, 0u);
  auto again = sample_semidirect_maps(200, 1);
  EXPECT_EQ(again.attempts, s.attempts);
  EXPECT_EQ(again.nontrivial_f, s.nontrivial_f);
  auto wider = sample_semidirect_maps(100, 9, 6);
  EXPECT_EQ(wider.kernel_matches, wider.samples);
  EXPECT_EQ(wider.image_matches, wider.samples);
}

TEST(SemidirectMaps, ExplicitMap) {
  // Identity on Z3, Z2 -> Z2 identity, from inversion to inversion.
  auto phi = inversion_z2_z3();
  auto m = semidirect_map(phi, phi, GroupHom::identity(cyclic(3)), GroupHom::identity(cyclic(2)));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->hom.is_injective());
  EXPECT_TRUE(m->report.kernel_matches);
  EXPECT_TRUE(m->report.image_matches);
  // Identity on Z3 does not intertwine inversion with the trivial action.
  auto triv = ActionData::trivial(cyclic(2), cyclic(3));
  EXPECT_FALSE(semidirect_map(phi, triv, GroupHom::identity(cyclic(3)),
                              GroupHom::identity(cyclic(2)))
                   .has_value());
  // Zero on A with g = id is always compatible; kernel is A x| {e}.
  auto z = semidirect_map(phi, triv, GroupHom::zero(cyclic(3), cyclic(3)),
                          GroupHom::identity(cyclic(2)));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->report.kernel.size(), 3u);
  EXPECT_TRUE(z->report.kernel_matches);
}
