#include <gtest/gtest.h>

#include <map>

#include "../support/oracles.hpp"
#include "semiab/error.hpp"
#include "semiab/families.hpp"
#include "semiab/group.hpp"
#include "semiab/io.hpp"

using namespace semiab;

namespace {

ErrorKind kind_of(std::function<void()> const& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no semiab::Error thrown";
  return ErrorKind::ParseError;
}

std::vector<std::vector<Elem>> z3_table() { return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}; }

}  // namespace

TEST(MakeGroup, AcceptsZ3) {
  auto g = make_group(z3_table(), "Z3");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.identity(), 0u);
  EXPECT_TRUE(is_isomorphic(g, cyclic(3)));
}

TEST(MakeGroup, RejectsDefects) {
  EXPECT_EQ(kind_of([] { make_group({}); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { make_group({{0, 1}, {1}}); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { make_group({{0, 2}, {1, 0}}); }), ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { make_group({{0, 1}, {0, 1}}); }), ErrorKind::NoIdentity);
  // e = 0, row 1 has no 0: 1*x never returns to the identity.
  EXPECT_EQ(kind_of([] { make_group({{0, 1}, {1, 1}}); }), ErrorKind::NoInverse);
  // Z3 with 1*1 changed from 2 to 0: (1*1)*2 = 2 but 1*(1*2) = 1.
  EXPECT_EQ(kind_of([] { make_group({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}); }),
            ErrorKind::NotAssociative);
  // A loop of order 5 that is not associative.
  std::vector<std::vector<Elem>> loop{{0, 1, 2, 3, 4},
                                      {1, 0, 3, 4, 2},
                                      {2, 4, 0, 1, 3},
                                      {3, 2, 4, 0, 1},
                                      {4, 3, 1, 2, 0}};
  EXPECT_EQ(kind_of([&] { make_group(loop); }), ErrorKind::NotAssociative);
}

TEST(MakeGroup, IdentityNeedNotBeZero) {
  // Z2 with the identity stored at index 1.
  auto g = make_group({{1, 0}, {0, 1}});
  EXPECT_EQ(g.identity(), 1u);
  EXPECT_EQ(g.inv(0), 0u);
}

TEST(Families, OrdersAndShapes) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_EQ(symmetric(4).order(), 24u);
  EXPECT_EQ(alternating(4).order(), 12u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_TRUE(cyclic(7).is_abelian());
  EXPECT_FALSE(dihedral(3).is_abelian());
  EXPECT_TRUE(is_isomorphic(dihedral(3), symmetric(3)));
  EXPECT_FALSE(is_isomorphic(dihedral(4), quaternion8()));
  EXPECT_TRUE(is_isomorphic(direct_product(cyclic(2), cyclic(3)).group, cyclic(6)));
  EXPECT_FALSE(is_isomorphic(direct_product(cyclic(2), cyclic(2)).group, cyclic(4)));
}

TEST(Families, NumberingConventions) {
  auto d = dihedral(4);
  // s r s = r^-1, with r = 1 and s = 4.
  EXPECT_EQ(d.mul(d.mul(4, 1), 4), 3u);
  auto q = quaternion8();
  // i*j = k, j*i = -k.
  EXPECT_EQ(q.mul(2, 4), 6u);
  EXPECT_EQ(q.mul(4, 2), 7u);
  EXPECT_EQ(q.element_order(1), 2u);
  auto s3 = symmetric(3);
  std::size_t involutions = 0;
  for (Elem x = 0; x < 6; ++x) involutions += s3.element_order(x) == 2;
  EXPECT_EQ(involutions, 3u);
}

TEST(Families, NamedGroups) {
  EXPECT_EQ(named_group("1").order(), 1u);
  EXPECT_EQ(named_group("Z2xZ3").order(), 6u);
  EXPECT_EQ(named_group("Z2^3").order(), 8u);
  EXPECT_TRUE(is_isomorphic(named_group("Z3xS3"), direct_product(cyclic(3), symmetric(3)).group));
  EXPECT_EQ(kind_of([] { named_group("S9"); }), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(kind_of([] { named_group("hello"); }), ErrorKind::UnsupportedParameter);
  EXPECT_EQ(kind_of([] { named_group(""); }), ErrorKind::UnsupportedParameter);
}

TEST(Families, ListIsDeduplicated) {
  auto list = family_list(24);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (list[i].order() == list[j].order()) {
        EXPECT_FALSE(is_isomorphic(list[i], list[j])) << list[i].name() << " " << list[j].name();
      }
  std::set<std::string> names;
  for (auto const& g : list) names.insert(g.name());
  for (char const* n : {"S3", "S4", "A4", "Q8", "Z2^3", "Z3^2", "Z2xZ4", "D12", "Z24"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_FALSE(names.count("D3"));
  EXPECT_EQ(list.size(), 41u);
}

// Counts computed by oracle::subgroups, the element-adjoining closure.
TEST(Subgroups, FrozenCounts) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"S3", {6, 3}},    {"D4", {10, 6}},  {"Q8", {6, 6}},   {"Z2^3", {16, 16}},
      {"A4", {10, 3}},   {"D6", {16, 7}},  {"S4", {30, 4}},  {"D12", {34, 9}},
      {"Z2xZ4", {8, 8}}, {"Z3^2", {6, 6}}, {"D8", {19, 7}},  {"Z24", {8, 8}}};
  for (auto const& g : family_list(24)) {
    auto it = expected.find(g.name());
    if (it == expected.end()) continue;
    auto subs = all_subgroups(g);
    std::size_t normal = 0;
    for (auto const& s : subs) normal += is_normal(g, s);
    EXPECT_EQ(subs.size(), it->second.first) << g.name();
    EXPECT_EQ(normal, it->second.second) << g.name();
  }
}

TEST(Subgroups, MatchOracleUpTo24) {
  for (auto const& g : family_list(24)) {
    auto expected = oracle::subgroups(g);
    std::set<oracle::Members> got;
    for (auto const& s : all_subgroups(g)) {
      got.insert(s.members());
      EXPECT_EQ(is_normal(g, s), oracle::is_normal(g, s.members())) << g.name();
    }
    EXPECT_EQ(got, expected) << g.name();
  }
}

TEST(Subgroups, LatticeOperations) {
  auto g = symmetric(3);
  auto whole = Subgroup::whole(g);
  auto subs = all_subgroups(g);
  for (auto const& x : subs)
    for (auto const& y : subs) {
      EXPECT_EQ(join(x, y).members(), oracle::join(g, x.members(), y.members()));
      EXPECT_EQ(intersection(x, y).members(), oracle::meet(x.members(), y.members()));
    }
  auto gen = subgroup_generated(g, {1});
  EXPECT_EQ(normal_closure(g, gen), whole);
  EXPECT_EQ(kind_of([&] { intersection(whole, Subgroup::whole(cyclic(6))); }),
            ErrorKind::AmbientMismatch);
  EXPECT_EQ(kind_of([&] { Subgroup::from_members(g, {0, 1, 3}); }), ErrorKind::NotSubgroup);
}

TEST(Quotient, CosetsAndProjection) {
  auto g = dihedral(4);
  auto center = subgroup_generated(g, {2});
  ASSERT_TRUE(is_normal(g, center));
  auto q = quotient(g, center);
  EXPECT_EQ(q.group.order(), 4u);
  EXPECT_TRUE(is_isomorphic(q.group, direct_product(cyclic(2), cyclic(2)).group));
  EXPECT_EQ(kernel(q.projection), center);
  EXPECT_TRUE(q.projection.is_surjective());
  auto refl = subgroup_generated(g, {4});
  EXPECT_EQ(kind_of([&] { quotient(g, refl); }), ErrorKind::NotNormal);
}

TEST(Homomorphisms, MakeValidates) {
  auto z4 = cyclic(4), z2 = cyclic(2);
  EXPECT_NO_THROW(GroupHom::make(z4, z2, {0, 1, 0, 1}));
  EXPECT_EQ(kind_of([&] { GroupHom::make(z4, z2, {0, 1, 1, 1}); }), ErrorKind::NotHomomorphism);
  EXPECT_EQ(kind_of([&] { GroupHom::make(z4, z2, {0, 1}); }), ErrorKind::NotHomomorphism);
  EXPECT_EQ(all_homomorphisms(z4, z2).size(), 2u);
  EXPECT_EQ(all_homomorphisms(symmetric(3), cyclic(3)).size(), 1u);
  EXPECT_EQ(automorphisms(direct_product(z2, z2).group).size(), 6u);
  EXPECT_EQ(automorphisms(quaternion8()).size(), 24u);
}

TEST(Homomorphisms, AutomorphismsMatchOracle) {
  for (auto const& g : family_list(8)) {
    auto lib = automorphisms(g);
    auto ref = oracle::automorphisms(g);
    std::set<std::vector<Elem>> a, b(ref.begin(), ref.end());
    for (auto const& f : lib) a.insert(f.map());
    EXPECT_EQ(a, b) << g.name();
    EXPECT_EQ(lib.front(), GroupHom::identity(g));
  }
}

TEST(Isomorphism, RelabelledTables) {
  // Conjugating the S4 table by a fixed relabelling keeps it isomorphic.
  auto g = symmetric(4);
  std::vector<Elem> perm(g.order());
  for (Elem x = 0; x < g.order(); ++x) perm[x] = (x * 7 + 3) % g.order();
  std::vector<Elem> back(g.order());
  for (Elem x = 0; x < g.order(); ++x) back[perm[x]] = x;
  std::vector<std::vector<Elem>> rows(g.order(), std::vector<Elem>(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) rows[x][y] = perm[g.mul(back[x], back[y])];
  auto h = make_group(rows);
  auto iso = find_isomorphism(g, h);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(oracle::is_hom(g, h, iso->map()));
  EXPECT_TRUE(iso->is_injective());
}

TEST(Json, RoundTripIsExact) {
  for (auto const& g : family_list(12)) {
    std::string const text = group_to_json(g);
    auto back = group_from_json(text);
    EXPECT_EQ(group_to_json(back), text) << g.name();
    EXPECT_EQ(back, g);
  }
}

TEST(Json, TrivialAndPermutationForms) {
  EXPECT_EQ(group_from_json(R"({"order":1,"cayley":[[0]]})").order(), 1u);
  auto s3 = group_from_json(R"({"degree":3,"generators":[[[1,2]],[[1,2,3]]]})");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_TRUE(is_isomorphic(s3, symmetric(3)));
  auto v4 = group_from_json(R"({"degree":4,"generators":[[[1,2],[3,4]],[[1,3],[2,4]]]})");
  EXPECT_TRUE(is_isomorphic(v4, direct_product(cyclic(2), cyclic(2)).group));
}

TEST(Json, ErrorsCarryPosition) {
  try {
    group_from_json("{\"order\":2,\n \"cayley\":[[0,1],[1,0]]");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { group_from_json(R"({"cayley":[[0,"x"]]})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { group_from_json(R"({"order":3,"cayley":[[0,1],[1,0]]})"); }),
            ErrorKind::MalformedTable);
  EXPECT_EQ(kind_of([] { group_from_json(R"({"degree":3,"generators":[[[1,4]]]})"); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { group_from_json(R"({"degree":3,"generators":[[[1,2],[2,3]]]})"); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { group_from_json("[]"); }), ErrorKind::ParseError);
}
