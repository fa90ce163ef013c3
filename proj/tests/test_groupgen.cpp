#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "permforms/classify.hpp"
#include "permforms/errors.hpp"
#include "permforms/formation.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/perm_ops.hpp"

using namespace permforms;
namespace oracle = permforms::testing;

TEST_CASE("standard constructions") {
  CHECK(cyclic_group(6).order() == 6);
  CHECK(cyclic_group(6).generators().size() == 1);
  CHECK(cyclic_group(1).order() == 1);

  auto e9 = elementary_abelian_group(3, 2);
  CHECK(e9.order() == 9);
  for (const auto& e : e9.elements()) CHECK((e.order() == 1 || e.order() == 3));

  CHECK(dihedral_group(4).order() == 8);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(oracle::oracle_order(alternating_group(4)) == 12);
  CHECK(quaternion_group().order() == 8);
  CHECK(make_standard(StandardKind::kDicyclic, 4).order() == 16);

  EngineConfig capped;
  capped.degree_cap = 8;
  CHECK_THROWS_AS(cyclic_group(20, capped), ResourceError);
}

TEST_CASE("dicyclic groups have a unique involution") {
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u}) {
    auto g = dicyclic_group(n);
    CHECK(g.order() == 4 * n);
    int involutions = 0;
    for (const auto& e : g.elements())
      if (e.order() == 2) ++involutions;
    if (n % 2 == 0) CHECK(involutions == 1);  // generalized quaternion style
  }
  CHECK(isomorphic(dicyclic_group(2), quaternion_group()));
}

TEST_CASE("direct products") {
  auto s3 = symmetric_group(3);
  auto p = direct_product(s3, s3);
  CHECK(p.order() == 36);
  CHECK(p.degree() == 6);
  CHECK(direct_product(s3, Group::trivial(1)).order() == 6);
  CHECK(direct_product({s3, s3, alternating_group(4)}).order() == 432);
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic_group(3);
  auto c2 = cyclic_group(2);
  auto dsp = semidirect_product(c3, c2, inverting_action(c3, c2));
  CHECK(dsp.order() == 6);
  CHECK(isomorphic(dsp, symmetric_group(3)));

  ActionSpec square;
  square.images = {{cyclic_group(7).generators()[0].power(2)}};
  auto frob21 = semidirect_product(cyclic_group(7), cyclic_group(3), square);
  CHECK(frob21.order() == 21);
  CHECK(is_schmidt_group(frob21));

  auto q8 = quaternion_group();
  ActionSpec rotate;
  rotate.images = {{q8.generators()[1], q8.generators()[0] * q8.generators()[1]}};
  auto sl = semidirect_product(q8, cyclic_group(3), rotate);
  CHECK(sl.order() == 24);
  // Element-order census of SL(2,3): 1, one involution, 8 of order 3,
  // 6 of order 4, 8 of order 6.
  std::map<std::uint64_t, int> census;
  for (const auto& e : sl.elements()) ++census[e.order()];
  CHECK(census[1] == 1);
  CHECK(census[2] == 1);
  CHECK(census[3] == 8);
  CHECK(census[4] == 6);
  CHECK(census[6] == 8);

  // An invalid action (not an automorphism) is rejected.
  ActionSpec bogus;
  bogus.images = {{cyclic_group(4).generators()[0].power(2)}};  // a -> a^2 kills order
  CHECK_THROWS_AS(semidirect_product(cyclic_group(4), c2, bogus), InputError);

  // A map that is an automorphism but violates the complement's relations.
  ActionSpec order4;  // a -> a^2 has order 4 in Aut(C5), not order 2
  order4.images = {{cyclic_group(5).generators()[0].power(2)}};
  CHECK_THROWS_AS(semidirect_product(cyclic_group(5), c2, order4), InputError);
}

TEST_CASE("brute force isomorphism testing") {
  CHECK(isomorphic(symmetric_group(3), dihedral_group(3)));
  CHECK_FALSE(isomorphic(cyclic_group(4), elementary_abelian_group(2, 2)));
  CHECK_FALSE(isomorphic(dihedral_group(4), quaternion_group()));
  CHECK(isomorphic(symmetric_group(4), symmetric_group(4)));
  // Same census, different groups: C8 x C2 versus the modular group of
  // order 16.
  auto c8xc2 = direct_product(cyclic_group(8), cyclic_group(2));
  ActionSpec fifth;
  fifth.images = {{cyclic_group(8).generators()[0].power(5)}};
  auto m16 = semidirect_product(cyclic_group(8), cyclic_group(2), fifth);
  CHECK_FALSE(isomorphic(c8xc2, m16));
}

TEST_CASE("small corpus covers every isomorphism type up to order 24") {
  auto corpus = small_group_corpus();
  std::map<unsigned, std::vector<const NamedGroup*>> by_order;
  for (const auto& g : corpus)
    by_order[static_cast<unsigned>(g.group.order())].push_back(&g);

  for (const auto& [order, expected] : group_type_counts_le_24()) {
    INFO("order ", order);
    REQUIRE(by_order.count(order));
    CHECK(by_order[order].size() == expected);
  }

  // Pairwise non-isomorphic within each order (brute force).
  for (const auto& [order, groups] : by_order) {
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        INFO(groups[i]->name, " vs ", groups[j]->name);
        CHECK_FALSE(isomorphic(groups[i]->group, groups[j]->group));
      }
  }

  for (const auto& g : corpus) CHECK(is_soluble(g.group));
}

TEST_CASE("family corpus is soluble and within the order bound") {
  auto family = family_corpus();
  CHECK(family.size() > 100);
  for (const auto& g : family) {
    INFO(g.name);
    CHECK(g.group.order() >= 25);
    CHECK(g.group.order() <= 200);
    CHECK(is_soluble(g.group));
  }
  // Names are unique and sorted.
  for (std::size_t i = 1; i < family.size(); ++i) CHECK(family[i - 1].name < family[i].name);
}

TEST_CASE("standard constructions pass the exhaustive order oracle") {
  EngineConfig wide;
  wide.degree_cap = 64;
  CHECK(oracle::oracle_order(symmetric_group(5, wide)) == 120);
  CHECK(oracle::oracle_order(dihedral_group(31, wide)) == 62);
  CHECK(oracle::oracle_order(dicyclic_group(11, wide)) == 44);
  CHECK(oracle::oracle_order(elementary_abelian_group(2, 6, wide)) == 64);
  CHECK(oracle::oracle_order(alternating_group(6, wide)) == 360);
}

TEST_CASE("the order-864 example group") {
  auto ex = build_example_864();
  CHECK(ex.group.order() == 864);
  CHECK(ex.group.degree() == 12);
  CHECK(ex.passing.size() == 6);
  CHECK(ex.chosen == ex.passing.front());

  auto na = Formation::nilpotent_derived();
  auto nil = Formation::nilpotent();
  auto r_na = residual(na, ex.group);
  auto r_n = residual(nil, ex.group);
  auto der = derived_subgroup(ex.group);
  CHECK(r_na.order() == 36);
  CHECK(r_n.order() == 108);
  CHECK(der.order() == 216);
  CHECK(r_n.contains_subgroup(r_na));
  CHECK(der.contains_subgroup(r_n));
  CHECK(r_na.same_subgroup_as(fitting_subgroup(ex.group)));

  // Rebuilding yields the same group (deterministic pinning).
  auto again = build_example_864();
  CHECK(ex.group.same_group_as(again.group));
}
