#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permforms/errors.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/lattice.hpp"
#include "permforms/perm_ops.hpp"

using namespace permforms;
namespace oracle = permforms::testing;

namespace {

Permutation perm(const std::string& cycles, unsigned degree) {
  return Permutation::parse_cycles(cycles, degree);
}

Group s3() {
  return Group::from_generators(3, {perm("(0 1 2)", 3), perm("(0 1)", 3)});
}

std::multiset<std::uint64_t> orders_of(const std::vector<Subgroup>& subs) {
  std::multiset<std::uint64_t> out;
  for (const auto& s : subs) out.insert(s.order());
  return out;
}

}  // namespace

TEST_CASE("subgroup lattice classes") {
  auto lat = subgroup_lattice(s3());
  REQUIRE(lat.class_count() == 4);
  CHECK(lat.classes()[0].order == 1);
  CHECK(lat.classes()[1].order == 2);
  CHECK(lat.classes()[1].class_size == 3);
  CHECK(lat.classes()[2].order == 3);
  CHECK(lat.classes()[3].order == 6);
  CHECK(lat.total_subgroup_count() == 6);

  CHECK(subgroup_lattice(cyclic_group(7)).class_count() == 2);

  auto q8 = quaternion_group();
  auto lat8 = subgroup_lattice(q8);
  CHECK(lat8.class_count() == 6);  // 1, Z, three C4, Q8
  int c4_classes = 0;
  for (const auto& c : lat8.classes())
    if (c.order == 4) ++c4_classes;
  CHECK(c4_classes == 3);

  EngineConfig small_cap;
  small_cap.lattice_cap = 5;
  CHECK_THROWS_AS(subgroup_lattice(symmetric_group(3, small_cap)), ResourceError);
}

TEST_CASE("lattice matches the independent subgroup enumeration") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    auto brute = oracle::oracle_all_subgroups(named.group);
    auto lat = subgroup_lattice(named.group);
    CHECK(lat.total_subgroup_count() == brute.size());
    std::uint64_t by_classes = 0;
    for (const auto& c : lat.classes()) by_classes += c.class_size;
    CHECK(by_classes == brute.size());
  }
}

TEST_CASE("class size times normalizer order is the group order") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    auto lat = subgroup_lattice(named.group);
    for (const auto& c : lat.classes()) {
      auto n = normalizer(named.group, c.representative);
      CHECK(c.class_size * n.order() == named.group.order());
    }
  }
}

TEST_CASE("maximal subgroups") {
  CHECK(orders_of(maximal_subgroups(s3())) == std::multiset<std::uint64_t>{2, 3});
  CHECK(orders_of(maximal_subgroups(cyclic_group(6))) == std::multiset<std::uint64_t>{2, 3});
  CHECK(orders_of(maximal_subgroups(alternating_group(4))) ==
        std::multiset<std::uint64_t>{3, 4});
}

TEST_CASE("maximal subgroups containing a given subgroup") {
  auto g = s3();
  Subgroup c2(g, {perm("(0 1)", 3)});
  auto over_c2 = maximal_subgroups_containing(g, c2);
  REQUIRE(over_c2.size() == 1);
  CHECK(over_c2[0].same_subgroup_as(c2));

  auto c6 = cyclic_group(6);
  CHECK(orders_of(maximal_subgroups_containing(c6, Subgroup::trivial_in(c6))) ==
        std::multiset<std::uint64_t>{2, 3});

  auto a4 = alternating_group(4);
  Subgroup c2a(a4, {perm("(0 1)(2 3)", 4)});
  auto over = maximal_subgroups_containing(a4, c2a);
  REQUIRE(over.size() == 1);
  CHECK(over[0].order() == 4);
}

TEST_CASE("normal subgroups") {
  CHECK(orders_of(normal_subgroups(s3())) == std::multiset<std::uint64_t>{1, 3, 6});
  CHECK(normal_subgroups(cyclic_group(12)).size() == 6);  // abelian: all subgroups
  CHECK(orders_of(normal_subgroups(alternating_group(4))) ==
        std::multiset<std::uint64_t>{1, 4, 12});

  // Cross-check against the lattice: classes of size one that pass the
  // conjugation test.
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 20) continue;
    auto lat = subgroup_lattice(named.group);
    std::uint64_t singletons = 0;
    for (const auto& c : lat.classes())
      if (c.class_size == 1) ++singletons;
    CHECK(normal_subgroups(named.group).size() == singletons);
  }
}

TEST_CASE("sylow subgroups") {
  auto g = s3();
  CHECK(sylow_subgroup(g, 3).order() == 3);
  CHECK(sylow_subgroup(g, 2).order() == 2);
  CHECK(sylow_subgroup(alternating_group(4), 2).order() == 4);
  CHECK_THROWS_AS(sylow_subgroup(g, 5), InputError);

  // Orders are the exact p-parts, and all Sylow subgroups in the lattice are
  // conjugate (one class of that order which is a p-group).
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    for (auto p : pi_of_group(named.group)) {
      std::uint64_t part = 1, rest = named.group.order();
      while (rest % p == 0) {
        part *= p;
        rest /= p;
      }
      auto syl = sylow_subgroup(named.group, p);
      CHECK(syl.order() == part);
      auto lat = subgroup_lattice(named.group);
      int classes_of_that_order = 0;
      for (const auto& c : lat.classes())
        if (c.order == part) ++classes_of_that_order;
      // All subgroups of full p-part order are Sylow, hence conjugate.
      CHECK(classes_of_that_order == 1);
    }
  }
}

TEST_CASE("hall p-prime subgroups") {
  auto h = hall_pprime_subgroup(s3(), 2);
  REQUIRE(h.has_value());
  CHECK(h->order() == 3);
  auto c6 = cyclic_group(6);
  auto h3 = hall_pprime_subgroup(c6, 3);
  REQUIRE(h3.has_value());
  CHECK(h3->order() == 2);
  auto a4 = alternating_group(4);
  auto h4 = hall_pprime_subgroup(a4, 3);
  REQUIRE(h4.has_value());
  CHECK(h4->order() == 4);
  // A5 has no subgroup of order 20's complement... order 15 Hall subgroup.
  auto a5 = alternating_group(5);
  CHECK_FALSE(hall_pprime_subgroup(a5, 2).has_value());
}

TEST_CASE("primary cyclic subgroups") {
  CHECK(orders_of(primary_cyclic_subgroups(s3())) == std::multiset<std::uint64_t>{2, 3});
  CHECK(orders_of(primary_cyclic_subgroups(cyclic_group(6))) ==
        std::multiset<std::uint64_t>{2, 3});
  CHECK(orders_of(primary_cyclic_subgroups(quaternion_group())) ==
        std::multiset<std::uint64_t>{2, 4, 4, 4});
}

TEST_CASE("frattini subgroup") {
  CHECK(frattini_subgroup(s3()).order() == 1);
  CHECK(frattini_subgroup(cyclic_group(4)).order() == 2);
  CHECK(frattini_subgroup(quaternion_group()).order() == 2);
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    auto phi = frattini_subgroup(named.group);
    CHECK(is_nilpotent_group(phi.group()));
    CHECK(core(named.group, phi).same_subgroup_as(phi));  // normal
  }
}

TEST_CASE("maximal chains") {
  auto c6 = cyclic_group(6);
  CHECK(all_maximal_chains(c6, Subgroup::trivial_in(c6)).size() == 2);

  auto g = s3();
  Subgroup c2(g, {perm("(0 1)", 3)});
  auto chains = all_maximal_chains(g, c2);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].links.size() == 2);

  auto whole = all_maximal_chains(g, Subgroup::whole(g));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].links.size() == 1);

  CHECK_THROWS_AS(all_maximal_chains(g, Subgroup::trivial_in(g), 2), ResourceError);

  // Every consecutive pair is a genuine maximal inclusion: nothing strictly
  // between, checked against the independent enumeration.
  auto a4 = alternating_group(4);
  auto brute = oracle::oracle_all_subgroups(a4);
  for (const auto& chain : all_maximal_chains(a4, Subgroup::trivial_in(a4))) {
    for (std::size_t i = 1; i < chain.links.size(); ++i) {
      const auto& lo = chain.links[i - 1];
      const auto& hi = chain.links[i];
      CHECK(hi.contains_subgroup(lo));
      CHECK(lo.order() < hi.order());
      for (const auto& mid : brute) {
        if (mid.size() <= lo.order() || mid.size() >= hi.order()) continue;
        bool lo_in_mid = true, mid_in_hi = true;
        for (const auto& x : lo.group().elements())
          if (!mid.count(x.images())) {
            lo_in_mid = false;
            break;
          }
        if (!lo_in_mid) continue;
        for (const auto& t : mid)
          if (!hi.contains(Permutation::from_images(std::vector<Point>(t)))) {
            mid_in_hi = false;
            break;
          }
        CHECK_FALSE(mid_in_hi);  // no strictly intermediate subgroup
      }
    }
  }
}

TEST_CASE("soluble maximal subgroups have prime power index") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    for (const auto& m : maximal_subgroups(named.group)) {
      std::uint64_t index = named.group.order() / m.order();
      CHECK(pi_of_group(cyclic_group(static_cast<unsigned>(index))).size() <= 1);
    }
  }
}

TEST_CASE("lattice index containment and maximality relations") {
  auto lat = subgroup_lattice(s3());
  // classes: 0 trivial, 1 C2, 2 C3, 3 whole
  CHECK(lat.class_contained_in(0, 3));
  CHECK(lat.class_contained_in(1, 3));
  CHECK(lat.class_contained_in(0, 1));
  CHECK_FALSE(lat.class_contained_in(1, 2));
  CHECK(lat.class_maximal_in(1, 3));
  CHECK(lat.class_maximal_in(2, 3));
  CHECK(lat.class_maximal_in(0, 1));
  CHECK_FALSE(lat.class_maximal_in(0, 3));  // C2 and C3 lie between

  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 16) continue;
    auto l = subgroup_lattice(named.group);
    int trivial_classes = 0, whole_classes = 0;
    for (const auto& c : l.classes()) {
      if (c.order == 1) ++trivial_classes;
      if (c.order == named.group.order()) ++whole_classes;
    }
    CHECK(trivial_classes == 1);
    CHECK(whole_classes == 1);
    // Containment respects order divisibility.
    for (std::size_t i = 0; i < l.class_count(); ++i)
      for (std::size_t j = 0; j < l.class_count(); ++j)
        if (l.class_contained_in(i, j))
          CHECK(l.classes()[j].order % l.classes()[i].order == 0);
  }
}

TEST_CASE("soluble groups always have hall p-prime subgroups") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    for (auto p : pi_of_group(named.group)) {
      auto h = hall_pprime_subgroup(named.group, p);
      REQUIRE(h.has_value());
      CHECK(h->order() * sylow_subgroup(named.group, p).order() == named.group.order());
    }
  }
}
