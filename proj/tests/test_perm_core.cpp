#include <doctest.h>

#include "oracles.hpp"
#include "permforms/errors.hpp"
#include "permforms/group.hpp"
#include "permforms/groupgen.hpp"
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

Group a4() {
  return Group::from_generators(4, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4),
                                    perm("(1 2 3)", 4)});
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  auto p = perm("(0 1 2)(3 4)", 5);
  CHECK(p.order() == 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(6).is_identity());
  CHECK(p.to_cycles() == "(0 1 2)(3 4)");
  CHECK(perm("()", 4).is_identity());
  CHECK(perm("( 0 , 1 )", 2) == perm("(0 1)", 2));
  CHECK_THROWS_AS(perm("(0 1", 3), InputError);
  CHECK_THROWS_AS(perm("(0 5)", 3), InputError);
  CHECK_THROWS_AS(perm("(0 0)", 3), InputError);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InputError);

  // Right-action composition and conjugation conventions.
  auto a = perm("(0 1)", 3), b = perm("(1 2)", 3);
  CHECK((a * b).apply(0) == b.apply(a.apply(0)));
  CHECK(a.conjugated_by(perm("(0 1 2)", 3)) == perm("(1 2)", 3));
}

TEST_CASE("group construction and membership") {
  auto g = s3();
  CHECK(g.order() == 6);
  CHECK(Group::trivial(3).order() == 1);
  CHECK(a4().order() == 12);
  CHECK(a4().order() == oracle::oracle_order(a4()));

  CHECK(g.contains(perm("(0 1 2)", 3)));
  CHECK(Group::trivial(3).contains(Permutation::identity(3)));
  // Odd permutation absent from the exhaustive A4 element list.
  auto a4_elems = oracle::oracle_closure(4, a4().generators());
  CHECK(a4_elems.size() == 12);
  CHECK(a4_elems.count(perm("(0 1)", 4).images()) == 0);
  CHECK_FALSE(a4().contains(perm("(0 1)", 4)));
  CHECK_THROWS_AS(g.contains(perm("(0 1)", 4)), InputError);
}

TEST_CASE("membership structure is reproducible and seed independent") {
  EngineConfig c1;
  c1.seed = 1;
  EngineConfig c2;
  c2.seed = 99999;
  for (unsigned n : {4u, 5u, 6u}) {
    auto g1 = symmetric_group(n, c1);
    auto g2 = symmetric_group(n, c2);
    CHECK(g1.order() == g2.order());
    for (const auto& e : g1.elements()) CHECK(g2.contains(e));
  }
}

TEST_CASE("order caps are enforced") {
  EngineConfig cfg;
  cfg.order_cap = 100;
  CHECK_THROWS_AS(symmetric_group(6, cfg), ResourceError);
  cfg = EngineConfig();
  cfg.degree_cap = 4;
  CHECK_THROWS_AS(Group::from_generators(5, {perm("(0 1 2 3 4)", 5)}, cfg), ResourceError);
}

TEST_CASE("normalizer") {
  auto g = s3();
  Subgroup c2(g, {perm("(0 1)", 3)});
  auto n = normalizer(g, c2);
  CHECK(n.order() == 2);
  CHECK(n.same_subgroup_as(c2));
  CHECK(n.order() == oracle::oracle_normalizer_order(g, c2));

  Subgroup a3(g, {perm("(0 1 2)", 3)});
  CHECK(normalizer(g, a3).order() == 6);
  CHECK(normalizer(g, Subgroup::whole(g)).order() == 6);
}

TEST_CASE("core") {
  auto g = s3();
  Subgroup c2(g, {perm("(0 1)", 3)});
  CHECK(core(g, c2).order() == 1);
  CHECK(oracle::oracle_core_elements(g, c2).size() == 1);

  Subgroup a3(g, {perm("(0 1 2)", 3)});
  CHECK(core(g, a3).same_subgroup_as(a3));

  auto h = a4();
  Subgroup v4(h, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)});
  CHECK(core(h, v4).same_subgroup_as(v4));
  CHECK(oracle::oracle_core_elements(h, v4).size() == 4);
}

TEST_CASE("conjugate subgroup") {
  auto g = s3();
  Subgroup h(g, {perm("(0 1)", 3)});
  auto hg = conjugate_subgroup(h, perm("(0 1 2)", 3));
  CHECK(hg.order() == 2);
  CHECK(hg.contains(perm("(1 2)", 3)));
  Subgroup a3(g, {perm("(0 1 2)", 3)});
  CHECK(conjugate_subgroup(a3, perm("(0 1)", 3)).same_subgroup_as(a3));
  CHECK(conjugate_subgroup(h, g.identity()).same_subgroup_as(h));
  CHECK_THROWS_AS(conjugate_subgroup(h, perm("(0 1)(2 3)", 3)), InputError);
}

TEST_CASE("derived subgroup and series") {
  auto g = s3();
  auto d = derived_subgroup(g);
  CHECK(d.order() == 3);
  CHECK(d.contains(perm("(0 1 2)", 3)));
  CHECK(oracle::oracle_derived_order(g) == 3);

  CHECK(derived_subgroup(cyclic_group(6)).order() == 1);
  CHECK(derived_subgroup(a4()).order() == 4);
  CHECK(oracle::oracle_derived_order(a4()) == 4);

  auto series = derived_series(g);
  REQUIRE(series.size() == 3);
  CHECK(series[0].order() == 6);
  CHECK(series[1].order() == 3);
  CHECK(series[2].order() == 1);

  auto c6_series = derived_series(cyclic_group(6));
  REQUIRE(c6_series.size() == 2);
  CHECK(c6_series[1].order() == 1);

  auto a5 = alternating_group(5);
  auto a5_series = derived_series(a5);
  REQUIRE(a5_series.size() == 2);
  CHECK(a5_series[0].order() == 60);
  CHECK(a5_series[1].order() == 60);
  CHECK(is_soluble(s3()));
  CHECK_FALSE(is_soluble(a5));
}

TEST_CASE("quotient by the coset action") {
  auto g = s3();
  Subgroup a3(g, {perm("(0 1 2)", 3)});
  auto q = quotient(g, a3);
  CHECK(q.order() == 2);
  CHECK(q.degree() == 2);

  auto regular = quotient(g, Subgroup::trivial_in(g));
  CHECK(regular.order() == 6);
  CHECK(regular.degree() == 6);

  CHECK(quotient(g, Subgroup::whole(g)).order() == 1);

  Subgroup c2(g, {perm("(0 1)", 3)});
  CHECK_THROWS_AS(quotient(g, c2), InputError);

  // The homomorphism maps elements onto their coset action.
  auto qm = quotient_map(g, a3);
  CHECK(qm.image_of(perm("(0 1)", 3)).order() == 2);
  CHECK(qm.image_of(perm("(0 1 2)", 3)).is_identity());
  CHECK(qm.image_of(a3).order() == 1);
}

TEST_CASE("fitting subgroup") {
  CHECK(fitting_subgroup(s3()).order() == 3);
  auto d8 = dihedral_group(4);
  CHECK(fitting_subgroup(d8).order() == 8);
  auto s4 = symmetric_group(4);
  auto fit = fitting_subgroup(s4);
  CHECK(fit.order() == 4);
  for (const auto& e : fit.group().elements())
    CHECK(e.order() <= 2);
}

TEST_CASE("quotient respects derived subgroups") {
  // derived(G/N) is the image of derived(G), for every normal subgroup.
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24 || named.group.order() < 6) continue;
    auto g = named.group;
    auto derived_g = derived_subgroup(g);
    for (const auto& n : normal_subgroups(g)) {
      auto qm = quotient_map(g, n);
      auto image = qm.image_of(derived_g);
      auto derived_q = derived_subgroup(qm.quotient());
      CHECK(image.same_subgroup_as(Subgroup(qm.quotient(), derived_q.generators())));
      CHECK(qm.quotient().order() * n.order() == g.order());
    }
  }
}

TEST_CASE("fitting subgroup is the largest normal nilpotent subgroup") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    auto fit = fitting_subgroup(named.group);
    CHECK(is_nilpotent_group(fit.group()));
    for (const auto& n : normal_subgroups(named.group)) {
      if (is_nilpotent_group(n.group())) CHECK(fit.contains_subgroup(n));
    }
  }
}

TEST_CASE("core contains every normal subgroup below it") {
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 20) continue;
    auto lat = subgroup_lattice(named.group);
    auto normals = normal_subgroups(named.group);
    for (const auto& cls : lat.classes()) {
      auto k = core(named.group, cls.representative);
      CHECK(cls.representative.contains_subgroup(k));
      CHECK(core(named.group, k).same_subgroup_as(k));  // normal in G
      for (const auto& n : normals)
        if (cls.representative.contains_subgroup(n)) CHECK(k.contains_subgroup(n));
    }
  }
}
