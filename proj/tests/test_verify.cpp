#include <doctest.h>

#include "oracles.hpp"
#include "permforms/classify.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/lattice.hpp"
#include "permforms/perm_ops.hpp"
#include "permforms/verify.hpp"

using namespace permforms;

namespace {

Group s3() { return symmetric_group(3); }

Group sl23() {
  auto q8 = quaternion_group();
  ActionSpec rotate;
  rotate.images = {{q8.generators()[1], q8.generators()[0] * q8.generators()[1]}};
  return semidirect_product(q8, cyclic_group(3), rotate);
}

Group c7_c3() {
  ActionSpec square;
  square.images = {{cyclic_group(7).generators()[0].power(2)}};
  return semidirect_product(cyclic_group(7), cyclic_group(3), square);
}

/// Statement (3) witnesses are rechecked from the witness data alone.
void check_s3_witness(const Formation& f, const Group& g, const DecompositionWitness& w) {
  std::uint64_t part = 1, rest = g.order();
  while (rest % w.p == 0) {
    part *= w.p;
    rest /= w.p;
  }
  CHECK(w.x_order == part);  // |<x>| is the full p-part
  auto x = Permutation::parse_cycles(w.x, g.degree());
  CHECK(g.contains(x));
  CHECK(x.order() == w.x_order);
  Subgroup xs(g, {x});
  CHECK(is_self_normalizing(g, xs));
  CHECK(is_nilpotent_group(xs.group()));
  auto derived = derived_subgroup(g);
  CHECK(derived.order() == w.derived_order);
  CHECK(g.order() == w.derived_order * w.x_order);
  // |G : G' <x^p>| = p.
  CHECK(g.order() / w.fpart_order == w.p);
  std::vector<Permutation> gens = derived.generators();
  gens.push_back(x.power(static_cast<long long>(w.p)));
  Subgroup fpart(g, gens);
  CHECK(fpart.order() == w.fpart_order);
  CHECK(belongs(f, fpart.group()));
}

}  // namespace

TEST_CASE("statement checks on S3") {
  auto n = Formation::nilpotent();
  auto g = s3();
  CHECK(check_statement1(n, g).value);
  CHECK(check_statement2(n, g).value);
  auto st3 = check_statement3(n, g);
  REQUIRE(st3.value);
  REQUIRE(st3.witness.has_value());
  CHECK(st3.witness->p == 2);
  CHECK(st3.witness->fpart_order == 3);
  check_s3_witness(n, g, *st3.witness);
}

TEST_CASE("statement checks on SL(2,3)") {
  auto n = Formation::nilpotent();
  auto g = sl23();
  auto s1 = check_statement1(n, g);
  CHECK_FALSE(s1.value);
  REQUIRE(s1.witness.has_value());
  CHECK(s1.witness->order == 3);  // the Sylow 3-subgroup, normalizer of order 6
  CHECK_FALSE(s1.witness->self_normalizing);
  CHECK_FALSE(s1.witness->f_subnormal);
  CHECK_FALSE(check_statement2(n, g).value);
  CHECK_FALSE(check_statement3(n, g).value);
}

TEST_CASE("statement checks on C7:C3") {
  auto n = Formation::nilpotent();
  auto g = c7_c3();
  CHECK(check_statement1(n, g).value);
  CHECK(check_statement2(n, g).value);
  auto st3 = check_statement3(n, g);
  REQUIRE(st3.value);
  CHECK(st3.witness->p == 3);
  CHECK(st3.witness->fpart_order == 7);
  check_s3_witness(n, g, *st3.witness);
}

TEST_CASE("verify_theorem statuses") {
  auto n = Formation::nilpotent();
  auto r = verify_theorem(n, s3(), "s3");
  CHECK(r.status == VerifyStatus::kVerified);
  CHECK(r.statements.s1);
  CHECK(r.statements.s2);
  CHECK(r.statements.s3);

  auto r2 = verify_theorem(n, sl23(), "sl23");
  CHECK(r2.status == VerifyStatus::kVerified);  // the equivalence holds negatively
  CHECK_FALSE(r2.statements.s1);
  CHECK_FALSE(r2.statements.s2);
  CHECK_FALSE(r2.statements.s3);

  CHECK(verify_theorem(Formation::supersoluble(), s3()).status ==
        VerifyStatus::kSkippedFlags);
  CHECK(verify_theorem(n, alternating_group(5)).status == VerifyStatus::kSkippedInsoluble);
  CHECK(verify_theorem(n, cyclic_group(6)).status == VerifyStatus::kSkippedInF);
}

TEST_CASE("verify_corollary statuses") {
  auto n = Formation::nilpotent();
  auto r = verify_corollary(n, s3(), "s3");
  CHECK(r.status == VerifyStatus::kVerified);
  CHECK(r.statements.s1);
  CHECK(r.statements.s2);
  CHECK(r.statements.s3);
  CHECK(verify_corollary(n, alternating_group(5)).status ==
        VerifyStatus::kSkippedInsoluble);

  // Corollary (3) on S3: <x> of order 2 is an N-projector and S3' = S3^N.
  CHECK(check_corollary3(n, s3()).value);
  // Members are rejected by the corollary checker.
  CHECK_FALSE(check_corollary3(n, cyclic_group(4)).value);
}

TEST_CASE("statement two implies statement one by construction") {
  auto n = Formation::nilpotent();
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    if (check_statement2(n, named.group).value) CHECK(check_statement1(n, named.group).value);
    if (check_corollary2(n, named.group).value) CHECK(check_corollary1(n, named.group).value);
  }
}

TEST_CASE("lemma: membership by primary cyclic subgroups") {
  auto n = Formation::nilpotent();
  auto na = Formation::nilpotent_derived();
  auto both_false = verify_lemma_in_f(n, s3());
  REQUIRE(both_false.has_value());
  CHECK(*both_false);
  auto both_true = verify_lemma_in_f(na, s3());
  REQUIRE(both_true.has_value());
  CHECK(*both_true);
  auto nilpotent_case = verify_lemma_in_f(n, cyclic_group(6));
  REQUIRE(nilpotent_case.has_value());
  CHECK(*nilpotent_case);
  CHECK_FALSE(verify_lemma_in_f(Formation::abelian(), s3()).has_value());  // flag gate
  CHECK_FALSE(verify_lemma_in_f(n, alternating_group(5)).has_value());     // insoluble
}

TEST_CASE("lemma suites on a known-clean group") {
  for (const auto& f : {Formation::nilpotent(), Formation::supersoluble()}) {
    auto outcomes = verify_lemmas(f, symmetric_group(4));
    for (const auto& o : outcomes) {
      INFO(o.lemma, " ", o.detail);
      if (o.applicable) CHECK(o.holds);
    }
  }
}

TEST_CASE("run_corpus") {
  auto n = Formation::nilpotent();
  std::vector<CorpusEntry> small;
  for (const auto& named : small_group_corpus())
    small.push_back(CorpusEntry{named.name, named.group});

  SweepOptions opt;
  opt.mode = SweepMode::kTheorem;
  auto sweep = run_corpus(small, n, opt);
  CHECK(sweep.counterexamples == 0);
  CHECK(sweep.errors == 0);
  CHECK(sweep.exit_code() == 0);
  CHECK(sweep.reports.size() == small.size());

  // Deterministic report order.
  auto sweep2 = run_corpus(small, n, opt);
  REQUIRE(sweep.reports.size() == sweep2.reports.size());
  for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
    CHECK(sweep.reports[i].group_name == sweep2.reports[i].group_name);
    CHECK(sweep.reports[i].status == sweep2.reports[i].status);
  }

  // Parallel sweeps produce the same reports in the same order.
  opt.jobs = 4;
  auto sweep4 = run_corpus(small, n, opt);
  REQUIRE(sweep4.reports.size() == sweep.reports.size());
  for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
    CHECK(sweep.reports[i].group_name == sweep4.reports[i].group_name);
    CHECK(sweep.reports[i].status == sweep4.reports[i].status);
  }

  std::vector<CorpusEntry> one{{"s3", s3()}};
  SweepOptions u_opt;
  auto u_sweep = run_corpus(one, Formation::supersoluble(), u_opt);
  CHECK(u_sweep.skipped_flags == 1);
  CHECK(u_sweep.exit_code() == 0);

  std::vector<CorpusEntry> a5{{"a5", alternating_group(5)}};
  auto a5_sweep = run_corpus(a5, n, u_opt);
  CHECK(a5_sweep.skipped_insoluble == 1);

  // order_max filters entries out of the sweep entirely.
  SweepOptions capped;
  capped.order_max = 10;
  auto few = run_corpus(small, n, capped);
  for (const auto& r : few.reports) CHECK(r.group_order <= 10);
}

TEST_CASE("statement three witnesses survive independent rechecking") {
  auto n = Formation::nilpotent();
  for (const auto& named : small_group_corpus()) {
    if (named.group.order() > 24) continue;
    auto r = check_statement3(n, named.group);
    if (!r.value) continue;
    REQUIRE(r.witness.has_value());
    check_s3_witness(n, named.group, *r.witness);
  }
}
