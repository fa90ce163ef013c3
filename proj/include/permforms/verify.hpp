#ifndef PERMFORMS_VERIFY_HPP_
#define PERMFORMS_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "permforms/formation.hpp"
#include "permforms/group.hpp"

namespace permforms {

enum class VerifyStatus {
  kVerified,
  kCounterexample,
  kSkippedInF,
  kSkippedInsoluble,
  kSkippedFlags,
  kError,
};

const char* to_string(VerifyStatus s);

/// A concrete failing subgroup (for the universally quantified statements).
struct SubgroupWitness {
  std::uint64_t order = 0;
  std::vector<std::string> generators;  // cycle notation
  bool self_normalizing = false;
  bool f_subnormal = false;
  bool f_abnormal = false;
};

/// The decomposition data behind a true statement (3): G = G' x| <x>.
struct DecompositionWitness {
  std::uint64_t p = 0;
  std::string x;
  std::uint64_t x_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t fpart_order = 0;  // |G' <x^p>|
  // Observed (logged, never asserted): G' <x^p> has no proper
  // self-normalizing primary cyclic subgroup of its own.
  bool fpart_free_of_self_normalizing_primary_cyclic = false;
};

struct StatementVector {
  bool s1 = false, s2 = false, s3 = false;
  std::optional<SubgroupWitness> s1_witness, s2_witness;  // set when false
  std::optional<DecompositionWitness> s3_witness;         // set when true
  bool all_equal() const { return s1 == s2 && s2 == s3; }
};

struct VerificationReport {
  std::string group_name;
  std::uint64_t group_order = 0;
  std::string formation;
  FormationFlags flags;
  std::string check;  // "theorem", "corollary", or "lemma:<name>"
  VerifyStatus status = VerifyStatus::kError;
  StatementVector statements;
  std::string detail;  // lemma violation or error text
  double time_ms = 0.0;
};

struct CheckResult {
  bool value = false;
  std::optional<SubgroupWitness> witness;  // a failing subgroup when false
};

struct Statement3Result {
  bool value = false;
  std::optional<DecompositionWitness> witness;  // the decomposition when true
};

/// (1) every primary cyclic subgroup is self-normalizing or F-subnormal.
CheckResult check_statement1(const Formation& f, const Group& g);
/// (2) every proper subgroup is self-normalizing or F-subnormal.
CheckResult check_statement2(const Formation& f, const Group& g);
/// (3) G = G' x| <x> with <x> a cyclic Sylow p-subgroup and a Carter
/// subgroup, and G' <x^p> in F.
Statement3Result check_statement3(const Formation& f, const Group& g);

/// Corollary variants: (1)/(2) with "F-subnormal or F-abnormal", and (3)
/// additionally requiring <x> to be an F-projector and G' = the F-residual.
CheckResult check_corollary1(const Formation& f, const Group& g);
CheckResult check_corollary2(const Formation& f, const Group& g);
Statement3Result check_corollary3(const Formation& f, const Group& g);

/// Runs the flag/solubility/membership gates, then checks that the three
/// statements agree (the equivalence holds in the negative as well).
VerificationReport verify_theorem(const Formation& f, const Group& g,
                                  const std::string& name = "");
VerificationReport verify_corollary(const Formation& f, const Group& g,
                                    const std::string& name = "");

/// Soluble G lies in F iff every primary cyclic subgroup is F-subnormal.
/// nullopt when the gates (solubility; subgroup-closed, saturated,
/// contains-nilpotent flags) do not apply.
std::optional<bool> verify_lemma_in_f(const Formation& f, const Group& g);

struct LemmaOutcome {
  std::string lemma;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

/// Property suites for the supporting lemmas, each quantified over the
/// subgroup lattice of g (flag-gated per lemma):
///   subnormal_transitivity        K F-sn H, H F-sn G => K F-sn G
///   subnormal_quotient_lift       K/N F-sn G/N => K F-sn G
///   subnormal_quotient_image      H F-sn G => HN/N F-sn G/N
///   residual_below_subnormal      G^F <= H => H F-sn G
///   subgroup_of_f_subnormal       K <= H F-sn G, H in F => K F-sn G
///   abnormal_intermediate         A F-abn G, A<=B<=G => A F-abn B, A=N_G(A),
///                                 B F-abn G, B=N_G(B)
///   projector_characterization    H F-projector <=> H in F and F-abnormal
///   minimal_non_f_structure       minimal non-F soluble => prime order
///                                 outside pi(F) or Schmidt
///   membership_by_primary_cyclic  the verify_lemma_in_f biconditional
std::vector<LemmaOutcome> verify_lemmas(const Formation& f, const Group& g);

struct CorpusEntry {
  std::string name;
  Group group;
};

enum class SweepMode { kTheorem, kCorollary, kLemmas, kAll };

struct SweepOptions {
  SweepMode mode = SweepMode::kTheorem;
  unsigned jobs = 1;
  std::uint64_t order_max = 0;  // 0: no filter
};

struct CorpusSweep {
  std::vector<VerificationReport> reports;  // deterministic corpus order
  std::uint64_t verified = 0, counterexamples = 0, skipped_in_f = 0, skipped_insoluble = 0,
                skipped_flags = 0, errors = 0;
  int exit_code() const { return counterexamples > 0 ? 1 : (errors > 0 ? 2 : 0); }
};

CorpusSweep run_corpus(const std::vector<CorpusEntry>& corpus, const Formation& f,
                       const SweepOptions& options);

}  // namespace permforms

#endif  // PERMFORMS_VERIFY_HPP_
