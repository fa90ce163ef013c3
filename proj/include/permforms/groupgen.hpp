#ifndef PERMFORMS_GROUPGEN_HPP_
#define PERMFORMS_GROUPGEN_HPP_

#include <map>
#include <string>
#include <vector>

#include "permforms/group.hpp"

namespace permforms {

/// Standard groups in natural faithful permutation representations.
Group cyclic_group(unsigned m, const EngineConfig& config = EngineConfig::defaults());
Group elementary_abelian_group(unsigned p, unsigned n,
                               const EngineConfig& config = EngineConfig::defaults());
/// Dihedral of order 2n (n >= 3).
Group dihedral_group(unsigned n, const EngineConfig& config = EngineConfig::defaults());
Group symmetric_group(unsigned n, const EngineConfig& config = EngineConfig::defaults());
Group alternating_group(unsigned n, const EngineConfig& config = EngineConfig::defaults());
Group quaternion_group(const EngineConfig& config = EngineConfig::defaults());
/// Dicyclic of order 4n (n >= 2); dicyclic_group(2) is Q8, powers of two give
/// the generalized quaternion groups.
Group dicyclic_group(unsigned n, const EngineConfig& config = EngineConfig::defaults());

enum class StandardKind {
  kCyclic,
  kElementaryAbelian,
  kDihedral,
  kSymmetric,
  kAlternating,
  kQuaternion8,
  kDicyclic,
};

/// Dispatcher over the standard kinds; a and b are the numeric parameters
/// (p and n for elementary abelian, otherwise just a).
Group make_standard(StandardKind kind, unsigned a = 0, unsigned b = 0,
                    const EngineConfig& config = EngineConfig::defaults());

/// Acts on the disjoint union of the two point sets; |A x B| = |A| |B|.
Group direct_product(const Group& a, const Group& b);
Group direct_product(const std::vector<Group>& factors);

/// Automorphism description for semidirect products: images[i][j] is the
/// image of the j-th generator of the normal factor under conjugation by the
/// i-th generator of the complement.
struct ActionSpec {
  std::vector<std::vector<Permutation>> images;
};

/// Every complement generator inverts every normal-factor generator
/// (an automorphism whenever the normal factor is abelian).
ActionSpec inverting_action(const Group& n, const Group& h);

/// N x| H realized on |N| + degree(H) points: H permutes the elements of N
/// by the described automorphisms. The action is validated (bijective,
/// homomorphic on a multiplication-table sample, consistent with the
/// relations of H); violations raise InputError.
Group semidirect_product(const Group& n, const Group& h, const ActionSpec& action);

/// Brute-force isomorphism test (invariant screening plus generator-image
/// backtracking with full verification). Intended for desk-scale orders.
bool isomorphic(const Group& a, const Group& b);

/// The group (S3 x S3 x A4) x| Z2 of order 864 (GAP SmallGroup ID
/// [864,4670]), reconstructed fact-first: the Z2 action is chosen from the
/// finite candidate set (swap of the S3 factors combined with an
/// order-dividing-2 automorphism of A4) and each candidate is screened
/// against the full fact list; construction fails loudly if none passes.
struct Example864 {
  Group group;
  std::string chosen;                     // pinned candidate (lexicographically first passing)
  std::vector<std::string> passing;       // all candidates that pass every fact
  std::vector<std::string> fact_log;      // per-candidate outcomes
};
Example864 build_example_864();

struct NamedGroup {
  std::string name;
  Group group;
  std::vector<std::string> tags;
};

/// One representative per isomorphism type for every group of order <= 24,
/// built from the combinators above. Coverage is asserted against the known
/// per-order tallies with pairwise brute-force isomorphism checks.
std::vector<NamedGroup> small_group_corpus(
    const EngineConfig& config = EngineConfig::defaults());

/// The documented generated family of soluble groups of order 25..200:
/// cyclic groups (<= 64 plus smooth composites), dihedral and dicyclic
/// series, metacyclic Frobenius-type products, elementary-abelian-by-cyclic
/// groups, a few 2-groups, and direct products of small pieces.
std::vector<NamedGroup> family_corpus(
    const EngineConfig& config = EngineConfig::defaults());

/// small_group_corpus() followed by family_corpus().
std::vector<NamedGroup> full_corpus(
    const EngineConfig& config = EngineConfig::defaults());

/// Known number of isomorphism types per order, 1..24.
const std::map<unsigned, unsigned>& group_type_counts_le_24();

}  // namespace permforms

#endif  // PERMFORMS_GROUPGEN_HPP_
