#ifndef PERMFORMS_CLASSIFY_HPP_
#define PERMFORMS_CLASSIFY_HPP_

#include <optional>
#include <vector>

#include "permforms/formation.hpp"
#include "permforms/group.hpp"
#include "permforms/lattice.hpp"

namespace permforms {

/// True iff N_G(H) = H.
bool is_self_normalizing(const Group& g, const Subgroup& h);

struct FSubnormality {
  bool value = false;
  std::optional<ChainWitness> witness;  // present when value is true
};

/// H is F-subnormal in G iff H = G or some maximal subgroup M of G contains
/// both H and the F-residual of G, with H F-subnormal in M. The witness is a
/// maximal chain whose steps all satisfy the residual condition.
FSubnormality is_f_subnormal(const Formation& f, const Group& g, const Subgroup& h);

/// H is F-abnormal in G iff L/core_L(K) lies outside F for every pair
/// K maximal in L with H <= K and L <= G.
bool is_f_abnormal(const Formation& f, const Group& g, const Subgroup& h);

/// Class representatives of the nilpotent self-normalizing subgroups. For
/// soluble groups this is exactly one class; an insoluble group may have
/// none.
std::vector<Subgroup> carter_subgroups(const Group& g);

/// H is an F-projector iff its image in every quotient G/N is F-maximal
/// there.
bool is_f_projector(const Formation& f, const Group& g, const Subgroup& h);

/// Minimal non-nilpotent: G is not nilpotent but every maximal subgroup is.
bool is_schmidt_group(const Group& g);

/// G outside F with every maximal subgroup in F. Requires f subgroup-closed
/// (so the proper-subgroup condition reduces to maximal subgroups).
bool is_minimal_non_f(const Formation& f, const Group& g);

/// Per-class classification table (one row per conjugacy class).
struct SubgroupClassification {
  Subgroup subgroup;
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  bool self_normalizing = false;
  bool f_subnormal = false;
  std::optional<ChainWitness> chain;
  bool f_abnormal = false;
};

std::vector<SubgroupClassification> classify_subgroups(const Formation& f, const Group& g);

}  // namespace permforms

#endif  // PERMFORMS_CLASSIFY_HPP_
