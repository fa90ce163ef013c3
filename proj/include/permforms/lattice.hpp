#ifndef PERMFORMS_LATTICE_HPP_
#define PERMFORMS_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "permforms/group.hpp"

namespace permforms {

struct ConjugacyClassOfSubgroups {
  Subgroup representative;
  std::uint64_t class_size = 0;
  std::uint64_t order = 0;
};

/// An explicit maximal chain H = H0 <. H1 <. ... <. Hn = G.
struct ChainWitness {
  std::vector<Subgroup> links;
};

/// The subgroup lattice of a group, reduced to conjugacy classes.
///
/// Classes are ordered deterministically: ascending order, then by the
/// canonical (lexicographically least) element set of the class.
class LatticeIndex {
 public:
  const std::vector<ConjugacyClassOfSubgroups>& classes() const { return classes_; }
  std::size_t class_count() const { return classes_.size(); }
  std::uint64_t total_subgroup_count() const { return total_; }

  /// True iff the representative of c1 is contained in some conjugate of the
  /// representative of c2.
  bool class_contained_in(std::size_t c1, std::size_t c2) const;
  /// Containment with no class strictly between (the covering relation of
  /// the class poset).
  bool class_maximal_in(std::size_t c1, std::size_t c2) const;

 private:
  friend LatticeIndex subgroup_lattice(const Group& g);
  std::vector<ConjugacyClassOfSubgroups> classes_;
  std::vector<std::vector<bool>> contained_;
  std::uint64_t total_ = 0;
};

/// Enumerates all subgroups up to conjugacy. Throws ResourceError beyond the
/// configured lattice cap.
LatticeIndex subgroup_lattice(const Group& g);

/// Class representatives of the maximal subgroups of g.
std::vector<Subgroup> maximal_subgroups(const Group& g);

/// Every actual maximal subgroup M of g with h <= M (not class reps).
std::vector<Subgroup> maximal_subgroups_containing(const Group& g, const Subgroup& h);

/// All normal subgroups, including the trivial subgroup and g itself,
/// ascending by order.
std::vector<Subgroup> normal_subgroups(const Group& g);

/// A Sylow p-subgroup. Throws InputError if p does not divide |g|.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);

/// A subgroup of order |g| / p-part, when one exists.
std::optional<Subgroup> hall_pprime_subgroup(const Group& g, std::uint64_t p);

/// Class representatives of the nontrivial cyclic subgroups of prime-power
/// order.
std::vector<Subgroup> primary_cyclic_subgroups(const Group& g);

/// Intersection of all maximal subgroups.
Subgroup frattini_subgroup(const Group& g);

/// Every maximal chain from h to g through actual subgroups. Throws
/// ResourceError when the count exceeds `cap` (0: the configured default).
std::vector<ChainWitness> all_maximal_chains(const Group& g, const Subgroup& h,
                                             std::uint64_t cap = 0);

}  // namespace permforms

#endif  // PERMFORMS_LATTICE_HPP_
