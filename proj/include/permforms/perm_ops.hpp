#ifndef PERMFORMS_PERM_OPS_HPP_
#define PERMFORMS_PERM_OPS_HPP_

#include <memory>
#include <vector>

#include "permforms/group.hpp"

namespace permforms {

/// N_G(H) = {g in G : H^g = H}.
Subgroup normalizer(const Group& g, const Subgroup& h);

/// Largest normal subgroup of G contained in H; the intersection of all
/// G-conjugates of H.
Subgroup core(const Group& g, const Subgroup& h);

/// H^g = g^-1 H g. Requires g in the parent of H.
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);

/// G' = normal closure of the commutators of generator pairs.
Subgroup derived_subgroup(const Group& g);

/// G >= G' >= G'' >= ...; stops after the first repeated term, which is
/// included only when nonzero terms stabilize above the trivial group (so a
/// soluble series ends in the trivial subgroup without repetition).
std::vector<Subgroup> derived_series(const Group& g);

/// Image of the right-coset action of G on N, as a permutation group of
/// degree [G:N] with a freshly built membership structure. N must be normal.
Group quotient(const Group& g, const Subgroup& n);

/// Quotient plus the natural homomorphism, for mapping elements and
/// subgroups onto the quotient.
class QuotientMap {
 public:
  QuotientMap() = default;
  const Group& quotient() const;
  Permutation image_of(const Permutation& g) const;
  /// Subgroup of the quotient generated by the images of h's generators.
  Subgroup image_of(const Subgroup& h) const;

 private:
  friend QuotientMap quotient_map(const Group&, const Subgroup&);
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

QuotientMap quotient_map(const Group& g, const Subgroup& n);

/// F(G): the largest normal nilpotent subgroup.
Subgroup fitting_subgroup(const Group& g);

/// True iff the derived series of g terminates at the trivial group.
bool is_soluble(const Group& g);

/// True iff the lower central series of g terminates at the trivial group.
bool is_nilpotent_group(const Group& g);

}  // namespace permforms

#endif  // PERMFORMS_PERM_OPS_HPP_
