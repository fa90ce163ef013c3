#ifndef PERMFORMS_GROUP_HPP_
#define PERMFORMS_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "permforms/config.hpp"
#include "permforms/perm.hpp"

namespace permforms {

namespace detail {
class GroupImpl;
}

/// A finite permutation group with exact order and polynomial membership
/// tests (base and strong generating set).
///
/// Groups are immutable after construction; all queries are safe to call
/// concurrently.
class Group {
 public:
  Group() = default;

  /// Builds the membership structure and order. All generators must have the
  /// stated degree; the degree must not exceed config.degree_cap.
  static Group from_generators(unsigned degree, std::vector<Permutation> generators,
                               const EngineConfig& config = EngineConfig::defaults());

  static Group trivial(unsigned degree, const EngineConfig& config = EngineConfig::defaults());

  bool valid() const { return impl_ != nullptr; }
  unsigned degree() const;
  std::uint64_t order() const;
  const std::vector<Permutation>& generators() const;
  const EngineConfig& config() const;
  Permutation identity() const;

  bool is_trivial() const { return order() == 1; }
  bool contains(const Permutation& g) const;

  /// True iff both groups have the same degree and the same element set
  /// (mutual membership of generators).
  bool same_group_as(const Group& other) const;

  /// All elements, by breadth-first closure over the generators.
  /// Throws ResourceError if the order exceeds `cap` (default: config dense cap).
  std::vector<Permutation> elements(std::uint64_t cap = 0) const;

  /// Canonical representative of the right coset (this)*g; see quotient().
  Permutation coset_representative(const Permutation& g) const;

  const detail::GroupImpl* impl() const { return impl_.get(); }

 private:
  friend Group make_group_unchecked(unsigned, std::vector<Permutation>, const EngineConfig&);
  std::shared_ptr<const detail::GroupImpl> impl_;
};

/// Internal factory that skips the degree cap (quotients, regular
/// representations and combinator-built groups may exceed it).
Group make_group_unchecked(unsigned degree, std::vector<Permutation> generators,
                           const EngineConfig& config);

/// A subgroup handle bound to a parent group.
///
/// Carries its own membership structure; `group()` exposes the subgroup as a
/// standalone Group of the same degree. Equality of subgroups is by element
/// set, not by generating set.
class Subgroup {
 public:
  Subgroup() = default;

  /// Validates that every generator lies in `parent`.
  Subgroup(Group parent, std::vector<Permutation> generators);

  bool valid() const { return group_.valid(); }
  const Group& parent() const { return parent_; }
  const Group& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }
  unsigned degree() const { return group_.degree(); }
  const std::vector<Permutation>& generators() const { return group_.generators(); }
  bool contains(const Permutation& g) const { return group_.contains(g); }

  bool contains_subgroup(const Subgroup& other) const;
  bool same_subgroup_as(const Subgroup& other) const;
  bool is_whole_group() const { return order() == parent_.order(); }

  static Subgroup whole(const Group& g) { return Subgroup(g, g.generators()); }
  static Subgroup trivial_in(const Group& g) { return Subgroup(g, {}); }

 private:
  Group parent_;
  Group group_;
};

}  // namespace permforms

#endif  // PERMFORMS_GROUP_HPP_
