#ifndef PERMFORMS_CONTEXT_HPP_
#define PERMFORMS_CONTEXT_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dense.hpp"
#include "permforms/formation.hpp"
#include "permforms/group.hpp"
#include "store.hpp"

namespace permforms::detail {

/// Per-group analysis state: the dense model, the subgroup store, and memo
/// tables for structural series, normal subgroups, residuals and the
/// classification predicates.
///
/// Contexts are shared through a process-wide cache keyed by the group's
/// element set (order, degree and a hash of the sorted element list), so
/// verification sweeps that revisit a group reuse all of its lattice work.
/// Public API wrappers must hold mutex() around any use; the internals
/// assume the lock is held.
class GroupContext {
 public:
  /// Fetch or build the context for g. Requires |g| within the dense cap.
  static std::shared_ptr<GroupContext> get(const Group& g);

  const Group& group() const { return group_; }
  const DenseGroup& dense() const { return *dense_; }
  /// Lazily built; throws ResourceError when |g| exceeds the lattice cap.
  SubgroupStore& store();
  bool store_built() const { return store_ != nullptr; }

  std::recursive_mutex& mutex() { return mutex_; }

  // --- conversions ---------------------------------------------------------
  ElementSet bits_of_gens(const std::vector<Permutation>& gens);
  ElementSet bits_of(const Subgroup& h) { return bits_of_gens(h.generators()); }
  Subgroup to_subgroup(const ElementSet& s);
  std::vector<Permutation> perms_of_genset(const ElementSet& s);

  // --- structural series (memoized per element set) ------------------------
  ElementSet normal_closure_in(const ElementSet& ambient, std::vector<EIdx> seeds);
  ElementSet derived_of(const ElementSet& a);
  /// a = D0 > D1 > ... ; last entry is the stable term.
  const std::vector<ElementSet>& derived_series_of(const ElementSet& a);
  /// a = G1 >= G2 >= ...; last entry is the stable term of [Gi, a].
  const std::vector<ElementSet>& lower_central_of(const ElementSet& a);
  bool abelian(const ElementSet& a);
  bool nilpotent(const ElementSet& a);
  bool soluble(const ElementSet& a);
  bool cyclic(const ElementSet& a);

  // --- normal structure -----------------------------------------------------
  /// All normal subgroups of `ambient`, ascending by (order, bitset).
  const std::vector<ElementSet>& normals_of(const ElementSet& ambient);
  /// Largest normal subgroup of `ambient` contained in k.
  ElementSet core_in(const ElementSet& ambient, const ElementSet& k);
  const ElementSet& normalizer_of(const ElementSet& h);  // within the whole group
  bool self_normalizing(const ElementSet& h);
  ElementSet fitting_of(const ElementSet& ambient);
  ElementSet sylow_of(std::uint64_t p);  // within the whole group

  // --- formation evaluation -------------------------------------------------
  /// Membership of a/n in f, for n normal in a, without building quotient
  /// permutation groups (custom formations fall back to a real quotient).
  bool quotient_in(const Formation& f, const ElementSet& a, const ElementSet& n);
  bool set_in(const Formation& f, const ElementSet& a);
  const ElementSet& residual_of(const Formation& f, const ElementSet& a);
  /// Smallest normal subgroup of a containing n with quotient in f.
  ElementSet residual_above(const Formation& f, const ElementSet& a, const ElementSet& n);

  // --- classification over the store -----------------------------------------
  bool f_subnormal(const Formation& f, SubId ambient, SubId h);
  std::vector<SubId> f_subnormal_chain(const Formation& f, SubId ambient, SubId h);
  bool f_abnormal(const Formation& f, SubId ambient, SubId h);
  bool f_projector(const Formation& f, SubId h);  // ambient = whole group

  std::vector<std::uint32_t> primary_cyclic_class_ids();
  std::vector<std::uint32_t> carter_class_ids();

 private:
  explicit GroupContext(Group g, std::unique_ptr<DenseGroup> dense);

  int formation_key(const Formation& f);
  std::uint64_t pack_key(int fk, SubId ambient, SubId h) const {
    return (static_cast<std::uint64_t>(fk) << 48) |
           (static_cast<std::uint64_t>(ambient) << 24) | h;
  }

  Group group_;
  std::unique_ptr<DenseGroup> dense_;
  std::unique_ptr<SubgroupStore> store_;
  std::recursive_mutex mutex_;

  std::unordered_map<std::string, int> formation_keys_;
  std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash> derived_series_memo_;
  std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash> lower_central_memo_;
  std::unordered_map<ElementSet, std::vector<ElementSet>, ElementSetHash> normals_memo_;
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> normalizer_memo_;
  std::vector<std::unordered_map<ElementSet, ElementSet, ElementSetHash>> residual_memo_;
  std::unordered_map<std::uint64_t, ElementSet> sylow_memo_;
  std::unordered_map<std::uint64_t, signed char> subnormal_memo_;
  std::unordered_map<std::uint64_t, SubId> subnormal_via_;
  std::unordered_map<std::uint64_t, signed char> abnormal_memo_;
  std::unordered_map<std::uint64_t, signed char> projector_memo_;
};

/// Convenience: context of h's parent plus h's bitset and store id.
struct SubgroupRef {
  std::shared_ptr<GroupContext> ctx;
  ElementSet bits;
  SubId id;
};

/// Lattice-backed entry points honor the requesting group's cap even when a
/// cached context already carries the store.
void require_lattice_cap(const Group& g);

}  // namespace permforms::detail

#endif  // PERMFORMS_CONTEXT_HPP_
