#ifndef PERMFORMS_STORE_HPP_
#define PERMFORMS_STORE_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dense.hpp"

namespace permforms::detail {

using SubId = std::uint32_t;

/// Every subgroup of a dense group, with conjugacy classes and the cover
/// relation of the subgroup poset.
///
/// Subgroups are indexed in a deterministic order (ascending order, then
/// lexicographic on the element bitset), so downstream reports are stable
/// regardless of construction schedule.
class SubgroupStore {
 public:
  enum class Method { kAuto, kExhaustive, kCyclicExtension };

  SubgroupStore(const DenseGroup& dense, Method method = Method::kAuto);

  const DenseGroup& dense() const { return dense_; }
  std::size_t size() const { return sets_.size(); }
  const ElementSet& set(SubId id) const { return sets_[id]; }
  std::uint64_t order(SubId id) const { return orders_[id]; }
  SubId id_of(const ElementSet& s) const;
  bool has_set(const ElementSet& s) const { return ids_.count(s) != 0; }

  SubId trivial_id() const { return trivial_id_; }
  SubId whole_id() const { return whole_id_; }

  std::uint32_t class_of(SubId id) const { return class_of_[id]; }
  std::size_t class_count() const { return classes_.size(); }
  /// Members of a class, ascending by bitset; front() is the canonical rep.
  const std::vector<SubId>& class_members(std::uint32_t c) const { return classes_[c]; }
  SubId class_rep(std::uint32_t c) const { return classes_[c].front(); }

  bool strictly_contains(SubId big, SubId small) const;
  /// Subgroups K with K maximal in `id`.
  const std::vector<SubId>& maximals_in(SubId id) const { return maximals_in_[id]; }
  /// Subgroups L with `id` maximal in L.
  const std::vector<SubId>& covers_of(SubId id) const { return covers_of_[id]; }
  /// All strict supergroups / subgroups, as bitsets over subgroup ids.
  const ElementSet& ups(SubId id) const { return ups_[id]; }
  const ElementSet& downs(SubId id) const { return downs_[id]; }

  const std::vector<EIdx>& genset(SubId id) const;

  /// Raw enumeration entry points; both return every subgroup (not just
  /// class representatives). The exhaustive route closes the set of cyclic
  /// subgroups under joins; cyclic extension builds prime-index towers
  /// through normalizers and materializes each conjugacy class orbit.
  static std::vector<ElementSet> enumerate_exhaustive(const DenseGroup& dense);
  static std::vector<ElementSet> enumerate_cyclic_extension(const DenseGroup& dense);

 private:
  void index_subgroups(std::vector<ElementSet> sets);
  void build_classes();
  void build_poset();

  const DenseGroup& dense_;
  std::vector<ElementSet> sets_;
  std::vector<std::uint64_t> orders_;
  std::unordered_map<ElementSet, SubId, ElementSetHash> ids_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<SubId>> classes_;
  std::vector<ElementSet> ups_, downs_;  // bitsets over SubId universe
  std::vector<std::vector<SubId>> maximals_in_, covers_of_;
  mutable std::vector<std::vector<EIdx>> gensets_;
  SubId trivial_id_ = 0, whole_id_ = 0;
};

}  // namespace permforms::detail

#endif  // PERMFORMS_STORE_HPP_
