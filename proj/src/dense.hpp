#ifndef PERMFORMS_DENSE_HPP_
#define PERMFORMS_DENSE_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "permforms/group.hpp"
#include "permforms/perm.hpp"

namespace permforms::detail {

using EIdx = std::uint32_t;

/// Subset of a DenseGroup's elements, as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool test(EIdx i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(EIdx i) { words_[i >> 6] |= (1ull << (i & 63)); }
  void reset(EIdx i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  std::size_t count() const;
  bool empty() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const { return words_ == other.words_; }
  bool operator!=(const ElementSet& other) const { return words_ != other.words_; }
  /// Lexicographic order on the word vectors; a deterministic total order.
  bool operator<(const ElementSet& other) const { return words_ < other.words_; }

  std::vector<EIdx> members() const;
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        f(static_cast<EIdx>(w * 64 + bit));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Fully enumerated model of a group: element indexing, multiplication,
/// inversion, element orders and conjugacy classes, plus subgroup-closure
/// primitives over ElementSet.
///
/// Index 0 is the identity. The element ordering is the breadth-first
/// closure order over the group's generator list, so it is deterministic
/// for a fixed generator list.
class DenseGroup {
 public:
  explicit DenseGroup(const Group& g);

  const Group& group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  const Permutation& perm(EIdx i) const { return elems_[i]; }
  EIdx index_of(const Permutation& p) const;
  bool has(const Permutation& p) const { return index_.count(p) != 0; }

  EIdx mul(EIdx a, EIdx b) const;
  EIdx inv(EIdx a) const { return inv_[a]; }
  EIdx conj(EIdx x, EIdx g) const { return mul(mul(inv_[g], x), g); }
  EIdx pow(EIdx a, std::uint64_t e) const;
  std::uint64_t element_order(EIdx i) const { return orders_[i]; }

  const std::vector<EIdx>& generator_indices() const { return gen_idx_; }
  /// conj_map(k)[x] = index of gens[k]^-1 * x * gens[k].
  const std::vector<EIdx>& conj_map(std::size_t k) const;

  /// One representative per conjugacy class of elements.
  const std::vector<EIdx>& element_class_reps() const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet trivial_subgroup() const;
  ElementSet whole_set() const;

  ElementSet closure(const std::vector<EIdx>& seeds) const;
  /// <base ∪ {extra}>, assuming base is already a subgroup.
  ElementSet closure_extend(const ElementSet& base, EIdx extra) const;
  ElementSet closure_join(const ElementSet& a, const ElementSet& b) const;
  ElementSet conj_set(const ElementSet& s, EIdx g) const;

  /// Greedy generating set: repeatedly adjoin the least element outside the
  /// running closure. Deterministic; size is at most log2(|s|).
  std::vector<EIdx> small_genset(const ElementSet& s) const;

  /// {g in ambient : s^g = s}, computed from a generating set of s.
  ElementSet normalizer_in(const ElementSet& s, const ElementSet& ambient) const;

  /// Sorted multiset of element orders of s (an isomorphism invariant).
  std::vector<std::uint64_t> order_census(const ElementSet& s) const;

  /// Minimal faithful data for cache keys: order plus FNV hash of the sorted
  /// element hash list.
  std::uint64_t element_set_hash() const { return universe_hash_; }

 private:
  Group group_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, EIdx, PermHash> index_;
  std::vector<EIdx> inv_;
  std::vector<std::uint64_t> orders_;
  std::vector<EIdx> gen_idx_;
  std::vector<EIdx> mult_;  // row-major |G| x |G| when small enough
  bool has_table_ = false;
  mutable std::vector<std::vector<EIdx>> conj_maps_;
  mutable std::vector<EIdx> class_reps_;
  std::uint64_t universe_hash_ = 0;
};

}  // namespace permforms::detail

#endif  // PERMFORMS_DENSE_HPP_
