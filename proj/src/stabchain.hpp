#ifndef PERMFORMS_STABCHAIN_HPP_
#define PERMFORMS_STABCHAIN_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "permforms/config.hpp"
#include "permforms/perm.hpp"

namespace permforms::detail {

/// Base and strong generating set for a permutation group.
///
/// Built by randomized sifting (seeded from EngineConfig) followed by the
/// deterministic Schreier-Sims verification pass, so membership and order
/// are exact regardless of the random phase.
class StabChain {
 public:
  StabChain() : degree_(0), order_(1) {}
  StabChain(unsigned degree, const std::vector<Permutation>& generators,
            const EngineConfig& config);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool contains(const Permutation& p) const;

  const std::vector<Point>& base() const { return base_; }

  /// Canonical representative of the right coset (this group)*g: the coset
  /// member whose images of the base points are lexicographically least.
  /// Two permutations get the same representative iff they lie in the same
  /// right coset.
  Permutation canonical_coset_rep(const Permutation& g) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;          // strong generators fixing earlier base points
    std::vector<int> orbit_index;           // degree-sized; -1 if outside orbit
    std::vector<Point> orbit;               // BFS order
    std::vector<Permutation> transversal;   // transversal[i]: base_point -> orbit[i]
  };

  void rebuild_level(std::size_t i);
  void distribute_generator(const Permutation& g);
  // Returns (residue, level index it failed at); level == levels_.size() means
  // the residue fixes every base point.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_strong_generator(const Permutation& g);
  void deterministic_pass();

  unsigned degree_;
  std::uint64_t order_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace permforms::detail

#endif  // PERMFORMS_STABCHAIN_HPP_
