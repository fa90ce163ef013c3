#include "stabchain.hpp"

#include <algorithm>
#include <random>

#include "permforms/errors.hpp"

namespace permforms::detail {

namespace {

Point first_moved(const Permutation& p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p[x] != x) return x;
  return p.degree();
}

}  // namespace

StabChain::StabChain(unsigned degree, const std::vector<Permutation>& generators,
                     const EngineConfig& config)
    : degree_(degree), order_(1) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
    if (!g.is_identity()) add_strong_generator(g);
  }

  if (!levels_.empty()) {
    // Randomized sifting phase: random subproducts of the generators are
    // sifted and their residues inserted as strong generator candidates.
    std::mt19937 rng(config.seed);
    std::vector<Permutation> pool = generators;
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const Permutation& p) { return p.is_identity(); }),
               pool.end());
    if (!pool.empty()) {
      unsigned rounds = 12 + 4 * static_cast<unsigned>(pool.size());
      Permutation acc = Permutation::identity(degree);
      for (unsigned r = 0; r < rounds; ++r) {
        acc = acc * pool[rng() % pool.size()];
        if (rng() & 1) acc = acc * pool[rng() % pool.size()];
        auto sifted = strip(acc, 0);
        if (!sifted.first.is_identity()) add_strong_generator(sifted.first);
      }
    }
    deterministic_pass();
  }

  order_ = 1;
  unsigned __int128 prod = 1;
  for (const auto& level : levels_) {
    prod *= level.orbit.size();
    if (prod > config.order_cap)
      throw ResourceError("group order exceeds configured cap " +
                          std::to_string(config.order_cap));
  }
  order_ = static_cast<std::uint64_t>(prod);
}

void StabChain::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit_index.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.orbit_index[lv.base_point] = 0;
  lv.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point x = lv.orbit[k];
    for (const auto& s : lv.gens) {
      Point y = s[x];
      if (lv.orbit_index[y] < 0) {
        lv.orbit_index[y] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(lv.transversal[k] * s);
      }
    }
  }
}

void StabChain::distribute_generator(const Permutation& g) {
  // g participates in every level whose base prefix it fixes.
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    levels_[i].gens.push_back(g);
    if (g[levels_[i].base_point] != levels_[i].base_point) break;
  }
}

void StabChain::add_strong_generator(const Permutation& g) {
  // Ensure some base point is moved by g.
  std::size_t fixed_prefix = 0;
  while (fixed_prefix < base_.size() && g[base_[fixed_prefix]] == base_[fixed_prefix])
    ++fixed_prefix;
  if (fixed_prefix == base_.size()) {
    Point b = first_moved(g);
    base_.push_back(b);
    levels_.push_back(Level{});
    levels_.back().base_point = b;
  }
  distribute_generator(g);
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point image = g[lv.base_point];
    int k = lv.orbit_index[image];
    if (k < 0) return {std::move(g), i};
    g = g * lv.transversal[static_cast<std::size_t>(k)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabChain::deterministic_pass() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size() - 1;
  while (true) {
    rebuild_level(i);
    const Level& lv = levels_[i];
    bool restarted = false;
    for (std::size_t k = 0; k < lv.orbit.size() && !restarted; ++k) {
      for (const auto& s : lv.gens) {
        Point image = s[lv.orbit[k]];
        const Permutation& into = lv.transversal[static_cast<std::size_t>(lv.orbit_index[image])];
        Permutation schreier = lv.transversal[k] * s * into.inverse();
        if (schreier.is_identity()) continue;
        auto [residue, level] = strip(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        add_strong_generator(residue);
        i = std::min(level, levels_.size() - 1);
        restarted = true;
        break;
      }
    }
    if (restarted) continue;
    if (i == 0) break;
    --i;
  }
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw InputError("degree mismatch in membership test");
  if (levels_.empty()) return p.is_identity();
  auto [residue, level] = strip(p, 0);
  return residue.is_identity();
}

Permutation StabChain::canonical_coset_rep(const Permutation& g) const {
  // Level by level, left-multiply by the transversal element that minimizes
  // the image of the current base point. The result is the unique coset
  // member minimizing the base-image tuple lexicographically, so it is a
  // canonical representative of (this group)*g.
  Permutation rep = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point best_image = rep[lv.base_point];
    std::size_t best_k = 0;
    bool found = false;
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      Point image = rep[lv.orbit[k]];
      if (!found || image < best_image) {
        best_image = image;
        best_k = k;
        found = true;
      }
    }
    rep = lv.transversal[best_k] * rep;
  }
  return rep;
}

}  // namespace permforms::detail
