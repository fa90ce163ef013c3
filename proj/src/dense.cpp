#include "dense.hpp"

#include <algorithm>

#include "permforms/errors.hpp"

namespace permforms::detail {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

std::vector<EIdx> ElementSet::members() const {
  std::vector<EIdx> out;
  for_each([&](EIdx i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

DenseGroup::DenseGroup(const Group& g) : group_(g) {
  const auto& cfg = g.config();
  if (g.order() > cfg.dense_cap)
    throw ResourceError("dense model refused: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(cfg.dense_cap));
  const std::size_t n = static_cast<std::size_t>(g.order());
  elems_.reserve(n);
  elems_.push_back(g.identity());
  index_.reserve(n * 2);
  index_.emplace(elems_.front(), 0);
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    for (const auto& s : g.generators()) {
      Permutation next = elems_[k] * s;
      if (index_.emplace(next, static_cast<EIdx>(elems_.size())).second)
        elems_.push_back(std::move(next));
    }
  }
  if (elems_.size() != n)
    throw EngineError("closure count disagrees with membership-structure order");

  inv_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv_[i] = index_.at(elems_[i].inverse());
    orders_[i] = elems_[i].order();
  }
  for (const auto& s : g.generators()) gen_idx_.push_back(index_.at(s));

  if (n <= g.config().table_cap) {
    // Left-multiplication rows composed incrementally: row(e*s) = row(e) ∘ row(s).
    has_table_ = true;
    mult_.assign(n * n, 0);
    std::vector<std::vector<EIdx>> gen_rows(gen_idx_.size(), std::vector<EIdx>(n));
    for (std::size_t k = 0; k < gen_idx_.size(); ++k)
      for (std::size_t x = 0; x < n; ++x)
        gen_rows[k][x] = index_.at(elems_[gen_idx_[k]] * elems_[x]);
    // BFS over elements again, remembering (parent, generator) factorizations.
    std::vector<bool> done(n, false);
    for (std::size_t x = 0; x < n; ++x) mult_[x] = static_cast<EIdx>(x);  // identity row
    done[0] = true;
    std::vector<EIdx> frontier{0};
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      EIdx e = frontier[f];
      for (std::size_t k = 0; k < gen_idx_.size(); ++k) {
        EIdx target = mult_[static_cast<std::size_t>(e) * n + gen_idx_[k]];
        if (done[target]) continue;
        // row(target) = row(e) ∘ gen_row(k): target = e*s, so target*x = e*(s*x).
        const EIdx* row_e = &mult_[static_cast<std::size_t>(e) * n];
        EIdx* row_t = &mult_[static_cast<std::size_t>(target) * n];
        for (std::size_t x = 0; x < n; ++x) row_t[x] = row_e[gen_rows[k][x]];
        done[target] = true;
        frontier.push_back(target);
      }
    }
  }

  std::vector<std::uint64_t> hashes;
  hashes.reserve(n);
  for (const auto& e : elems_) hashes.push_back(e.hash());
  std::sort(hashes.begin(), hashes.end());
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : hashes) {
    h ^= v;
    h *= 1099511628211ull;
  }
  universe_hash_ = h;
}

EIdx DenseGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError("permutation is not a member of the group");
  return it->second;
}

EIdx DenseGroup::mul(EIdx a, EIdx b) const {
  if (has_table_) return mult_[static_cast<std::size_t>(a) * elems_.size() + b];
  return index_.at(elems_[a] * elems_[b]);
}

EIdx DenseGroup::pow(EIdx a, std::uint64_t e) const {
  EIdx result = 0;
  EIdx base = a;
  while (e > 0) {
    if (e & 1ull) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const std::vector<EIdx>& DenseGroup::conj_map(std::size_t k) const {
  if (conj_maps_.empty()) conj_maps_.resize(gen_idx_.size());
  auto& m = conj_maps_[k];
  if (m.empty()) {
    m.resize(size());
    EIdx g = gen_idx_[k], gi = inv_[g];
    for (EIdx x = 0; x < size(); ++x) m[x] = mul(mul(gi, x), g);
  }
  return m;
}

const std::vector<EIdx>& DenseGroup::element_class_reps() const {
  if (!class_reps_.empty() || size() == 0) return class_reps_;
  std::vector<bool> seen(size(), false);
  for (EIdx x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    class_reps_.push_back(x);
    std::vector<EIdx> orbit{x};
    seen[x] = true;
    for (std::size_t f = 0; f < orbit.size(); ++f) {
      for (std::size_t k = 0; k < gen_idx_.size(); ++k) {
        EIdx y = conj_map(k)[orbit[f]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
  }
  return class_reps_;
}

ElementSet DenseGroup::trivial_subgroup() const {
  ElementSet s(size());
  s.set(0);
  return s;
}

ElementSet DenseGroup::whole_set() const {
  ElementSet s(size());
  for (EIdx i = 0; i < size(); ++i) s.set(i);
  return s;
}

ElementSet DenseGroup::closure(const std::vector<EIdx>& seeds) const {
  ElementSet s(size());
  s.set(0);
  std::vector<EIdx> list{0};
  for (EIdx x : seeds)
    if (!s.test(x)) {
      s.set(x);
      list.push_back(x);
    }
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (EIdx g : seeds) {
      EIdx y = mul(list[k], g);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  }
  return s;
}

ElementSet DenseGroup::closure_extend(const ElementSet& base, EIdx extra) const {
  std::vector<EIdx> gens = small_genset(base);
  gens.push_back(extra);
  ElementSet s = base;
  std::vector<EIdx> list = base.members();
  if (!s.test(extra)) {
    s.set(extra);
    list.push_back(extra);
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (EIdx g : gens) {
      EIdx y = mul(list[k], g);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  }
  return s;
}

ElementSet DenseGroup::closure_join(const ElementSet& a, const ElementSet& b) const {
  std::vector<EIdx> gens = small_genset(a);
  for (EIdx g : small_genset(b)) gens.push_back(g);
  return closure(gens);
}

ElementSet DenseGroup::conj_set(const ElementSet& s, EIdx g) const {
  ElementSet out(size());
  EIdx gi = inv_[g];
  s.for_each([&](EIdx x) { out.set(mul(mul(gi, x), g)); });
  return out;
}

std::vector<EIdx> DenseGroup::small_genset(const ElementSet& s) const {
  std::vector<EIdx> gens;
  ElementSet have(size());
  have.set(0);
  std::size_t want = s.count();
  if (want <= 1) return gens;
  std::size_t have_count = 1;
  std::vector<EIdx> list{0};
  for (EIdx cand = 1; cand < size() && have_count < want; ++cand) {
    if (!s.test(cand) || have.test(cand)) continue;
    gens.push_back(cand);
    // Grow the closure with the new generator.
    have.set(cand);
    list.push_back(cand);
    for (std::size_t k = 0; k < list.size(); ++k) {
      for (EIdx g : gens) {
        EIdx y = mul(list[k], g);
        if (!have.test(y)) {
          have.set(y);
          list.push_back(y);
        }
      }
    }
    have_count = list.size();
  }
  return gens;
}

ElementSet DenseGroup::normalizer_in(const ElementSet& s, const ElementSet& ambient) const {
  std::vector<EIdx> gens = small_genset(s);
  ElementSet out(size());
  ambient.for_each([&](EIdx g) {
    EIdx gi = inv_[g];
    for (EIdx h : gens) {
      if (!s.test(mul(mul(gi, h), g))) return;
    }
    out.set(g);
  });
  return out;
}

std::vector<std::uint64_t> DenseGroup::order_census(const ElementSet& s) const {
  std::vector<std::uint64_t> census;
  s.for_each([&](EIdx i) { census.push_back(orders_[i]); });
  std::sort(census.begin(), census.end());
  return census;
}

}  // namespace permforms::detail
