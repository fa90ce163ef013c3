#include "context.hpp"

#include <algorithm>
#include <map>

#include "permforms/errors.hpp"
#include "permforms/perm_ops.hpp"

namespace permforms::detail {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  return prime_divisors(n).size() == 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

struct CacheKey {
  unsigned degree;
  std::uint64_t order;
  std::uint64_t universe_hash;
  bool operator<(const CacheKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (order != o.order) return order < o.order;
    return universe_hash < o.universe_hash;
  }
};

std::mutex g_cache_mutex;
std::map<CacheKey, std::shared_ptr<GroupContext>>& cache_map() {
  static std::map<CacheKey, std::shared_ptr<GroupContext>> m;
  return m;
}
std::unordered_map<std::uint64_t, std::shared_ptr<GroupContext>>& gen_cache_map() {
  static std::unordered_map<std::uint64_t, std::shared_ptr<GroupContext>> m;
  return m;
}

std::uint64_t generator_key(const Group& g) {
  std::vector<std::uint64_t> hashes;
  for (const auto& p : g.generators()) hashes.push_back(p.hash());
  std::sort(hashes.begin(), hashes.end());
  std::uint64_t h = 1469598103934665603ull ^ g.degree();
  h ^= g.order() * 0x9e3779b97f4a7c15ull;
  for (auto v : hashes) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

bool context_matches(const GroupContext& ctx, const Group& g) {
  if (ctx.group().degree() != g.degree() || ctx.group().order() != g.order()) return false;
  for (const auto& gen : g.generators())
    if (!ctx.dense().has(gen)) return false;
  return true;
}

}  // namespace

GroupContext::GroupContext(Group g, std::unique_ptr<DenseGroup> dense)
    : group_(std::move(g)), dense_(std::move(dense)) {}

std::shared_ptr<GroupContext> GroupContext::get(const Group& g) {
  const std::uint64_t gk = generator_key(g);
  {
    std::lock_guard<std::mutex> guard(g_cache_mutex);
    auto it = gen_cache_map().find(gk);
    if (it != gen_cache_map().end() && context_matches(*it->second, g)) return it->second;
  }
  auto dense = std::make_unique<DenseGroup>(g);
  CacheKey key{g.degree(), g.order(), dense->element_set_hash()};
  std::lock_guard<std::mutex> guard(g_cache_mutex);
  auto& slot = cache_map()[key];
  if (slot) {
    if (!context_matches(*slot, g))
      throw EngineError("group fingerprint collision in context cache");
  } else {
    slot = std::shared_ptr<GroupContext>(new GroupContext(g, std::move(dense)));
  }
  gen_cache_map()[gk] = slot;
  return slot;
}

void require_lattice_cap(const Group& g) {
  if (g.order() > g.config().lattice_cap)
    throw ResourceError("subgroup lattice refused: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(g.config().lattice_cap));
}

SubgroupStore& GroupContext::store() {
  if (!store_) {
    const auto& cfg = group_.config();
    if (group_.order() > cfg.lattice_cap)
      throw ResourceError("subgroup lattice refused: order " + std::to_string(group_.order()) +
                          " exceeds cap " + std::to_string(cfg.lattice_cap));
    store_ = std::make_unique<SubgroupStore>(*dense_);
  }
  return *store_;
}

ElementSet GroupContext::bits_of_gens(const std::vector<Permutation>& gens) {
  std::vector<EIdx> seeds;
  seeds.reserve(gens.size());
  for (const auto& g : gens) {
    if (!dense_->has(g))
      throw InputError("subgroup generator is not a member of the ambient group");
    seeds.push_back(dense_->index_of(g));
  }
  return dense_->closure(seeds);
}

Subgroup GroupContext::to_subgroup(const ElementSet& s) {
  return Subgroup(group_, perms_of_genset(s));
}

std::vector<Permutation> GroupContext::perms_of_genset(const ElementSet& s) {
  std::vector<Permutation> gens;
  for (EIdx i : dense_->small_genset(s)) gens.push_back(dense_->perm(i));
  return gens;
}

ElementSet GroupContext::normal_closure_in(const ElementSet& ambient, std::vector<EIdx> seeds) {
  std::vector<EIdx> amb_gens = dense_->small_genset(ambient);
  ElementSet k = dense_->closure(seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (EIdx m : dense_->small_genset(k)) {
      for (EIdx g : amb_gens) {
        EIdx c = dense_->conj(m, g);
        if (!k.test(c)) {
          k = dense_->closure_extend(k, c);
          changed = true;
        }
      }
    }
  }
  return k;
}

ElementSet GroupContext::derived_of(const ElementSet& a) {
  return derived_series_of(a).size() > 1 ? derived_series_of(a)[1] : a;
}

const std::vector<ElementSet>& GroupContext::derived_series_of(const ElementSet& a) {
  auto it = derived_series_memo_.find(a);
  if (it != derived_series_memo_.end()) return it->second;
  std::vector<ElementSet> series{a};
  while (true) {
    const ElementSet& cur = series.back();
    std::vector<EIdx> gens = dense_->small_genset(cur);
    std::vector<EIdx> comms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i == j) continue;
        EIdx x = gens[i], y = gens[j];
        comms.push_back(dense_->mul(dense_->mul(dense_->inv(x), dense_->inv(y)),
                                    dense_->mul(x, y)));
      }
    ElementSet next = normal_closure_in(cur, std::move(comms));
    if (next == cur) break;
    series.push_back(std::move(next));
    if (series.back().count() == 1) break;
  }
  return derived_series_memo_.emplace(a, std::move(series)).first->second;
}

const std::vector<ElementSet>& GroupContext::lower_central_of(const ElementSet& a) {
  auto it = lower_central_memo_.find(a);
  if (it != lower_central_memo_.end()) return it->second;
  std::vector<EIdx> a_gens = dense_->small_genset(a);
  std::vector<ElementSet> series{a};
  while (true) {
    const ElementSet& cur = series.back();
    std::vector<EIdx> comms;
    for (EIdx x : dense_->small_genset(cur))
      for (EIdx y : a_gens)
        comms.push_back(dense_->mul(dense_->mul(dense_->inv(x), dense_->inv(y)),
                                    dense_->mul(x, y)));
    ElementSet next = normal_closure_in(a, std::move(comms));
    if (next == cur) break;
    series.push_back(std::move(next));
    if (series.back().count() == 1) break;
  }
  return lower_central_memo_.emplace(a, std::move(series)).first->second;
}

bool GroupContext::abelian(const ElementSet& a) {
  std::vector<EIdx> gens = dense_->small_genset(a);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (dense_->mul(gens[i], gens[j]) != dense_->mul(gens[j], gens[i])) return false;
  return true;
}

bool GroupContext::nilpotent(const ElementSet& a) {
  return lower_central_of(a).back().count() == 1;
}

bool GroupContext::soluble(const ElementSet& a) {
  return derived_series_of(a).back().count() == 1;
}

bool GroupContext::cyclic(const ElementSet& a) {
  std::uint64_t n = a.count();
  std::uint64_t best = 0;
  a.for_each([&](EIdx i) { best = std::max(best, dense_->element_order(i)); });
  return best == n;
}

const std::vector<ElementSet>& GroupContext::normals_of(const ElementSet& ambient) {
  auto it = normals_memo_.find(ambient);
  if (it != normals_memo_.end()) return it->second;

  std::vector<EIdx> amb_gens = dense_->small_genset(ambient);
  // Conjugacy classes of elements within the ambient subgroup.
  std::vector<EIdx> reps;
  {
    ElementSet seen(dense_->size());
    ambient.for_each([&](EIdx x) {
      if (seen.test(x)) return;
      reps.push_back(x);
      std::vector<EIdx> orbit{x};
      seen.set(x);
      for (std::size_t f = 0; f < orbit.size(); ++f)
        for (EIdx g : amb_gens) {
          EIdx y = dense_->conj(orbit[f], g);
          if (!seen.test(y)) {
            seen.set(y);
            orbit.push_back(y);
          }
        }
    });
  }

  std::unordered_map<ElementSet, bool, ElementSetHash> known;
  std::vector<ElementSet> list;
  auto add = [&](ElementSet s) {
    if (known.emplace(s, true).second) list.push_back(std::move(s));
  };
  add(dense_->trivial_subgroup());
  for (EIdx r : reps)
    if (r != 0) add(normal_closure_in(ambient, {r}));
  // Every normal subgroup is a join of normal closures of its elements, so
  // closing under pairwise joins enumerates all of them.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (list[j].is_subset_of(list[i]) || list[i].is_subset_of(list[j])) continue;
      add(dense_->closure_join(list[i], list[j]));
    }
  }
  std::sort(list.begin(), list.end(), [](const ElementSet& x, const ElementSet& y) {
    auto cx = x.count(), cy = y.count();
    if (cx != cy) return cx < cy;
    return x < y;
  });
  return normals_memo_.emplace(ambient, std::move(list)).first->second;
}

ElementSet GroupContext::core_in(const ElementSet& ambient, const ElementSet& k) {
  const auto& normals = normals_of(ambient);
  ElementSet best = dense_->trivial_subgroup();
  for (const auto& n : normals)
    if (n.count() > best.count() && n.is_subset_of(k)) best = n;
  return best;
}

const ElementSet& GroupContext::normalizer_of(const ElementSet& h) {
  auto it = normalizer_memo_.find(h);
  if (it != normalizer_memo_.end()) return it->second;
  ElementSet n = dense_->normalizer_in(h, dense_->whole_set());
  return normalizer_memo_.emplace(h, std::move(n)).first->second;
}

bool GroupContext::self_normalizing(const ElementSet& h) { return normalizer_of(h) == h; }

ElementSet GroupContext::fitting_of(const ElementSet& ambient) {
  const auto& normals = normals_of(ambient);
  ElementSet best = dense_->trivial_subgroup();
  for (const auto& n : normals)
    if (n.count() > best.count() && nilpotent(n)) best = n;
  for (const auto& n : normals)
    if (nilpotent(n) && !n.is_subset_of(best))
      throw EngineError("normal nilpotent subgroup outside the Fitting candidate");
  return best;
}

ElementSet GroupContext::sylow_of(std::uint64_t p) {
  auto it = sylow_memo_.find(p);
  if (it != sylow_memo_.end()) return it->second;
  std::uint64_t order = dense_->size();
  if (order % p != 0) throw InputError("prime does not divide the group order");
  std::uint64_t part = 1;
  while (order % p == 0) {
    part *= p;
    order /= p;
  }
  // Start from a power of some element whose order is divisible by p, then
  // climb through normalizers; a proper p-subgroup always extends inside a
  // Sylow overgroup.
  ElementSet current = dense_->trivial_subgroup();
  for (EIdx x = 1; x < dense_->size(); ++x) {
    std::uint64_t o = dense_->element_order(x);
    if (o % p == 0) {
      std::uint64_t m = o;
      while (m % p == 0) m /= p;
      current = dense_->closure({dense_->pow(x, m)});
      break;
    }
  }
  while (current.count() < part) {
    ElementSet normalizer = dense_->normalizer_in(current, dense_->whole_set());
    bool extended = false;
    std::vector<EIdx> members = normalizer.members();
    for (EIdx z : members) {
      if (current.test(z)) continue;
      if (!current.test(dense_->pow(z, p))) continue;
      current = dense_->closure_extend(current, z);
      extended = true;
      break;
    }
    if (!extended) throw EngineError("sylow climb stalled");
  }
  return sylow_memo_.emplace(p, std::move(current)).first->second;
}

int GroupContext::formation_key(const Formation& f) {
  auto it = formation_keys_.find(f.key());
  if (it != formation_keys_.end()) return it->second;
  int k = static_cast<int>(formation_keys_.size());
  formation_keys_.emplace(f.key(), k);
  residual_memo_.resize(formation_keys_.size());
  return k;
}

bool GroupContext::quotient_in(const Formation& f, const ElementSet& a, const ElementSet& n) {
  switch (f.kind()) {
    case Formation::Kind::kAbelian:
      return derived_of(a).is_subset_of(n);
    case Formation::Kind::kNilpotent:
      return lower_central_of(a).back().is_subset_of(n);
    case Formation::Kind::kSoluble:
      return derived_series_of(a).back().is_subset_of(n);
    case Formation::Kind::kNilpotentDerived: {
      // (A/N)' = A'N/N is nilpotent iff the stable lower-central term of A'N
      // falls inside N.
      ElementSet d = dense_->closure_join(derived_of(a), n);
      return lower_central_of(d).back().is_subset_of(n);
    }
    case Formation::Kind::kSupersoluble: {
      // Walk a chief series of A through N; all factors above N must be prime.
      const auto& normals = normals_of(a);
      ElementSet m = n;
      while (m.count() < a.count()) {
        const ElementSet* next = nullptr;
        for (const auto& cand : normals) {
          if (cand.count() <= m.count()) continue;
          if (!m.is_subset_of(cand)) continue;
          if (next == nullptr || cand.count() < next->count()) next = &cand;
          if (next->count() == 2 * m.count()) break;  // cannot get smaller
        }
        if (next == nullptr) throw EngineError("chief walk found no normal overgroup");
        std::uint64_t factor = next->count() / m.count();
        if (!is_prime(factor)) return false;
        m = *next;
      }
      return true;
    }
    case Formation::Kind::kProduct: {
      ElementSet r = residual_above(f.product_right(), a, n);
      return quotient_in(f.product_left(), r, n);
    }
    case Formation::Kind::kCustom: {
      if (n.count() == 1) return f.custom_member()(to_subgroup(a).group());
      Group sub = to_subgroup(a).group();
      Subgroup normal_sub(sub, perms_of_genset(n));
      QuotientMap q = quotient_map(sub, normal_sub);
      return f.custom_member()(q.quotient());
    }
  }
  throw EngineError("unhandled formation kind");
}

bool GroupContext::set_in(const Formation& f, const ElementSet& a) {
  return quotient_in(f, a, dense_->trivial_subgroup());
}

const ElementSet& GroupContext::residual_of(const Formation& f, const ElementSet& a) {
  int fk = formation_key(f);
  auto& memo = residual_memo_[static_cast<std::size_t>(fk)];
  auto it = memo.find(a);
  if (it != memo.end()) return it->second;
  ElementSet r = residual_above(f, a, dense_->trivial_subgroup());
  return memo.emplace(a, std::move(r)).first->second;
}

ElementSet GroupContext::residual_above(const Formation& f, const ElementSet& a,
                                        const ElementSet& n) {
  const auto& normals = normals_of(a);
  const ElementSet* best = nullptr;
  ElementSet meet = a;
  for (const auto& m : normals) {
    if (!n.is_subset_of(m)) continue;
    if (!quotient_in(f, a, m)) continue;
    if (best == nullptr || m.count() < best->count()) best = &m;
    meet = meet.intersect(m);
  }
  if (best == nullptr) throw EngineError("no normal subgroup has quotient in " + f.name());
  if (meet != *best)
    throw EngineError("membership predicate of " + f.name() +
                      " violates the formation intersection property");
  return *best;
}

bool GroupContext::f_subnormal(const Formation& f, SubId ambient, SubId h) {
  if (ambient == h) return true;
  SubgroupStore& st = store();
  if (!st.strictly_contains(ambient, h))
    throw InputError("subgroup is not contained in the stated ambient subgroup");
  int fk = formation_key(f);
  std::uint64_t key = pack_key(fk, ambient, h);
  auto it = subnormal_memo_.find(key);
  if (it != subnormal_memo_.end()) return it->second != 0;

  const ElementSet& residual = residual_of(f, st.set(ambient));
  bool value = false;
  for (SubId m : st.maximals_in(ambient)) {
    if (m != h && !st.ups(h).test(m)) continue;
    if (!residual.is_subset_of(st.set(m))) continue;
    if (f_subnormal(f, m, h)) {
      value = true;
      subnormal_via_[key] = m;
      break;
    }
  }
  subnormal_memo_[key] = value ? 1 : 0;
  return value;
}

std::vector<SubId> GroupContext::f_subnormal_chain(const Formation& f, SubId ambient, SubId h) {
  std::vector<SubId> chain{h};
  if (ambient == h) return chain;
  if (!f_subnormal(f, ambient, h)) return {};
  int fk = formation_key(f);
  // Rebuild the path from the memoized maximal choices, top down.
  std::vector<SubId> tops{ambient};
  SubId cur = ambient;
  while (cur != h) {
    cur = subnormal_via_.at(pack_key(fk, cur, h));
    if (cur != h) tops.push_back(cur);
  }
  for (auto rit = tops.rbegin(); rit != tops.rend(); ++rit) chain.push_back(*rit);
  return chain;
}

bool GroupContext::f_abnormal(const Formation& f, SubId ambient, SubId h) {
  if (ambient == h) return true;  // no pairs to test
  SubgroupStore& st = store();
  if (!st.strictly_contains(ambient, h))
    throw InputError("subgroup is not contained in the stated ambient subgroup");
  int fk = formation_key(f);
  std::uint64_t key = pack_key(fk, ambient, h);
  auto it = abnormal_memo_.find(key);
  if (it != abnormal_memo_.end()) return it->second != 0;

  bool value = true;
  auto try_k = [&](SubId k) {
    for (SubId l : st.covers_of(k)) {
      if (l != ambient && !st.downs(ambient).test(l)) continue;
      ElementSet core = core_in(st.set(l), st.set(k));
      if (quotient_in(f, st.set(l), core)) {
        value = false;
        return false;
      }
    }
    return true;
  };
  if (try_k(h)) {
    st.ups(h).for_each([&](EIdx k) {
      if (!value) return;
      SubId kid = static_cast<SubId>(k);
      if (kid != ambient && !st.downs(ambient).test(kid)) return;
      if (kid == ambient) return;  // K must be proper in some L <= ambient
      try_k(kid);
    });
  }
  abnormal_memo_[key] = value ? 1 : 0;
  return value;
}

bool GroupContext::f_projector(const Formation& f, SubId h) {
  SubgroupStore& st = store();
  int fk = formation_key(f);
  std::uint64_t key = pack_key(fk, st.whole_id(), h);
  auto it = projector_memo_.find(key);
  if (it != projector_memo_.end()) return it->second != 0;

  bool value = true;
  for (const auto& n : normals_of(dense_->whole_set())) {
    ElementSet hn = dense_->closure_join(st.set(h), n);
    if (!quotient_in(f, hn, n)) {
      value = false;
      break;
    }
    SubId hn_id = st.id_of(hn);
    bool beaten = false;
    st.ups(hn_id).for_each([&](EIdx t) {
      if (beaten) return;
      if (quotient_in(f, st.set(static_cast<SubId>(t)), n)) beaten = true;
    });
    if (beaten) {
      value = false;
      break;
    }
  }
  projector_memo_[key] = value ? 1 : 0;
  return value;
}

std::vector<std::uint32_t> GroupContext::primary_cyclic_class_ids() {
  SubgroupStore& st = store();
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < st.class_count(); ++c) {
    SubId rep = st.class_rep(c);
    std::uint64_t order = st.order(rep);
    if (order < 2 || !is_prime_power(order)) continue;
    if (cyclic(st.set(rep))) out.push_back(c);
  }
  return out;
}

std::vector<std::uint32_t> GroupContext::carter_class_ids() {
  SubgroupStore& st = store();
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < st.class_count(); ++c) {
    SubId rep = st.class_rep(c);
    if (nilpotent(st.set(rep)) && self_normalizing(st.set(rep))) out.push_back(c);
  }
  return out;
}

}  // namespace permforms::detail
