#include "store.hpp"

#include <algorithm>
#include <unordered_set>

#include "permforms/errors.hpp"

namespace permforms::detail {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

SubgroupStore::SubgroupStore(const DenseGroup& dense, Method method) : dense_(dense) {
  if (method == Method::kAuto)
    method = dense.size() < 64 ? Method::kExhaustive : Method::kCyclicExtension;
  std::vector<ElementSet> sets = method == Method::kExhaustive
                                     ? enumerate_exhaustive(dense)
                                     : enumerate_cyclic_extension(dense);
  index_subgroups(std::move(sets));
  build_classes();
  build_poset();
}

std::vector<ElementSet> SubgroupStore::enumerate_exhaustive(const DenseGroup& dense) {
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<ElementSet> list;
  auto add = [&](ElementSet s) {
    if (known.insert(s).second) list.push_back(std::move(s));
  };
  add(dense.trivial_subgroup());
  std::vector<ElementSet> cyclics;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (EIdx x = 1; x < dense.size(); ++x) {
      ElementSet c = dense.closure({x});
      if (seen.insert(c).second) cyclics.push_back(c);
    }
  }
  for (const auto& c : cyclics) add(c);
  // Join-close: every subgroup is a join of cyclic subgroups.
  for (std::size_t k = 0; k < list.size(); ++k) {
    ElementSet current = list[k];
    for (const auto& c : cyclics) {
      if (c.is_subset_of(current)) continue;
      add(dense.closure_join(current, c));
    }
  }
  return list;
}

std::vector<ElementSet> SubgroupStore::enumerate_cyclic_extension(const DenseGroup& dense) {
  const auto primes = prime_divisors(dense.size());
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<ElementSet> all;
  std::vector<ElementSet> reps;  // worklist of class representatives

  auto add_class = [&](const ElementSet& first) {
    if (known.count(first)) return;
    // Materialize the full conjugation orbit.
    std::vector<ElementSet> orbit{first};
    known.insert(first);
    for (std::size_t f = 0; f < orbit.size(); ++f) {
      for (EIdx g : dense.generator_indices()) {
        ElementSet image = dense.conj_set(orbit[f], g);
        if (known.insert(image).second) orbit.push_back(std::move(image));
      }
    }
    ElementSet canon = orbit.front();
    for (const auto& s : orbit)
      if (s < canon) canon = s;
    for (auto& s : orbit) all.push_back(std::move(s));
    reps.push_back(std::move(canon));
  };

  add_class(dense.trivial_subgroup());
  const ElementSet whole = dense.whole_set();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    ElementSet h = reps[r];  // copy: reps may reallocate
    ElementSet normalizer = dense.normalizer_in(h, whole);
    ElementSet covered = h;  // union of found prime extensions
    std::vector<EIdx> candidates = normalizer.members();
    for (EIdx z : candidates) {
      if (covered.test(z)) continue;
      for (auto p : primes) {
        if (!h.test(dense.pow(z, p))) continue;
        ElementSet k = dense.closure_extend(h, z);
        covered = covered.unite(k);
        add_class(k);
        break;
      }
    }
  }
  // Insoluble groups are not reached by prime-index towers; the group itself
  // is always part of its own lattice.
  if (!known.count(whole)) all.push_back(whole);
  return all;
}

void SubgroupStore::index_subgroups(std::vector<ElementSet> sets) {
  std::vector<std::pair<std::uint64_t, ElementSet>> keyed;
  keyed.reserve(sets.size());
  for (auto& s : sets) keyed.emplace_back(s.count(), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  sets_.reserve(keyed.size());
  orders_.reserve(keyed.size());
  for (auto& [order, s] : keyed) {
    SubId id = static_cast<SubId>(sets_.size());
    ids_.emplace(s, id);
    orders_.push_back(order);
    sets_.push_back(std::move(s));
  }
  trivial_id_ = 0;
  whole_id_ = static_cast<SubId>(sets_.size() - 1);
  if (orders_.front() != 1 || orders_.back() != dense_.size())
    throw EngineError("subgroup store missing trivial or whole subgroup");
}

void SubgroupStore::build_classes() {
  class_of_.assign(sets_.size(), UINT32_MAX);
  for (SubId id = 0; id < sets_.size(); ++id) {
    if (class_of_[id] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(classes_.size());
    std::vector<SubId> members{id};
    class_of_[id] = c;
    for (std::size_t f = 0; f < members.size(); ++f) {
      for (EIdx g : dense_.generator_indices()) {
        ElementSet image = dense_.conj_set(sets_[members[f]], g);
        SubId other = id_of(image);
        if (class_of_[other] == UINT32_MAX) {
          class_of_[other] = c;
          members.push_back(other);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

void SubgroupStore::build_poset() {
  const std::size_t n = sets_.size();
  ups_.assign(n, ElementSet(n));
  downs_.assign(n, ElementSet(n));
  for (SubId i = 0; i < n; ++i) {
    for (SubId j = i + 1; j < n; ++j) {
      if (orders_[i] >= orders_[j] || orders_[j] % orders_[i] != 0) continue;
      if (sets_[i].is_subset_of(sets_[j])) {
        ups_[i].set(j);
        downs_[j].set(i);
      }
    }
  }
  maximals_in_.assign(n, {});
  covers_of_.assign(n, {});
  for (SubId i = 0; i < n; ++i) {
    ups_[i].for_each([&](EIdx j) {
      if (ups_[i].intersect(downs_[j]).empty()) {
        maximals_in_[j].push_back(i);
        covers_of_[i].push_back(static_cast<SubId>(j));
      }
    });
  }
}

SubId SubgroupStore::id_of(const ElementSet& s) const {
  auto it = ids_.find(s);
  if (it == ids_.end()) throw EngineError("element set is not a stored subgroup");
  return it->second;
}

bool SubgroupStore::strictly_contains(SubId big, SubId small) const {
  return downs_[big].test(small);
}

const std::vector<EIdx>& SubgroupStore::genset(SubId id) const {
  if (gensets_.empty()) gensets_.resize(sets_.size());
  auto& g = gensets_[id];
  if (g.empty() && orders_[id] > 1) g = dense_.small_genset(sets_[id]);
  return g;
}

}  // namespace permforms::detail
