#include "permforms/lattice.hpp"

#include <algorithm>

#include "context.hpp"
#include "permforms/errors.hpp"

namespace permforms {

using detail::ElementSet;
using detail::GroupContext;
using detail::SubId;
using detail::SubgroupStore;

bool LatticeIndex::class_contained_in(std::size_t c1, std::size_t c2) const {
  return contained_[c1][c2];
}

bool LatticeIndex::class_maximal_in(std::size_t c1, std::size_t c2) const {
  if (c1 == c2 || !contained_[c1][c2]) return false;
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (k == c1 || k == c2) continue;
    if (contained_[c1][k] && contained_[k][c2]) return false;
  }
  return true;
}

LatticeIndex subgroup_lattice(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();

  LatticeIndex out;
  out.total_ = st.size();
  out.classes_.reserve(st.class_count());
  for (std::uint32_t c = 0; c < st.class_count(); ++c) {
    SubId rep = st.class_rep(c);
    ConjugacyClassOfSubgroups cls;
    cls.representative = ctx->to_subgroup(st.set(rep));
    cls.class_size = st.class_members(c).size();
    cls.order = st.order(rep);
    out.classes_.push_back(std::move(cls));
  }
  out.contained_.assign(st.class_count(), std::vector<bool>(st.class_count(), false));
  for (std::uint32_t c1 = 0; c1 < st.class_count(); ++c1) {
    SubId rep = st.class_rep(c1);
    out.contained_[c1][c1] = true;
    st.ups(rep).for_each([&](detail::EIdx up) {
      out.contained_[c1][st.class_of(static_cast<SubId>(up))] = true;
    });
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  std::vector<Subgroup> out;
  std::vector<bool> seen(st.class_count(), false);
  for (SubId m : st.maximals_in(st.whole_id())) {
    std::uint32_t c = st.class_of(m);
    if (seen[c]) continue;
    seen[c] = true;
    out.push_back(ctx->to_subgroup(st.set(st.class_rep(c))));
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups_containing(const Group& g, const Subgroup& h) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  ElementSet bits = ctx->bits_of(h);
  std::vector<Subgroup> out;
  for (SubId m : st.maximals_in(st.whole_id()))
    if (bits.is_subset_of(st.set(m))) out.push_back(ctx->to_subgroup(st.set(m)));
  return out;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  std::vector<Subgroup> out;
  for (const auto& n : ctx->normals_of(ctx->dense().whole_set()))
    out.push_back(ctx->to_subgroup(n));
  return out;
}

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  return ctx->to_subgroup(ctx->sylow_of(p));
}

std::optional<Subgroup> hall_pprime_subgroup(const Group& g, std::uint64_t p) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  std::uint64_t target = g.order();
  while (p > 1 && target % p == 0) target /= p;
  SubgroupStore& st = ctx->store();
  for (std::uint32_t c = 0; c < st.class_count(); ++c) {
    if (st.order(st.class_rep(c)) == target)
      return ctx->to_subgroup(st.set(st.class_rep(c)));
  }
  return std::nullopt;
}

std::vector<Subgroup> primary_cyclic_subgroups(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  std::vector<Subgroup> out;
  for (std::uint32_t c : ctx->primary_cyclic_class_ids())
    out.push_back(ctx->to_subgroup(st.set(st.class_rep(c))));
  return out;
}

Subgroup frattini_subgroup(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  ElementSet meet = ctx->dense().whole_set();
  for (SubId m : st.maximals_in(st.whole_id())) meet = meet.intersect(st.set(m));
  return ctx->to_subgroup(meet);
}

std::vector<ChainWitness> all_maximal_chains(const Group& g, const Subgroup& h,
                                             std::uint64_t cap) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  if (cap == 0) cap = g.config().chain_cap;
  SubgroupStore& st = ctx->store();
  SubId start = st.id_of(ctx->bits_of(h));
  SubId top = st.whole_id();

  std::vector<ChainWitness> out;
  std::vector<SubId> path{start};
  std::uint64_t count = 0;
  auto emit = [&]() {
    if (++count > cap) throw ResourceError("maximal chain count exceeds cap");
    ChainWitness w;
    for (SubId id : path) w.links.push_back(ctx->to_subgroup(st.set(id)));
    out.push_back(std::move(w));
  };
  // Depth-first walk upward through the covering relation.
  std::function<void(SubId)> walk = [&](SubId cur) {
    if (cur == top) {
      emit();
      return;
    }
    for (SubId next : st.covers_of(cur)) {
      path.push_back(next);
      walk(next);
      path.pop_back();
    }
  };
  walk(start);
  return out;
}

}  // namespace permforms
