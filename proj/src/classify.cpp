#include "permforms/classify.hpp"

#include "context.hpp"
#include "permforms/errors.hpp"

namespace permforms {

using detail::ElementSet;
using detail::GroupContext;
using detail::SubId;
using detail::SubgroupStore;

bool is_self_normalizing(const Group& g, const Subgroup& h) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  return ctx->self_normalizing(ctx->bits_of(h));
}

FSubnormality is_f_subnormal(const Formation& f, const Group& g, const Subgroup& h) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  SubId hid = st.id_of(ctx->bits_of(h));
  FSubnormality out;
  out.value = ctx->f_subnormal(f, st.whole_id(), hid);
  if (out.value) {
    ChainWitness w;
    for (SubId id : ctx->f_subnormal_chain(f, st.whole_id(), hid))
      w.links.push_back(ctx->to_subgroup(st.set(id)));
    out.witness = std::move(w);
  }
  return out;
}

bool is_f_abnormal(const Formation& f, const Group& g, const Subgroup& h) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  return ctx->f_abnormal(f, st.whole_id(), st.id_of(ctx->bits_of(h)));
}

std::vector<Subgroup> carter_subgroups(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  std::vector<Subgroup> out;
  for (std::uint32_t c : ctx->carter_class_ids())
    out.push_back(ctx->to_subgroup(st.set(st.class_rep(c))));
  if (ctx->soluble(ctx->dense().whole_set()) && out.size() != 1)
    throw EngineError("soluble group must have exactly one Carter class");
  return out;
}

bool is_f_projector(const Formation& f, const Group& g, const Subgroup& h) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  return ctx->f_projector(f, st.id_of(ctx->bits_of(h)));
}

bool is_schmidt_group(const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  const ElementSet whole = ctx->dense().whole_set();
  if (ctx->nilpotent(whole)) return false;
  SubgroupStore& st = ctx->store();
  for (SubId m : st.maximals_in(st.whole_id()))
    if (!ctx->nilpotent(st.set(m))) return false;
  return true;
}

bool is_minimal_non_f(const Formation& f, const Group& g) {
  if (!f.flags().subgroup_closed)
    throw InputError("minimal-non-F test requires a subgroup-closed formation");
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  if (ctx->set_in(f, ctx->dense().whole_set())) return false;
  SubgroupStore& st = ctx->store();
  for (SubId m : st.maximals_in(st.whole_id()))
    if (!ctx->set_in(f, st.set(m))) return false;
  return true;
}

std::vector<SubgroupClassification> classify_subgroups(const Formation& f, const Group& g) {
  detail::require_lattice_cap(g);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  SubgroupStore& st = ctx->store();
  std::vector<SubgroupClassification> out;
  for (std::uint32_t c = 0; c < st.class_count(); ++c) {
    SubId rep = st.class_rep(c);
    SubgroupClassification row;
    row.subgroup = ctx->to_subgroup(st.set(rep));
    row.order = st.order(rep);
    row.class_size = st.class_members(c).size();
    row.self_normalizing = ctx->self_normalizing(st.set(rep));
    row.f_subnormal = ctx->f_subnormal(f, st.whole_id(), rep);
    if (row.f_subnormal) {
      ChainWitness w;
      for (SubId id : ctx->f_subnormal_chain(f, st.whole_id(), rep))
        w.links.push_back(ctx->to_subgroup(st.set(id)));
      row.chain = std::move(w);
    }
    row.f_abnormal = ctx->f_abnormal(f, st.whole_id(), rep);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace permforms
