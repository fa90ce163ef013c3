#include "permforms/perm_ops.hpp"

#include <unordered_map>

#include "context.hpp"
#include "permforms/errors.hpp"

namespace permforms {

using detail::ElementSet;
using detail::GroupContext;

namespace {

void require_subgroup_of(const Group& g, const Subgroup& h) {
  for (const auto& gen : h.generators())
    if (!g.contains(gen)) throw InputError("subgroup is not contained in the given group");
}

/// Normal closure of <seeds> in g, at the membership-structure level.
Group normal_closure(const Group& g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (auto& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  Group k = make_group_unchecked(g.degree(), gens, g.config());
  std::vector<Permutation> queue = gens;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& t : g.generators()) {
      Permutation c = queue[i].conjugated_by(t);
      if (!k.contains(c)) {
        gens.push_back(c);
        queue.push_back(std::move(c));
        k = make_group_unchecked(g.degree(), gens, g.config());
      }
    }
  }
  return k;
}

std::vector<Permutation> commutators_of_generators(const Group& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  return comms;
}

Group derived_group_of(const Group& g) {
  return normal_closure(g, commutators_of_generators(g));
}

}  // namespace

Subgroup normalizer(const Group& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  ElementSet bits = ctx->bits_of(h);
  return ctx->to_subgroup(ctx->normalizer_of(bits));
}

Subgroup core(const Group& g, const Subgroup& h) {
  require_subgroup_of(g, h);
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  const auto& dense = ctx->dense();
  ElementSet bits = ctx->bits_of(h);
  // Intersect the full conjugation orbit of H.
  ElementSet meet = bits;
  std::vector<ElementSet> orbit{bits};
  std::unordered_map<ElementSet, bool, detail::ElementSetHash> seen;
  seen.emplace(bits, true);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (detail::EIdx gi : dense.generator_indices()) {
      ElementSet image = dense.conj_set(orbit[i], gi);
      if (seen.emplace(image, true).second) {
        meet = meet.intersect(image);
        orbit.push_back(std::move(image));
      }
    }
  }
  return ctx->to_subgroup(meet);
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  if (!h.parent().contains(g))
    throw InputError("conjugating element lies outside the parent group");
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto& x : h.generators()) gens.push_back(x.conjugated_by(g));
  return Subgroup(h.parent(), std::move(gens));
}

Subgroup derived_subgroup(const Group& g) {
  return Subgroup(g, derived_group_of(g).generators());
}

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  Group current = g;
  while (true) {
    Group next = derived_group_of(current);
    if (next.order() == current.order()) {
      if (current.order() > 1) series.push_back(Subgroup(g, next.generators()));
      break;
    }
    series.push_back(Subgroup(g, next.generators()));
    if (next.order() == 1) break;
    current = next;
  }
  return series;
}

bool is_soluble(const Group& g) {
  Group current = g;
  while (true) {
    Group next = derived_group_of(current);
    if (next.order() == 1) return true;
    if (next.order() == current.order()) return false;
    current = next;
  }
}

bool is_nilpotent_group(const Group& g) {
  Group current = g;
  while (true) {
    std::vector<Permutation> comms;
    for (const auto& x : current.generators())
      for (const auto& y : g.generators())
        comms.push_back(x.inverse() * y.inverse() * x * y);
    Group next = normal_closure(g, std::move(comms));
    if (next.order() == 1) return true;
    if (next.order() == current.order()) return false;
    current = next;
  }
}

struct QuotientMap::Impl {
  Group source;
  Subgroup kernel;
  Group image;
  std::vector<Permutation> coset_reps;
  std::unordered_map<Permutation, Point, PermHash> coset_index;
};

const Group& QuotientMap::quotient() const { return impl_->image; }

Permutation QuotientMap::image_of(const Permutation& g) const {
  if (!impl_->source.contains(g)) throw InputError("element lies outside the group");
  std::vector<Point> images(impl_->coset_reps.size());
  for (Point i = 0; i < impl_->coset_reps.size(); ++i) {
    Permutation rep = impl_->kernel.group().coset_representative(impl_->coset_reps[i] * g);
    images[i] = impl_->coset_index.at(rep);
  }
  return Permutation::from_images(std::move(images));
}

Subgroup QuotientMap::image_of(const Subgroup& h) const {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) gens.push_back(image_of(x));
  return Subgroup(impl_->image, std::move(gens));
}

QuotientMap quotient_map(const Group& g, const Subgroup& n) {
  require_subgroup_of(g, n);
  for (const auto& x : n.generators())
    for (const auto& t : g.generators())
      if (!n.contains(x.conjugated_by(t)))
        throw InputError("quotient requires a normal subgroup");

  auto impl = std::make_shared<QuotientMap::Impl>();
  impl->source = g;
  impl->kernel = n;
  const Group& ngrp = n.group();

  // Enumerate right cosets breadth-first through canonical representatives.
  std::vector<Permutation>& reps = impl->coset_reps;
  auto& index = impl->coset_index;
  reps.push_back(ngrp.coset_representative(g.identity()));
  index.emplace(reps.front(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation rep = ngrp.coset_representative(reps[i] * s);
      if (index.emplace(rep, static_cast<Point>(reps.size())).second)
        reps.push_back(std::move(rep));
    }
  }
  const std::size_t degree = reps.size();
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
      images[i] = index.at(ngrp.coset_representative(reps[i] * s));
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  impl->image = make_group_unchecked(static_cast<unsigned>(degree), std::move(gens), g.config());
  if (impl->image.order() * n.order() != g.order())
    throw EngineError("coset action order mismatch");

  QuotientMap q;
  q.impl_ = std::move(impl);
  return q;
}

Group quotient(const Group& g, const Subgroup& n) { return quotient_map(g, n).quotient(); }

Subgroup fitting_subgroup(const Group& g) {
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  return ctx->to_subgroup(ctx->fitting_of(ctx->dense().whole_set()));
}

}  // namespace permforms
