#include "permforms/groupgen.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dense.hpp"
#include "permforms/classify.hpp"
#include "permforms/errors.hpp"
#include "permforms/formation.hpp"
#include "permforms/lattice.hpp"
#include "permforms/perm_ops.hpp"

namespace permforms {

namespace {

Permutation cycle_perm(unsigned degree, const std::vector<Point>& cycle) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation::from_images(std::move(images));
}

}  // namespace

Group cyclic_group(unsigned m, const EngineConfig& config) {
  if (m == 0) throw InputError("cyclic group order must be positive");
  if (m == 1) return Group::trivial(1, config);
  std::vector<Point> cycle(m);
  std::iota(cycle.begin(), cycle.end(), 0u);
  return Group::from_generators(m, {cycle_perm(m, cycle)}, config);
}

Group elementary_abelian_group(unsigned p, unsigned n, const EngineConfig& config) {
  bool prime = p >= 2;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw InputError("elementary abelian groups require a prime exponent");
  if (n == 0) return Group::trivial(1, config);
  std::vector<Group> parts(n, cyclic_group(p, config));
  return direct_product(parts);
}

Group dihedral_group(unsigned n, const EngineConfig& config) {
  if (n < 3) throw InputError("dihedral_group requires n >= 3");
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0u);
  std::vector<Point> flip(n);
  for (unsigned i = 0; i < n; ++i) flip[i] = static_cast<Point>((n - i) % n);
  return Group::from_generators(
      n, {cycle_perm(n, cycle), Permutation::from_images(std::move(flip))}, config);
}

Group symmetric_group(unsigned n, const EngineConfig& config) {
  if (n <= 1) return Group::trivial(n == 0 ? 1 : n, config);
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 0u);
  if (n == 2) return Group::from_generators(2, {cycle_perm(2, {0, 1})}, config);
  return Group::from_generators(n, {cycle_perm(n, {0, 1}), cycle_perm(n, cycle)}, config);
}

Group alternating_group(unsigned n, const EngineConfig& config) {
  if (n < 3) return Group::trivial(n == 0 ? 1 : n, config);
  if (n == 3) return Group::from_generators(3, {cycle_perm(3, {0, 1, 2})}, config);
  std::vector<Point> big;
  if (n % 2 == 1) {
    big.resize(n);
    std::iota(big.begin(), big.end(), 0u);
  } else {
    big.resize(n - 1);
    std::iota(big.begin(), big.end(), 1u);
  }
  return Group::from_generators(n, {cycle_perm(n, {0, 1, 2}), cycle_perm(n, big)}, config);
}

Group dicyclic_group(unsigned n, const EngineConfig& config) {
  if (n < 2) throw InputError("dicyclic_group requires n >= 2");
  if (n % 2 == 1) {
    // Split case: C_n x| C_4 with the C_4 generator inverting C_n.
    Group base = cyclic_group(n, config);
    Group four = cyclic_group(4, config);
    return semidirect_product(base, four, inverting_action(base, four));
  }
  // Right-regular representation from the presentation
  // <a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1>; point i + 2n*j <-> a^i b^j.
  const unsigned two_n = 2 * n;
  const unsigned degree = 4 * n;
  std::vector<Point> ra(degree), rb(degree);
  for (unsigned i = 0; i < two_n; ++i) {
    ra[i] = (i + 1) % two_n;
    ra[two_n + i] = two_n + (i + two_n - 1) % two_n;
    rb[i] = two_n + i;
    rb[two_n + i] = (i + n) % two_n;
  }
  return Group::from_generators(degree,
                                {Permutation::from_images(std::move(ra)),
                                 Permutation::from_images(std::move(rb))},
                                config);
}

Group quaternion_group(const EngineConfig& config) { return dicyclic_group(2, config); }

Group make_standard(StandardKind kind, unsigned a, unsigned b, const EngineConfig& config) {
  switch (kind) {
    case StandardKind::kCyclic: return cyclic_group(a, config);
    case StandardKind::kElementaryAbelian: return elementary_abelian_group(a, b, config);
    case StandardKind::kDihedral: return dihedral_group(a, config);
    case StandardKind::kSymmetric: return symmetric_group(a, config);
    case StandardKind::kAlternating: return alternating_group(a, config);
    case StandardKind::kQuaternion8: return quaternion_group(config);
    case StandardKind::kDicyclic: return dicyclic_group(a, config);
  }
  throw InputError("unknown standard kind");
}

Group direct_product(const Group& a, const Group& b) { return direct_product({a, b}); }

Group direct_product(const std::vector<Group>& factors) {
  if (factors.empty()) throw InputError("direct product of no factors");
  unsigned degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), 0u);
      for (Point x = 0; x < f.degree(); ++x) images[offset + x] = offset + g[x];
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    offset += f.degree();
  }
  Group out = Group::from_generators(degree, std::move(gens), factors.front().config());
  std::uint64_t expected = 1;
  for (const auto& f : factors) expected *= f.order();
  if (out.order() != expected) throw EngineError("direct product order mismatch");
  return out;
}

ActionSpec inverting_action(const Group& n, const Group& h) {
  ActionSpec spec;
  spec.images.assign(h.generators().size(), {});
  for (auto& row : spec.images)
    for (const auto& g : n.generators()) row.push_back(g.inverse());
  return spec;
}

Group semidirect_product(const Group& n, const Group& h, const ActionSpec& action) {
  const auto& ngens = n.generators();
  const auto& hgens = h.generators();
  if (action.images.size() != hgens.size())
    throw InputError("action must describe every complement generator");
  for (const auto& row : action.images) {
    if (row.size() != ngens.size())
      throw InputError("action row must cover every normal-factor generator");
    for (const auto& img : row)
      if (!n.contains(img)) throw InputError("action image lies outside the normal factor");
  }

  // Enumerate N with factorizations so the described generator images extend
  // to a map on all of N.
  std::vector<Permutation> elems{n.identity()};
  std::unordered_map<Permutation, std::uint32_t, PermHash> index{{elems[0], 0}};
  std::vector<std::pair<std::int64_t, std::size_t>> fact{{-1, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (std::size_t j = 0; j < ngens.size(); ++j) {
      Permutation next = elems[k] * ngens[j];
      if (index.emplace(next, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(next));
        fact.emplace_back(static_cast<std::int64_t>(k), j);
      }
    }
  }
  const std::size_t nsize = elems.size();

  const unsigned degree = static_cast<unsigned>(nsize) + h.degree();
  std::vector<Permutation> out_gens;

  // Right multiplications of N on its own elements.
  for (const auto& g : ngens) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t x = 0; x < nsize; ++x)
      images[x] = index.at(elems[x] * g);
    out_gens.push_back(Permutation::from_images(std::move(images)));
  }

  // Complement generators act on N-elements by the extended automorphism and
  // on their own points by h's representation.
  std::vector<Permutation> automorphism_perms;
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    std::vector<Permutation> alpha(nsize, n.identity());
    for (std::size_t x = 1; x < nsize; ++x)
      alpha[x] = alpha[static_cast<std::size_t>(fact[x].first)] * action.images[i][fact[x].second];
    std::vector<Point> images(degree);
    for (std::size_t x = 0; x < nsize; ++x) {
      auto it = index.find(alpha[x]);
      if (it == index.end())
        throw InputError("action image leaves the normal factor");
      images[x] = it->second;
    }
    for (Point y = 0; y < h.degree(); ++y)
      images[nsize + y] = static_cast<Point>(nsize) + hgens[i][y];
    Permutation perm = Permutation::from_images(std::move(images));  // throws if not bijective

    // Homomorphism check on the multiplication table (full below 512, a
    // deterministic stride sample above).
    auto check_pair = [&](std::size_t x, std::size_t y) {
      std::uint32_t xy = index.at(elems[x] * elems[y]);
      if (!(alpha[xy] == alpha[x] * alpha[y]))
        throw InputError("action does not extend to an automorphism of the normal factor");
    };
    if (nsize <= 512) {
      for (std::size_t x = 0; x < nsize; ++x)
        for (std::size_t y = 0; y < nsize; ++y) check_pair(x, y);
    } else {
      std::size_t stride = nsize / 64 + 1;
      for (std::size_t x = 0; x < nsize; x += 1)
        for (std::size_t y = x % stride; y < nsize; y += stride) check_pair(x, y);
    }
    automorphism_perms.push_back(std::move(perm));
  }

  // The map from H into Sym(N-elements) x H must satisfy H's relations.
  Group lifted = make_group_unchecked(degree, automorphism_perms, h.config());
  if (lifted.order() != h.order())
    throw InputError("action is not a homomorphism from the complement to automorphisms");

  for (auto& p : automorphism_perms) out_gens.push_back(std::move(p));
  Group out = Group::from_generators(degree, std::move(out_gens), n.config());
  if (out.order() != n.order() * h.order())
    throw EngineError("semidirect product order mismatch");
  return out;
}

bool isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (a.order() == 1) return true;
  detail::DenseGroup da(a), db(b);

  auto census = [](const detail::DenseGroup& d) {
    std::vector<std::uint64_t> out;
    for (detail::EIdx i = 0; i < d.size(); ++i) out.push_back(d.element_order(i));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (census(da) != census(db)) return false;

  auto class_sizes = [](const detail::DenseGroup& d) {
    std::vector<std::pair<std::uint64_t, std::size_t>> out;  // (element order, class size)
    std::vector<bool> seen(d.size(), false);
    for (detail::EIdx x = 0; x < d.size(); ++x) {
      if (seen[x]) continue;
      std::vector<detail::EIdx> orbit{x};
      seen[x] = true;
      for (std::size_t f = 0; f < orbit.size(); ++f)
        for (std::size_t k = 0; k < d.generator_indices().size(); ++k) {
          detail::EIdx y = d.conj_map(k)[orbit[f]];
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      out.emplace_back(d.element_order(x), orbit.size());
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (class_sizes(da) != class_sizes(db)) return false;

  // Generator-image backtracking with pair-order pruning and a full check.
  std::vector<detail::EIdx> gens = da.small_genset(da.whole_set());
  std::vector<detail::EIdx> chosen(gens.size(), 0);

  auto full_check = [&]() {
    // Extend the map over BFS factorizations and verify it is a bijective
    // homomorphism.
    std::vector<detail::EIdx> image(da.size(), 0);
    std::vector<bool> have(da.size(), false);
    std::vector<detail::EIdx> list{0};
    have[0] = true;
    for (std::size_t k = 0; k < list.size(); ++k) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        detail::EIdx next = da.mul(list[k], gens[j]);
        if (!have[next]) {
          have[next] = true;
          image[next] = db.mul(image[list[k]], chosen[j]);
          list.push_back(next);
        }
      }
    }
    if (list.size() != da.size()) return false;  // gens did not generate (impossible)
    std::vector<bool> hit(db.size(), false);
    for (detail::EIdx x = 0; x < da.size(); ++x) {
      if (hit[image[x]]) return false;
      hit[image[x]] = true;
    }
    for (detail::EIdx x = 0; x < da.size(); ++x)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (image[da.mul(x, gens[j])] != db.mul(image[x], chosen[j])) return false;
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == gens.size()) return full_check();
    for (detail::EIdx cand = 0; cand < db.size(); ++cand) {
      if (db.element_order(cand) != da.element_order(gens[k])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (db.element_order(db.mul(chosen[i], cand)) !=
            da.element_order(da.mul(gens[i], gens[k])))
          ok = false;
        else if (db.element_order(db.mul(cand, chosen[i])) !=
                 da.element_order(da.mul(gens[k], gens[i])))
          ok = false;
      }
      if (!ok) continue;
      chosen[k] = cand;
      if (assign(k + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

namespace {

Group extend_degree(const Group& g, unsigned degree) {
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    for (Point x = 0; x < p.degree(); ++x) images[x] = p[x];
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return make_group_unchecked(degree, std::move(gens), g.config());
}

/// Abelian of order 36 with no element of order 4 or 9, i.e. C3^2 x C2^2.
bool e9xe4_profile(const Subgroup& s) {
  if (s.order() != 36) return false;
  Group g = s.group();
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  for (const auto& e : g.elements()) {
    auto o = e.order();
    if (o == 4 || o == 9) return false;
  }
  return true;
}

bool elementary_abelian_profile(const Subgroup& s, std::uint64_t p) {
  for (const auto& e : s.group().elements()) {
    auto o = e.order();
    if (o != 1 && o != p) return false;
  }
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

}  // namespace

Example864 build_example_864() {
  const EngineConfig& cfg = EngineConfig::defaults();
  Group base = direct_product(
      {symmetric_group(3, cfg), symmetric_group(3, cfg), alternating_group(4, cfg)});
  Group base12 = extend_degree(base, 12);

  // Candidate involutions: swap the two S3 blocks, apply an order-dividing-2
  // automorphism of A4 (conjugation by an involution or identity of S4 on
  // points 6..9), and act regularly on the two new points.
  std::vector<Permutation> t_perms;
  {
    Group s4 = symmetric_group(4, cfg);
    for (const auto& e : s4.elements())
      if (e.order() <= 2) t_perms.push_back(e);
  }
  std::vector<Permutation> candidates;
  for (const auto& t : t_perms) {
    std::vector<Point> images(12);
    for (Point x = 0; x < 3; ++x) {
      images[x] = x + 3;
      images[x + 3] = x;
    }
    for (Point x = 0; x < 4; ++x) images[6 + x] = 6 + t[x];
    images[10] = 11;
    images[11] = 10;
    candidates.push_back(Permutation::from_images(std::move(images)));
  }
  std::sort(candidates.begin(), candidates.end());

  Example864 out;
  struct Variant {
    Group group;
    std::vector<std::string> members;  // candidate cycle strings
    bool checked = false;
    bool passes = false;
    std::string diff;
  };
  std::vector<Variant> variants;
  for (const auto& z : candidates) {
    bool placed = false;
    for (auto& v : variants)
      if (v.group.contains(z)) {
        v.members.push_back(z.to_cycles());
        placed = true;
        break;
      }
    if (placed) continue;
    std::vector<Permutation> gens = base12.generators();
    gens.push_back(z);
    Variant v;
    v.group = Group::from_generators(12, std::move(gens), cfg);
    v.members.push_back(z.to_cycles());
    variants.push_back(std::move(v));
  }

  const Formation na = Formation::nilpotent_derived();
  const Formation nil = Formation::nilpotent();

  auto check_variant = [&](Variant& v) {
    auto fail = [&](const std::string& what) {
      v.diff = what;
      v.passes = false;
    };
    v.checked = true;
    v.passes = true;
    if (v.group.order() != 864) return fail("order " + std::to_string(v.group.order()) + " != 864");
    Subgroup res_na = residual(na, v.group);
    if (res_na.order() != 36) return fail("|G^NA| = " + std::to_string(res_na.order()) + " != 36");
    Subgroup fit = fitting_subgroup(v.group);
    if (!res_na.same_subgroup_as(fit)) return fail("G^NA differs from the Fitting subgroup");
    if (!e9xe4_profile(res_na)) return fail("G^NA is not C3^2 x C2^2");
    Subgroup res_n = residual(nil, v.group);
    if (res_n.order() != 108) return fail("|G^N| = " + std::to_string(res_n.order()) + " != 108");
    Subgroup der = derived_subgroup(v.group);
    if (der.order() != 216) return fail("|G'| = " + std::to_string(der.order()) + " != 216");

    Subgroup syl2 = sylow_subgroup(v.group, 2);
    if (syl2.order() != 32) return fail("|Sylow 2| != 32");
    if (!is_self_normalizing(v.group, syl2)) return fail("Sylow 2 is not self-normalizing");
    bool e16_extension = false;
    for (const auto& nsub : normal_subgroups(syl2.group())) {
      if (nsub.order() != 16 || !elementary_abelian_profile(nsub, 2)) continue;
      for (const auto& e : syl2.group().elements())
        if (e.order() == 2 && !nsub.contains(e)) {
          e16_extension = true;
          break;
        }
      if (e16_extension) break;
    }
    if (!e16_extension) return fail("Sylow 2 is not E16 extended by an involution");

    Subgroup syl3 = sylow_subgroup(v.group, 3);
    if (syl3.order() != 27) return fail("|Sylow 3| != 27");
    if (!elementary_abelian_profile(syl3, 3)) return fail("Sylow 3 is not elementary abelian");
    if (!is_f_subnormal(na, v.group, syl3).value) return fail("Sylow 3 is not NA-subnormal");
  };

  for (auto& v : variants) {
    check_variant(v);
    std::string line = "candidates {";
    for (std::size_t i = 0; i < v.members.size(); ++i)
      line += (i ? ", " : "") + v.members[i];
    line += v.passes ? "}: all facts hold" : "}: " + v.diff;
    out.fact_log.push_back(std::move(line));
    if (v.passes)
      for (const auto& m : v.members) out.passing.push_back(m);
  }

  for (const auto& z : candidates) {
    std::string zs = z.to_cycles();
    if (std::find(out.passing.begin(), out.passing.end(), zs) == out.passing.end()) continue;
    for (auto& v : variants)
      if (std::find(v.members.begin(), v.members.end(), zs) != v.members.end()) {
        std::vector<Permutation> gens = base12.generators();
        gens.push_back(z);
        out.group = Group::from_generators(12, std::move(gens), cfg);
        out.chosen = zs;
        return out;
      }
  }

  std::string diff;
  for (const auto& line : out.fact_log) diff += "\n  " + line;
  throw ConstructionError("no candidate action satisfies the order-864 fact list:" + diff);
}

const std::map<unsigned, unsigned>& group_type_counts_le_24() {
  static const std::map<unsigned, unsigned> counts = {
      {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14},
      {17, 1}, {18, 5}, {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15}};
  return counts;
}

namespace {

/// Action sending the single generator of a cyclic normal factor to its k-th
/// power under every complement generator.
ActionSpec power_action(const Group& n, const Group& h, long long k) {
  ActionSpec spec;
  spec.images.assign(h.generators().size(), {});
  for (auto& row : spec.images)
    for (const auto& g : n.generators()) row.push_back(g.power(k));
  return spec;
}

struct CorpusBuilder {
  const EngineConfig& cfg;
  std::vector<NamedGroup> out;

  void add(unsigned order, const std::string& label, Group g,
           const std::string& kind_tag) {
    if (g.order() != order)
      throw EngineError("corpus group " + label + " has order " + std::to_string(g.order()) +
                        ", expected " + std::to_string(order));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "o%03u_", order);
    out.push_back(NamedGroup{buf + label, std::move(g), {"soluble", kind_tag}});
  }
};

}  // namespace

std::vector<NamedGroup> small_group_corpus(const EngineConfig& config) {
  CorpusBuilder b{config, {}};
  const EngineConfig& cfg = b.cfg;
  auto cyc = [&](unsigned m) { return cyclic_group(m, cfg); };
  auto add = [&](unsigned order, const std::string& label, Group g) {
    b.add(order, label, std::move(g), "small");
  };

  add(1, "triv", cyc(1));
  add(2, "c2", cyc(2));
  add(3, "c3", cyc(3));
  add(4, "c4", cyc(4));
  add(4, "c2x2", elementary_abelian_group(2, 2, cfg));
  add(5, "c5", cyc(5));
  add(6, "c6", cyc(6));
  add(6, "s3", symmetric_group(3, cfg));
  add(7, "c7", cyc(7));
  add(8, "c8", cyc(8));
  add(8, "c4x2", direct_product(cyc(4), cyc(2)));
  add(8, "c2x2x2", elementary_abelian_group(2, 3, cfg));
  add(8, "d8", dihedral_group(4, cfg));
  add(8, "q8", quaternion_group(cfg));
  add(9, "c9", cyc(9));
  add(9, "c3x3", elementary_abelian_group(3, 2, cfg));
  add(10, "c10", cyc(10));
  add(10, "d10", dihedral_group(5, cfg));
  add(11, "c11", cyc(11));
  add(12, "c12", cyc(12));
  add(12, "c6x2", direct_product(cyc(6), cyc(2)));
  add(12, "d12", dihedral_group(6, cfg));
  add(12, "a4", alternating_group(4, cfg));
  add(12, "dic3", dicyclic_group(3, cfg));
  add(13, "c13", cyc(13));
  add(14, "c14", cyc(14));
  add(14, "d14", dihedral_group(7, cfg));
  add(15, "c15", cyc(15));

  // Order 16: five abelian types plus nine nonabelian ones.
  add(16, "c16", cyc(16));
  add(16, "c4x4", direct_product(cyc(4), cyc(4)));
  add(16, "c8x2", direct_product(cyc(8), cyc(2)));
  add(16, "c4x2x2", direct_product(direct_product(cyc(4), cyc(2)), cyc(2)));
  add(16, "c2e4", elementary_abelian_group(2, 4, cfg));
  add(16, "d16", dihedral_group(8, cfg));
  add(16, "q16", dicyclic_group(4, cfg));
  add(16, "sd16", semidirect_product(cyc(8), cyc(2), power_action(cyc(8), cyc(2), 3)));
  add(16, "m16", semidirect_product(cyc(8), cyc(2), power_action(cyc(8), cyc(2), 5)));
  add(16, "c4sc4", semidirect_product(cyc(4), cyc(4), power_action(cyc(4), cyc(4), -1)));
  {
    Group n = direct_product(cyc(4), cyc(2));  // generators u (order 4), v (order 2)
    const auto& u = n.generators()[0];
    const auto& v = n.generators()[1];
    ActionSpec flip;  // u -> uv, v -> v
    flip.images = {{u * v, v}};
    add(16, "c4x2s2a", semidirect_product(n, cyc(2), flip));
    ActionSpec central;  // u -> u^3, v -> u^2 v  (central product D8 o C4)
    central.images = {{u.power(3), u.power(2) * v}};
    add(16, "c4x2s2b", semidirect_product(n, cyc(2), central));
  }
  add(16, "d8x2", direct_product(dihedral_group(4, cfg), cyc(2)));
  add(16, "q8x2", direct_product(quaternion_group(cfg), cyc(2)));

  add(17, "c17", cyc(17));
  add(18, "c18", cyc(18));
  add(18, "c6x3", direct_product(cyc(6), cyc(3)));
  add(18, "d18", dihedral_group(9, cfg));
  add(18, "s3xc3", direct_product(symmetric_group(3, cfg), cyc(3)));
  {
    Group e9 = elementary_abelian_group(3, 2, cfg);
    add(18, "e9s2", semidirect_product(e9, cyc(2), inverting_action(e9, cyc(2))));
  }
  add(19, "c19", cyc(19));
  add(20, "c20", cyc(20));
  add(20, "c10x2", direct_product(cyc(10), cyc(2)));
  add(20, "d20", dihedral_group(10, cfg));
  add(20, "dic5", dicyclic_group(5, cfg));
  add(20, "f20", semidirect_product(cyc(5), cyc(4), power_action(cyc(5), cyc(4), 2)));
  add(21, "c21", cyc(21));
  add(21, "c7sc3", semidirect_product(cyc(7), cyc(3), power_action(cyc(7), cyc(3), 2)));
  add(22, "c22", cyc(22));
  add(22, "d22", dihedral_group(11, cfg));
  add(23, "c23", cyc(23));

  // Order 24: three abelian types plus twelve nonabelian ones.
  add(24, "c24", cyc(24));
  add(24, "c12x2", direct_product(cyc(12), cyc(2)));
  add(24, "c6x2x2", direct_product(direct_product(cyc(6), cyc(2)), cyc(2)));
  add(24, "c3xd8", direct_product(cyc(3), dihedral_group(4, cfg)));
  add(24, "c3xq8", direct_product(cyc(3), quaternion_group(cfg)));
  add(24, "s4", symmetric_group(4, cfg));
  add(24, "c2xa4", direct_product(cyc(2), alternating_group(4, cfg)));
  {
    Group q8 = quaternion_group(cfg);
    const auto& i = q8.generators()[0];
    const auto& j = q8.generators()[1];
    ActionSpec rotate;  // i -> j, j -> ij: the order-3 automorphism of Q8
    rotate.images = {{j, i * j}};
    add(24, "sl23", semidirect_product(q8, cyc(3), rotate));
  }
  add(24, "d24", dihedral_group(12, cfg));
  add(24, "dic6", dicyclic_group(6, cfg));
  add(24, "c3sc8", semidirect_product(cyc(3), cyc(8), power_action(cyc(3), cyc(8), -1)));
  add(24, "s3xc4", direct_product(symmetric_group(3, cfg), cyc(4)));
  add(24, "s3xc2x2", direct_product(symmetric_group(3, cfg), elementary_abelian_group(2, 2, cfg)));
  add(24, "dic3x2", direct_product(dicyclic_group(3, cfg), cyc(2)));
  {
    Group d8 = dihedral_group(4, cfg);  // generators r (order 4), s (order 2)
    ActionSpec kernel_v4;               // r inverts, s acts trivially
    kernel_v4.images = {{cyc(3).generators()[0].power(-1)}, {cyc(3).generators()[0]}};
    add(24, "c3sd8", semidirect_product(cyc(3), d8, kernel_v4));
  }
  return b.out;
}

std::vector<NamedGroup> family_corpus(const EngineConfig& config) {
  CorpusBuilder b{config, {}};
  const EngineConfig& cfg = b.cfg;
  auto cyc = [&](unsigned m) { return cyclic_group(m, cfg); };
  auto add = [&](unsigned order, const std::string& label, Group g) {
    b.add(order, label, std::move(g), "family");
  };
  auto metacyclic = [&](unsigned p, unsigned q, long long k) {
    return semidirect_product(cyc(p), cyc(q), power_action(cyc(p), cyc(q), k));
  };

  // Cyclic groups: direct representations up to degree 64, then composite
  // orders up to 200 assembled from coprime prime-power parts.
  for (unsigned m = 25; m <= 64; ++m) add(m, "c" + std::to_string(m), cyc(m));
  for (unsigned m : {105u, 120u, 144u, 150u, 168u, 180u, 200u}) {
    std::vector<Group> parts;
    unsigned rest = m;
    for (unsigned p = 2; p <= rest; ++p) {
      if (rest % p != 0) continue;
      unsigned q = 1;
      while (rest % p == 0) {
        q *= p;
        rest /= p;
      }
      parts.push_back(cyc(q));
    }
    add(m, "c" + std::to_string(m), direct_product(parts));
  }

  // Dihedral and dicyclic series.
  for (unsigned n = 13; n <= 64; ++n)
    add(2 * n, "d" + std::to_string(2 * n), dihedral_group(n, cfg));
  for (unsigned n = 7; n <= 49; n += 2)
    add(4 * n, "dic" + std::to_string(n), dicyclic_group(n, cfg));
  for (unsigned n : {8u, 10u, 12u, 14u, 16u})
    add(4 * n, "dic" + std::to_string(n), dicyclic_group(n, cfg));

  // Metacyclic groups C_p x| C_q with faithful or near-faithful actions.
  add(39, "c13sc3", metacyclic(13, 3, 3));
  add(40, "c5sc8", metacyclic(5, 8, 2));
  add(52, "c13sc4", metacyclic(13, 4, 5));
  add(55, "c11sc5", metacyclic(11, 5, 3));
  add(57, "c19sc3", metacyclic(19, 3, 7));
  add(63, "c7sc9", metacyclic(7, 9, 2));
  add(68, "c17sc4", metacyclic(17, 4, 4));
  add(78, "c13sc6", metacyclic(13, 6, 4));
  add(93, "c31sc3", metacyclic(31, 3, 5));
  add(100, "c25sc4", metacyclic(25, 4, 7));
  add(110, "c11sc10", metacyclic(11, 10, 2));
  add(111, "c37sc3", metacyclic(37, 3, 10));
  add(116, "c29sc4", metacyclic(29, 4, 12));
  add(129, "c43sc3", metacyclic(43, 3, 6));
  add(136, "c17sc8", metacyclic(17, 8, 2));
  add(147, "c49sc3", metacyclic(49, 3, 18));
  add(148, "c37sc4", metacyclic(37, 4, 6));
  add(155, "c31sc5", metacyclic(31, 5, 2));
  add(156, "c13sc12", metacyclic(13, 12, 2));
  add(164, "c41sc4", metacyclic(41, 4, 9));
  add(171, "c19sc9", metacyclic(19, 9, 4));
  add(183, "c61sc3", metacyclic(61, 3, 13));

  // Elementary-abelian-by-cyclic groups (Frobenius-type actions).
  {
    Group e9 = elementary_abelian_group(3, 2, cfg);
    const auto& a = e9.generators()[0];
    const auto& c = e9.generators()[1];
    ActionSpec quarter;  // a -> c, c -> a^-1: an order-4 linear map
    quarter.images = {{c, a.power(-1)}};
    add(36, "e9sc4", semidirect_product(e9, cyc(4), quarter));
    ActionSpec octic;  // a -> c, c -> a c: order 8 in GL(2,3)
    octic.images = {{c, a * c}};
    add(72, "e9sc8", semidirect_product(e9, cyc(8), octic));
  }
  {
    Group e25 = elementary_abelian_group(5, 2, cfg);
    add(50, "e25s2", semidirect_product(e25, cyc(2), inverting_action(e25, cyc(2))));
    const auto& a = e25.generators()[0];
    const auto& c = e25.generators()[1];
    ActionSpec quarter;
    quarter.images = {{c, a.power(-1)}};
    add(100, "e25sc4", semidirect_product(e25, cyc(4), quarter));
  }
  {
    Group e27 = elementary_abelian_group(3, 3, cfg);
    add(54, "e27s2", semidirect_product(e27, cyc(2), inverting_action(e27, cyc(2))));
  }
  {
    Group e8 = elementary_abelian_group(2, 3, cfg);
    const auto& x = e8.generators()[0];
    const auto& y = e8.generators()[1];
    const auto& z = e8.generators()[2];
    ActionSpec singer;  // companion map of t^3 + t + 1 over F2: order 7
    singer.images = {{y, z, x * y}};
    add(56, "e8sc7", semidirect_product(e8, cyc(7), singer));
  }
  {
    Group e16 = elementary_abelian_group(2, 4, cfg);
    const auto& g = e16.generators();
    ActionSpec fifth;  // cube of the F16 Singer map: order 5
    fifth.images = {{g[3], g[0] * g[1], g[1] * g[2], g[2] * g[3]}};
    add(80, "e16sc5", semidirect_product(e16, cyc(5), fifth));
  }
  {
    Group e49 = elementary_abelian_group(7, 2, cfg);
    ActionSpec scalar = power_action(e49, cyc(3), 2);  // scalar 2, order 3 mod 7
    add(147, "e49sc3", semidirect_product(e49, cyc(3), scalar));
  }

  // A few 2-groups beyond the dihedral/dicyclic series.
  add(32, "c2e32", elementary_abelian_group(2, 5, cfg));
  add(32, "d16x2", direct_product(dihedral_group(8, cfg), cyc(2)));
  add(32, "q16x2", direct_product(dicyclic_group(4, cfg), cyc(2)));
  add(32, "sd32", semidirect_product(cyc(16), cyc(2), power_action(cyc(16), cyc(2), 7)));
  add(32, "m32", semidirect_product(cyc(16), cyc(2), power_action(cyc(16), cyc(2), 9)));

  // Direct products of small soluble pieces.
  Group s3 = symmetric_group(3, cfg);
  Group s4 = symmetric_group(4, cfg);
  Group a4 = alternating_group(4, cfg);
  add(30, "s3xc5", direct_product(s3, cyc(5)));
  add(36, "s3xs3", direct_product(s3, s3));
  add(36, "a4xc3", direct_product(a4, cyc(3)));
  add(42, "s3xc7", direct_product(s3, cyc(7)));
  add(48, "s4xc2", direct_product(s4, cyc(2)));
  add(48, "q8xs3", direct_product(quaternion_group(cfg), s3));
  add(60, "a4xc5", direct_product(a4, cyc(5)));
  add(72, "s3xa4", direct_product(s3, a4));
  add(72, "s4xc3", direct_product(s4, cyc(3)));
  add(72, "q8xc9", direct_product(quaternion_group(cfg), cyc(9)));
  add(144, "a4xa4", direct_product(a4, a4));
  add(180, "s3xs3xc5", direct_product(direct_product(s3, s3), cyc(5)));
  add(192, "s4xc8", direct_product(s4, cyc(8)));

  std::sort(b.out.begin(), b.out.end(),
            [](const NamedGroup& x, const NamedGroup& y) { return x.name < y.name; });
  return b.out;
}

std::vector<NamedGroup> full_corpus(const EngineConfig& config) {
  std::vector<NamedGroup> out = small_group_corpus(config);
  std::vector<NamedGroup> family = family_corpus(config);
  out.insert(out.end(), std::make_move_iterator(family.begin()),
             std::make_move_iterator(family.end()));
  std::sort(out.begin(), out.end(),
            [](const NamedGroup& x, const NamedGroup& y) { return x.name < y.name; });
  return out;
}

}  // namespace permforms
