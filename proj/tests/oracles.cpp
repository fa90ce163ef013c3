#include "oracles.hpp"

#include <queue>

namespace permforms::testing {

std::set<std::vector<Point>> oracle_closure(unsigned degree,
                                            const std::vector<Permutation>& gens) {
  std::vector<Point> id(degree);
  for (Point i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<Point>> seen{id};
  std::queue<std::vector<Point>> todo;
  todo.push(id);
  while (!todo.empty()) {
    std::vector<Point> cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      std::vector<Point> next(degree);
      for (Point x = 0; x < degree; ++x) next[x] = g[cur[x]];
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

std::uint64_t oracle_order(const Group& g) {
  return oracle_closure(g.degree(), g.generators()).size();
}

namespace {

std::set<std::vector<Point>> element_tables(const Group& g) {
  std::set<std::vector<Point>> out;
  for (const auto& e : g.elements()) out.insert(e.images());
  return out;
}

}  // namespace

std::uint64_t oracle_normalizer_order(const Group& g, const Subgroup& h) {
  auto h_set = element_tables(h.group());
  std::uint64_t count = 0;
  for (const auto& e : g.elements()) {
    bool normalizes = true;
    for (const auto& x : h.generators())
      if (!h_set.count(x.conjugated_by(e).images())) {
        normalizes = false;
        break;
      }
    if (normalizes) ++count;
  }
  return count;
}

std::set<std::vector<Point>> oracle_core_elements(const Group& g, const Subgroup& h) {
  auto meet = element_tables(h.group());
  for (const auto& e : g.elements()) {
    std::set<std::vector<Point>> conj;
    for (const auto& x : h.group().elements()) conj.insert(x.conjugated_by(e).images());
    std::set<std::vector<Point>> next;
    for (const auto& t : meet)
      if (conj.count(t)) next.insert(t);
    meet = std::move(next);
  }
  return meet;
}

std::uint64_t oracle_derived_order(const Group& g) {
  std::vector<Permutation> comms;
  auto elems = g.elements();
  for (const auto& a : elems)
    for (const auto& b : elems)
      comms.push_back(a.inverse() * b.inverse() * a * b);
  return oracle_closure(g.degree(), comms).size();
}

std::vector<std::set<std::vector<Point>>> oracle_all_subgroups(const Group& g) {
  auto elems = g.elements();
  const unsigned degree = g.degree();
  auto closure_of = [&](std::vector<Permutation> seeds) {
    return oracle_closure(degree, seeds);
  };
  std::set<std::set<std::vector<Point>>> all;
  std::vector<std::set<std::vector<Point>>> list;
  std::vector<std::vector<Permutation>> cyclic_gens;
  auto add = [&](std::set<std::vector<Point>> s) {
    if (all.insert(s).second) list.push_back(std::move(s));
  };
  add(closure_of({}));
  std::set<std::set<std::vector<Point>>> cyclics;
  for (const auto& e : elems) {
    auto c = closure_of({e});
    if (cyclics.insert(c).second) cyclic_gens.push_back({e});
    add(c);
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    auto current = list[k];
    for (const auto& cg : cyclic_gens) {
      if (current.count(cg.front().images())) continue;
      std::vector<Permutation> seeds = cg;
      for (const auto& t : current) seeds.push_back(Permutation::from_images(
          std::vector<Point>(t.begin(), t.end())));
      add(closure_of(seeds));
    }
  }
  return list;
}

bool oracle_f_subnormal(const Formation& f, const Group& g, const Subgroup& h,
                        std::uint64_t chain_cap) {
  if (h.order() == g.order()) return true;
  auto chains = all_maximal_chains(g, h, chain_cap);
  for (const auto& chain : chains) {
    bool good = true;
    for (std::size_t i = 1; i < chain.links.size() && good; ++i) {
      Subgroup res = residual(f, chain.links[i].group());
      for (const auto& p : res.generators())
        if (!chain.links[i - 1].contains(p)) {
          good = false;
          break;
        }
    }
    if (good) return true;
  }
  return false;
}

}  // namespace permforms::testing
