#include "permforms/group.hpp"

#include <queue>
#include <unordered_set>

#include "permforms/errors.hpp"
#include "stabchain.hpp"

namespace permforms {

const EngineConfig& EngineConfig::defaults() {
  static const EngineConfig config;
  return config;
}

namespace detail {

class GroupImpl {
 public:
  GroupImpl(unsigned degree, std::vector<Permutation> generators, const EngineConfig& config)
      : degree_(degree), generators_(std::move(generators)), config_(config),
        chain_(degree, generators_, config) {}

  unsigned degree_;
  std::vector<Permutation> generators_;
  EngineConfig config_;
  StabChain chain_;
};

}  // namespace detail

Group Group::from_generators(unsigned degree, std::vector<Permutation> generators,
                             const EngineConfig& config) {
  if (degree > config.degree_cap)
    throw ResourceError("degree " + std::to_string(degree) + " exceeds configured cap " +
                        std::to_string(config.degree_cap));
  return make_group_unchecked(degree, std::move(generators), config);
}

Group make_group_unchecked(unsigned degree, std::vector<Permutation> generators,
                           const EngineConfig& config) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  Group g;
  g.impl_ = std::make_shared<detail::GroupImpl>(degree, std::move(generators), config);
  return g;
}

Group Group::trivial(unsigned degree, const EngineConfig& config) {
  return make_group_unchecked(degree, {}, config);
}

unsigned Group::degree() const { return impl_->degree_; }
std::uint64_t Group::order() const { return impl_->chain_.order(); }
const std::vector<Permutation>& Group::generators() const { return impl_->generators_; }
const EngineConfig& Group::config() const { return impl_->config_; }
Permutation Group::identity() const { return Permutation::identity(degree()); }

bool Group::contains(const Permutation& g) const {
  if (g.degree() != degree()) throw InputError("degree mismatch in membership test");
  return impl_->chain_.contains(g);
}

bool Group::same_group_as(const Group& other) const {
  if (degree() != other.degree() || order() != other.order()) return false;
  for (const auto& g : generators())
    if (!other.contains(g)) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

Permutation Group::coset_representative(const Permutation& g) const {
  return impl_->chain_.canonical_coset_rep(g);
}

std::vector<Permutation> Group::elements(std::uint64_t cap) const {
  if (cap == 0) cap = config().dense_cap;
  if (order() > cap)
    throw ResourceError("element enumeration refused: order " + std::to_string(order()) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> elements;
  std::unordered_set<Permutation, PermHash> seen;
  elements.push_back(identity());
  seen.insert(elements.front());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : generators()) {
      Permutation next = elements[k] * s;
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

Subgroup::Subgroup(Group parent, std::vector<Permutation> generators) : parent_(parent) {
  for (const auto& g : generators)
    if (!parent.contains(g))
      throw InputError("subgroup generator is not a member of the parent group");
  group_ = make_group_unchecked(parent.degree(), std::move(generators), parent.config());
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Subgroup::same_subgroup_as(const Subgroup& other) const {
  return order() == other.order() && contains_subgroup(other);
}

}  // namespace permforms
