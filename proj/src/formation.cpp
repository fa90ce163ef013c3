#include "permforms/formation.hpp"

#include <atomic>

#include "context.hpp"
#include "permforms/errors.hpp"
#include "permforms/perm_ops.hpp"

namespace permforms {

using detail::ElementSet;
using detail::GroupContext;

struct Formation::Impl {
  std::string name;
  std::string key;
  FormationFlags flags;
  Kind kind = Kind::kCustom;
  std::shared_ptr<const Formation> left, right;  // product operands
  std::function<bool(const Group&)> member;      // custom predicate
};

namespace {

std::atomic<int> g_custom_serial{0};

}  // namespace

Formation::Formation(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Formation Formation::make_builtin(const std::string& name, Kind kind, FormationFlags flags) {
  auto impl = std::make_shared<Impl>();
  impl->name = name;
  impl->key = name;
  impl->kind = kind;
  impl->flags = flags;
  return Formation(std::move(impl));
}

Formation Formation::abelian() {
  return make_builtin("A", Kind::kAbelian,
                      FormationFlags{.subgroup_closed = true,
                                     .saturated = false,
                                     .superradical = false,
                                     .contains_nilpotent = false});
}

Formation Formation::nilpotent() {
  return make_builtin("N", Kind::kNilpotent,
                      FormationFlags{.subgroup_closed = true,
                                     .saturated = true,
                                     .superradical = true,
                                     .contains_nilpotent = true});
}

Formation Formation::supersoluble() {
  return make_builtin("U", Kind::kSupersoluble,
                      FormationFlags{.subgroup_closed = true,
                                     .saturated = true,
                                     .superradical = false,
                                     .contains_nilpotent = true});
}

Formation Formation::nilpotent_derived() {
  // Not superradical: in S4, both A4 and the Sylow 2-subgroup D8 have
  // nilpotent derived subgroups and are NA-subnormal, yet their product S4
  // has derived subgroup A4.
  return make_builtin("NA", Kind::kNilpotentDerived,
                      FormationFlags{.subgroup_closed = true,
                                     .saturated = true,
                                     .superradical = false,
                                     .contains_nilpotent = true});
}

Formation Formation::soluble() {
  return make_builtin("S", Kind::kSoluble,
                      FormationFlags{.subgroup_closed = true,
                                     .saturated = true,
                                     .superradical = true,
                                     .contains_nilpotent = true});
}

Formation Formation::by_name(const std::string& name) {
  auto star = name.find('*');
  if (star != std::string::npos) {
    Formation x = by_name(name.substr(0, star));
    Formation f = by_name(name.substr(star + 1));
    return product_formation(x, f);
  }
  if (name == "A") return abelian();
  if (name == "N") return nilpotent();
  if (name == "U") return supersoluble();
  if (name == "NA") return nilpotent_derived();
  if (name == "S") return soluble();
  throw InputError("unknown formation name: " + name +
                   " (expected A, N, U, NA, S, or a product such as N*A)");
}

Formation Formation::custom(std::string name, std::function<bool(const Group&)> member,
                            FormationFlags flags) {
  auto impl = std::make_shared<Impl>();
  impl->key = "custom:" + std::to_string(g_custom_serial++) + ":" + name;
  impl->name = std::move(name);
  impl->kind = Kind::kCustom;
  impl->flags = flags;
  impl->member = std::move(member);
  return Formation(std::move(impl));
}

Formation Formation::with_flags(FormationFlags flags) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->flags = flags;
  return Formation(std::move(impl));
}

const std::string& Formation::name() const { return impl_->name; }
const FormationFlags& Formation::flags() const { return impl_->flags; }
Formation::Kind Formation::kind() const { return impl_->kind; }
const std::string& Formation::key() const { return impl_->key; }
const Formation& Formation::product_left() const { return *impl_->left; }
const Formation& Formation::product_right() const { return *impl_->right; }
const std::function<bool(const Group&)>& Formation::custom_member() const {
  return impl_->member;
}

Formation product_formation(const Formation& x, const Formation& f) {
  if (!x.flags().subgroup_closed || !f.flags().subgroup_closed)
    throw InputError("product formation requires subgroup-closed operands");
  auto impl = std::make_shared<Formation::Impl>();
  impl->name = x.name() + "*" + f.name();
  impl->key = "(" + x.key() + "*" + f.key() + ")";
  impl->kind = Formation::Kind::kProduct;
  impl->left = std::make_shared<Formation>(x);
  impl->right = std::make_shared<Formation>(f);
  impl->flags.subgroup_closed = true;
  return Formation(std::move(impl));
}

bool belongs(const Formation& f, const Group& g) {
  switch (f.kind()) {
    case Formation::Kind::kAbelian: {
      const auto& gens = g.generators();
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
          if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
      return true;
    }
    case Formation::Kind::kNilpotent:
      return is_nilpotent_group(g);
    case Formation::Kind::kSoluble:
      return is_soluble(g);
    case Formation::Kind::kNilpotentDerived:
      return is_nilpotent_group(derived_subgroup(g).group());
    case Formation::Kind::kSupersoluble:
    case Formation::Kind::kProduct: {
      auto ctx = GroupContext::get(g);
      std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
      return ctx->set_in(f, ctx->dense().whole_set());
    }
    case Formation::Kind::kCustom:
      return f.custom_member()(g);
  }
  throw EngineError("unhandled formation kind");
}

Subgroup residual(const Formation& f, const Group& g) {
  if (!f.flags().subgroup_closed)
    throw InputError("residual computation requires a subgroup-closed formation");
  auto ctx = GroupContext::get(g);
  std::lock_guard<std::recursive_mutex> lock(ctx->mutex());
  return ctx->to_subgroup(ctx->residual_of(f, ctx->dense().whole_set()));
}

std::vector<std::uint64_t> formation_pi(const Formation& f, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    bool prime = p >= 2;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    std::vector<Point> images(p);
    for (std::uint64_t i = 0; i < p; ++i) images[i] = static_cast<Point>((i + 1) % p);
    Group cp = make_group_unchecked(static_cast<unsigned>(p),
                                    {Permutation::from_images(std::move(images))},
                                    EngineConfig::defaults());
    if (belongs(f, cp)) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> pi_of_group(const Group& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t n = g.order();
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace permforms
