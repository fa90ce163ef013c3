#ifndef PERMFORMS_FORMATION_HPP_
#define PERMFORMS_FORMATION_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "permforms/group.hpp"

namespace permforms {

/// Declared closure properties of a formation. Saturation and
/// superradicality are not decidable from a membership predicate at this
/// scale, so they are carried as asserted metadata; the verifier gates on
/// them and records them in reports.
struct FormationFlags {
  bool subgroup_closed = false;
  bool saturated = false;
  bool superradical = false;
  bool contains_nilpotent = false;
};

/// A named group-class membership predicate plus declared closure flags.
///
/// Built-ins (with their literature flags):
///   A  - abelian groups
///   N  - nilpotent groups
///   U  - supersoluble groups
///   NA - groups with nilpotent derived subgroup
///   S  - soluble groups
/// Products X*F = {G : the F-residual of G lies in X} are available for
/// subgroup-closed X and F.
class Formation {
 public:
  enum class Kind {
    kAbelian,
    kNilpotent,
    kSupersoluble,
    kNilpotentDerived,
    kSoluble,
    kProduct,
    kCustom,
  };

  Formation() = default;

  static Formation abelian();
  static Formation nilpotent();
  static Formation supersoluble();
  static Formation nilpotent_derived();
  static Formation soluble();

  /// Accepts A, N, U, NA, S, and product syntax X*F (e.g. "N*A").
  static Formation by_name(const std::string& name);

  static Formation custom(std::string name, std::function<bool(const Group&)> member,
                          FormationFlags flags);

  bool valid() const { return impl_ != nullptr; }
  const std::string& name() const;
  const FormationFlags& flags() const;
  Kind kind() const;
  /// Stable key for memo tables ("N", "NA", "N*A", "custom:3:...").
  const std::string& key() const;

  const Formation& product_left() const;   // X of X*F
  const Formation& product_right() const;  // F of X*F
  const std::function<bool(const Group&)>& custom_member() const;

  /// Copy with different declared flags (caller-asserted metadata).
  Formation with_flags(FormationFlags flags) const;

 private:
  struct Impl;
  explicit Formation(std::shared_ptr<const Impl> impl);
  static Formation make_builtin(const std::string& name, Kind kind, FormationFlags flags);
  friend Formation product_formation(const Formation& x, const Formation& f);
  std::shared_ptr<const Impl> impl_;
};

/// Membership test. A uses generator commutation, N the lower central
/// series, S the derived series, NA nilpotency of the derived subgroup,
/// U a chief series computed through minimal normal subgroups.
bool belongs(const Formation& f, const Group& g);

/// The smallest normal subgroup with quotient in f; equals the intersection
/// of all normal subgroups with quotient in f. Requires f to be flagged
/// subgroup-closed; the intersection property is re-checked and a violation
/// (possible only for ill-formed custom predicates) raises EngineError.
Subgroup residual(const Formation& f, const Group& g);

/// X*F = {G : residual(F, G) in X}; both arguments must be subgroup-closed.
Formation product_formation(const Formation& x, const Formation& f);

/// Primes p <= bound whose cyclic group of order p lies in f.
std::vector<std::uint64_t> formation_pi(const Formation& f, std::uint64_t bound);

/// Prime divisors of |g|.
std::vector<std::uint64_t> pi_of_group(const Group& g);

}  // namespace permforms

#endif  // PERMFORMS_FORMATION_HPP_
