#ifndef PERMFORMS_PERM_HPP_
#define PERMFORMS_PERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace permforms {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image table.
///
/// Permutations act on the right: x^(p*q) = (x^p)^q, matching the usual
/// computational-group-theory convention. The image table is validated to
/// be a bijection on construction.
class Permutation {
 public:
  Permutation() = default;

  /// Identity permutation of the given degree.
  static Permutation identity(unsigned degree);

  /// From an image table; throws InputError if not a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Parse disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".
  /// "()" denotes the identity. Points may be separated by spaces or commas.
  /// Throws InputError with the character offset of the offending token.
  static Permutation parse_cycles(const std::string& text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point apply(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  /// this followed by other.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  /// g^-1 * this * g.
  Permutation conjugated_by(const Permutation& g) const;
  Permutation power(long long e) const;

  /// Multiplicative order.
  std::uint64_t order() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator!=(const Permutation& other) const { return images_ != other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

  /// Disjoint-cycle rendering, smallest moved point first; "()" for identity.
  std::string to_cycles() const;

  std::size_t hash() const;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace permforms

#endif  // PERMFORMS_PERM_HPP_
