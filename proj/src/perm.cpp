#include "permforms/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permforms/errors.hpp"

namespace permforms {

Permutation Permutation::identity(unsigned degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw InputError("permutation image table is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw InputError("degree mismatch in composition");
  std::vector<Point> images(images_.size());
  for (Point x = 0; x < images_.size(); ++x) images[x] = other.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(images_.size());
  for (Point x = 0; x < images_.size(); ++x) images[images_[x]] = x;
  return Permutation(std::move(images));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  if (degree() != g.degree()) throw InputError("degree mismatch in conjugation");
  std::vector<Point> images(images_.size());
  for (Point x = 0; x < images_.size(); ++x) images[g.images_[x]] = g.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::power(long long e) const {
  Permutation result = identity(degree());
  Permutation base = e >= 0 ? *this : inverse();
  unsigned long long n = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  while (n > 0) {
    if (n & 1ull) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point x = start;
    do {
      seen[x] = true;
      x = images_[x];
      ++len;
    } while (x != start);
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);

  auto fail = [&](std::size_t pos, const std::string& msg) {
    std::ostringstream os;
    os << "cycle parse error at offset " << pos << ": " << msg;
    throw InputError(os.str());
  };

  std::size_t i = 0;
  bool saw_cycle = false;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n') { ++i; continue; }
    if (c != '(') fail(i, "expected '('");
    std::size_t open = i++;
    std::vector<Point> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
      if (i >= text.size()) fail(open, "unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(i, "expected point or ')'");
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1000000) fail(start, "point out of range");
        ++i;
      }
      if (v >= degree) fail(start, "point " + std::to_string(v) + " exceeds degree " + std::to_string(degree));
      cycle.push_back(static_cast<Point>(v));
    }
    saw_cycle = true;
    if (cycle.size() >= 2) {
      // Apply the cycle on top of what we have (cycles are composed left to right).
      std::vector<Point> step(degree);
      std::iota(step.begin(), step.end(), 0u);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        Point from = cycle[k], to = cycle[(k + 1) % cycle.size()];
        step[from] = to;
      }
      // Check distinctness inside the cycle.
      std::vector<Point> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(open, "repeated point inside cycle");
      for (Point x = 0; x < degree; ++x) images[x] = step[images[x]];
    }
  }
  if (!saw_cycle && !text.empty()) {
    // Whitespace only: accept as identity.
  }
  return from_images(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) { seen[start] = true; continue; }
    os << '(';
    Point x = start;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << x;
      seen[x] = true;
      x = images_[x];
      first = false;
    } while (x != start);
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permforms
