#ifndef PERMFORMS_ERRORS_HPP_
#define PERMFORMS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace permforms {

/// Malformed or inconsistent input (bad permutation, H not in G, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured cap (degree, order, lattice size, chain count) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A fact-driven construction found no candidate satisfying its fact list.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency violation (engine bug or non-formation predicate).
class EngineError : public std::logic_error {
 public:
  explicit EngineError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace permforms

#endif  // PERMFORMS_ERRORS_HPP_
