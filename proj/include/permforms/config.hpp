#ifndef PERMFORMS_CONFIG_HPP_
#define PERMFORMS_CONFIG_HPP_

#include <cstdint>

namespace permforms {

/// Engine-wide caps and the seed for randomized sifting.
///
/// All bounds are desk-scale defaults and can be raised per call site.
/// Results never depend on `seed`; it only fixes the internal order in
/// which the membership chain is assembled, so runs are reproducible.
struct EngineConfig {
  std::uint32_t seed = 0x5eedbeef;
  unsigned degree_cap = 64;          // guard on externally supplied groups
  std::uint64_t order_cap = 1000000; // membership structure refuses above this
  std::uint64_t dense_cap = 10000;   // full element enumeration allowed below
  std::uint64_t lattice_cap = 2048;  // subgroup lattice allowed below
  std::uint64_t table_cap = 2048;    // dense multiplication table below this
  std::uint64_t chain_cap = 1000000; // default cap for maximal-chain listings

  static const EngineConfig& defaults();
};

}  // namespace permforms

#endif  // PERMFORMS_CONFIG_HPP_
