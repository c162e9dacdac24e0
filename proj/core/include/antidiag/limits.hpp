#pragma once

#include <cstddef>

namespace antidiag {

/// Size caps shared by construction, validation and the verification oracles.
struct Limits {
  std::size_t order_cap = 20000;
  /// Associativity is checked on every triple up to this order, sampled above.
  std::size_t full_associativity_cap = 512;
  std::size_t associativity_samples = 100000;
  std::size_t commuting_pair_cap = 4096;
  std::size_t full_table_cap = 2048;
  std::size_t numeric_oracle_cap = 512;
  /// Class constants are recomputed from a second representative up to this order.
  std::size_t class_constant_recheck_cap = 512;
  unsigned long long prime_search_bound = 1ULL << 31;
};

}  // namespace antidiag
