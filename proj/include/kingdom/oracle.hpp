#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "kingdom/board.hpp"
#include "kingdom/poly.hpp"
#include "kingdom/vertex_set.hpp"

namespace kingdom {

/// Default cap on brute-force board size.
inline constexpr std::size_t kDefaultOracleVertexLimit = 28;

/// Absolute cap; subsets are enumerated as 64-bit masks.
inline constexpr std::size_t kOracleHardLimit = 62;

/// kDefaultOracleVertexLimit, or KINGDOM_MAX_ORACLE_BITS when set.
std::size_t oracle_vertex_limit();

struct OracleOptions {
  /// Ignore the soft vertex limit (the hard limit still applies).
  bool force = false;
  /// Worker threads for subset ranges; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Counts dominating sets of every size by testing all 2^|V| subsets.
/// Throws GuardError above the vertex limit.
DominationPolynomial enumerate_polynomial(const BoardSpec& spec, const OracleOptions& opts = {});

/// Sum of (-1)^|S| over dominating S, without building the polynomial.
BigInt eval_signed_count(const BoardSpec& spec, const OracleOptions& opts = {});

/// Calls fn(mask) for every dominating set in increasing mask order. Bit v of the
/// mask is canonical vertex v. Single-threaded.
void for_each_dominating_mask(const BoardSpec& spec, const std::function<void(std::uint64_t)>& fn,
                              const OracleOptions& opts = {});

/// Same stream as VertexSet values.
void enumerate_dominating_sets(const BoardSpec& spec,
                               const std::function<void(const VertexSet&)>& fn,
                               const OracleOptions& opts = {});

}  // namespace kingdom
