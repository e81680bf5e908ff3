#pragma once

#include <cstddef>
#include <vector>

#include "kingdom/board.hpp"
#include "kingdom/poly.hpp"

namespace kingdom {

/// Frontier height (shorter side) limit of the column sweep.
inline constexpr std::size_t kMaxFrontierHeight = 16;
/// Sweep length (longer side) limit.
inline constexpr std::size_t kMaxSweepLength = 64;

struct TransferOptions {
  /// Workers per layer; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Drop states with an undominated finished cell as soon as it finishes.
  /// With pruning off such states are carried with a dead flag to the end.
  bool prune = true;
};

struct TransferStats {
  std::size_t frontier_height = 0;
  std::size_t sweep_length = 0;
  /// Largest number of cells carried in a state (frontier plus seed column).
  std::size_t max_active = 0;
  /// Largest state table after any step.
  std::size_t max_states = 0;
};

/// True when the board is two-dimensional and within the frontier and sweep guards.
bool transfer_supported(const BoardSpec& spec);

/// Exact domination polynomial of a 2-d king or wazir board under any boundary.
/// Throws UnsupportedError for d != 2 and GuardError past the size guards.
DominationPolynomial transfer_polynomial(const BoardSpec& spec, const TransferOptions& opts = {},
                                         TransferStats* stats = nullptr);

/// P(z) with scalar weights; cheaper than building the polynomial.
BigInt transfer_eval(const BoardSpec& spec, long z, const TransferOptions& opts = {},
                     TransferStats* stats = nullptr);

/// Inclusive integer range, written `a..b` on the command line.
struct Range {
  int first = 0;
  int last = 0;
};

/// Matrix of values with m on columns and n on rows.
struct ValueTable {
  std::vector<int> ms;
  std::vector<int> ns;
  std::vector<std::vector<BigInt>> cells;  // cells[row][col] = value at (m = ms[col], n = ns[row])
  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

/// transfer_eval over every m x n board in the ranges.
ValueTable table_scan(Family family, BoundaryMode mode, Range m, Range n, long z,
                      const TransferOptions& opts = {});

}  // namespace kingdom
