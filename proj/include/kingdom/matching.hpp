#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kingdom/board.hpp"
#include "kingdom/poly.hpp"
#include "kingdom/vertex_set.hpp"

namespace kingdom {

/// One 2x...x2 block, truncated at odd far edges.
struct Block {
  Vertex corner;                    // all coordinates odd
  std::size_t corner_index = 0;     // canonical index of the corner
  std::vector<std::size_t> others;  // canonical indices of the non-corner cells
};

/// Blocks in scan order: lexicographic on corner coordinates, axis 1 fastest.
struct BlockDecomposition {
  std::vector<Block> blocks;
};

struct MatchOutcome {
  enum class Kind { Partner, FixedPoint };
  Kind kind = Kind::FixedPoint;
  std::optional<Vertex> flipped;
  std::optional<VertexSet> partner;
};

/// Throws UnsupportedError unless the board is a king board with free boundaries.
BlockDecomposition decompose(const BoardSpec& spec);

/// The set of all block corners.
VertexSet fixed_point(const BoardSpec& spec);

/// Flip-the-first-active-corner map on dominating sets, with the decomposition
/// and adjacency precomputed for repeated use.
class Matcher {
 public:
  explicit Matcher(const BoardSpec& spec);

  const BoardSpec& spec() const noexcept { return spec_; }
  const BlockDecomposition& blocks() const noexcept { return decomposition_; }
  const VertexSet& fixed_point() const noexcept { return fixed_point_; }

  bool is_dominating(const VertexSet& s) const;

  /// Throws std::invalid_argument when s is not dominating, and std::logic_error
  /// if a block before the first active one lacks its corner.
  MatchOutcome partner(const VertexSet& s) const;

  /// Index of the toggled corner, or nullopt at the fixed point. No validation.
  std::optional<std::size_t> flip_index(const VertexSet& s) const;

 private:
  BoardSpec spec_;
  BlockDecomposition decomposition_;
  VertexSet fixed_point_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// One-shot form of Matcher::partner.
MatchOutcome partner(const BoardSpec& spec, const VertexSet& s);

/// Outcome of checking the matching against every dominating set.
struct TheoremReport {
  std::string board;
  std::size_t dominating_sets = 0;
  std::size_t pairs = 0;
  std::size_t fixed_points = 0;
  std::size_t corner_count = 0;  // |T|
  BigInt signed_count = 0;       // sum of (-1)^|S|
  int predicted = 0;             // (-1)^|T|
  bool involution = true;
  bool parity_flip = true;
  bool closure = true;
  bool unique_fixed_point = true;
  bool signed_sum = true;
  std::vector<std::string> violations;

  bool passed() const {
    return involution && parity_flip && closure && unique_fixed_point && signed_sum && violations.empty();
  }
};

struct VerifyOptions {
  bool force = false;  // lift the oracle vertex limit
};

/// Exhaustive check over all dominating sets. Throws GuardError past the oracle limit.
TheoremReport verify_theorem(const BoardSpec& spec, const VerifyOptions& opts = {});

/// Outcome of the randomized check.
struct SampleReport {
  std::string board;
  std::size_t trials = 0;
  std::size_t partner_samples = 0;
  std::size_t fixed_point_samples = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

struct SampleOptions {
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  /// Feed T itself as the first sample.
  bool include_fixed_point = false;
};

/// Alternates uniform dominating sets (density 1/2, rejection sampled) with T plus
/// 1 to 4 random extra cells, and checks closure, parity flip and involution on each.
SampleReport sampled_check(const BoardSpec& spec, const SampleOptions& opts);

std::string to_json(const TheoremReport& report);
std::string to_json(const SampleReport& report);

}  // namespace kingdom
