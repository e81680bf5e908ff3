#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kingdom/vertex_set.hpp"

namespace kingdom {

enum class Family { King, Wazir };
enum class Boundary { Free, Cyclic };

/// Boundary presets for two-dimensional boards, as used in board strings and tables.
enum class BoundaryMode { Free, CylX, CylY, Torus };

/// A board cell; coordinates are 1-based, axis 1 runs rightward and axis 2 downward.
struct Vertex {
  std::vector<int> coords;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Graph family, side lengths and per-axis boundary. Validated on construction.
class BoardSpec {
 public:
  /// Throws std::invalid_argument if the combination is not a valid board.
  BoardSpec(Family family, std::vector<int> dims, std::vector<Boundary> boundary);

  /// All-free board.
  BoardSpec(Family family, std::vector<int> dims);

  Family family() const noexcept { return family_; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<Boundary>& boundary() const noexcept { return boundary_; }
  std::size_t dimension() const noexcept { return dims_.size(); }

  bool all_free() const noexcept;
  bool empty() const noexcept;

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;

 private:
  Family family_;
  std::vector<int> dims_;
  std::vector<Boundary> boundary_;
};

/// Two-dimensional board with a boundary preset.
BoardSpec make_board(Family family, int m, int n, BoundaryMode mode);

/// Parses `<family>:<n1>x<n2>[x<n3>...][:<boundary>]`, boundary one of
/// free, cyl-x, cyl-y, torus. Throws ParseError.
BoardSpec parse_board(std::string_view text);

/// Inverse of parse_board. Throws UnsupportedError for boundary combinations
/// the grammar cannot express.
std::string to_string(const BoardSpec& spec);

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

std::size_t vertex_count(const BoardSpec& spec);

/// Canonical index: axis 1 varies fastest.
std::size_t index_of(const BoardSpec& spec, const Vertex& v);
Vertex vertex_at(const BoardSpec& spec, std::size_t index);

/// Open neighborhood of v, sorted by canonical index. Throws std::out_of_range.
std::vector<Vertex> neighbors(const BoardSpec& spec, const Vertex& v);

/// Adjacency lists by canonical index; entry v is sorted and excludes v.
std::vector<std::vector<std::uint32_t>> adjacency(const BoardSpec& spec);

/// Closed neighborhoods N[v] as bitsets. Throws GuardError when the board has
/// more than `max_vertices` cells.
std::vector<VertexSet> closed_neighborhood_masks(const BoardSpec& spec,
                                                 std::size_t max_vertices = 28);

bool is_dominating(const BoardSpec& spec, const VertexSet& s);

/// Same test with precomputed adjacency lists.
bool is_dominating(const std::vector<std::vector<std::uint32_t>>& adj, const VertexSet& s);

}  // namespace kingdom
