#include <random>

#include "doctest.h"
#include "kingdom/board.hpp"
#include "kingdom/errors.hpp"

using namespace kingdom;

namespace {

std::vector<Vertex> vs(std::initializer_list<std::vector<int>> list) {
  std::vector<Vertex> out;
  for (const auto& c : list) out.push_back(Vertex{c});
  return out;
}

bool contains(const std::vector<Vertex>& list, const Vertex& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

VertexSet set_of(const BoardSpec& spec, const std::vector<Vertex>& cells) {
  VertexSet s(vertex_count(spec));
  for (const auto& v : cells) s.set(index_of(spec, v));
  return s;
}

}  // namespace

TEST_CASE("vertex_count is the product of the sides") {
  CHECK(vertex_count(BoardSpec(Family::King, {8, 8})) == 64);
  CHECK(vertex_count(BoardSpec(Family::King, {3, 0})) == 0);
  CHECK(vertex_count(BoardSpec(Family::King, {2, 3, 4})) == 24);
}

TEST_CASE("canonical index runs axis 1 fastest") {
  const BoardSpec spec(Family::King, {3, 2});
  CHECK(index_of(spec, Vertex{{1, 1}}) == 0);
  CHECK(index_of(spec, Vertex{{3, 1}}) == 2);
  CHECK(index_of(spec, Vertex{{1, 2}}) == 3);
  for (std::size_t i = 0; i < 6; ++i) CHECK(index_of(spec, vertex_at(spec, i)) == i);
  CHECK_THROWS_AS(index_of(spec, Vertex{{4, 1}}), std::out_of_range);
  CHECK_THROWS_AS(index_of(spec, Vertex{{0, 1}}), std::out_of_range);
}

TEST_CASE("neighbors") {
  SUBCASE("free king interior sees the other eight cells") {
    const BoardSpec spec(Family::King, {3, 3});
    auto n = neighbors(spec, Vertex{{2, 2}});
    CHECK(n.size() == 8);
    CHECK_FALSE(contains(n, Vertex{{2, 2}}));
  }
  SUBCASE("wazir corner") {
    const BoardSpec spec(Family::Wazir, {3, 3});
    CHECK(neighbors(spec, Vertex{{1, 1}}) == vs({{2, 1}, {1, 2}}));
  }
  SUBCASE("cylinder wraps along x") {
    const BoardSpec spec = parse_board("king:4x3:cyl-x");
    auto n = neighbors(spec, Vertex{{1, 2}});
    for (const auto& v : vs({{4, 1}, {4, 2}, {4, 3}})) CHECK(contains(n, v));
    CHECK(n.size() == 8);
  }
  SUBCASE("out of bounds") {
    const BoardSpec spec(Family::King, {3, 3});
    CHECK_THROWS_AS(neighbors(spec, Vertex{{3, 4}}), std::out_of_range);
  }
}

TEST_CASE("closed neighborhood masks") {
  auto one = closed_neighborhood_masks(BoardSpec(Family::King, {1, 1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "1");

  for (const auto& m : closed_neighborhood_masks(BoardSpec(Family::King, {2, 2}))) CHECK(m.all());
  for (const auto& m : closed_neighborhood_masks(BoardSpec(Family::Wazir, {2, 2}))) CHECK(m.count() == 3);

  CHECK_THROWS_AS(closed_neighborhood_masks(BoardSpec(Family::King, {6, 5})), GuardError);
  CHECK(closed_neighborhood_masks(BoardSpec(Family::King, {6, 5}), 30).size() == 30);
}

TEST_CASE("is_dominating") {
  const BoardSpec k3(Family::King, {3, 3});
  CHECK(is_dominating(k3, set_of(k3, vs({{2, 2}}))));
  CHECK_FALSE(is_dominating(k3, set_of(k3, vs({{1, 1}}))));

  // Nine kings on the 8x8 board.
  const BoardSpec k8(Family::King, {8, 8});
  std::vector<Vertex> nine;
  for (int x : {2, 5, 8})
    for (int y : {2, 5, 8}) nine.push_back(Vertex{{x, y}});
  CHECK(is_dominating(k8, set_of(k8, nine)));
  nine.pop_back();
  CHECK_FALSE(is_dominating(k8, set_of(k8, nine)));

  const BoardSpec empty(Family::King, {0, 4});
  CHECK(is_dominating(empty, VertexSet(0)));
}

TEST_CASE("board validation") {
  CHECK_THROWS_AS(BoardSpec(Family::King, {}), std::invalid_argument);
  CHECK_THROWS_AS(BoardSpec(Family::King, {3, 3}, {Boundary::Free}), std::invalid_argument);
  CHECK_THROWS_AS(BoardSpec(Family::King, {-1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(BoardSpec(Family::Wazir, {3, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_board(Family::King, 2, 5, BoundaryMode::CylX), std::invalid_argument);
  CHECK_NOTHROW(make_board(Family::King, 2, 5, BoundaryMode::CylY));
  CHECK_NOTHROW(BoardSpec(Family::King, {3, 0, 2}));
}

TEST_CASE("board strings") {
  const auto torus = parse_board("king:6x6:torus");
  CHECK(torus.boundary() == std::vector<Boundary>{Boundary::Cyclic, Boundary::Cyclic});
  const auto cube = parse_board("king:3x3x3");
  CHECK(cube.dims() == std::vector<int>{3, 3, 3});
  CHECK(cube.all_free());
  CHECK(parse_board("wazir:4x4").family() == Family::Wazir);
  CHECK(parse_board("king:8x8:cyl-y").boundary()[1] == Boundary::Cyclic);

  for (const char* text : {"king:8x8", "king:8x8:cyl-x", "king:6x6:torus", "king:3x3x3", "wazir:4x4",
                           "king:5x7:cyl-y", "king:3x0", "king:3x4x5:torus"})
    CHECK(to_string(parse_board(text)) == text);
  CHECK(to_string(parse_board("king:2x2:free")) == "king:2x2");

  for (const char* bad : {"", "king", "queen:8x8", "king:8x", "king:x8", "king:8x8:moebius", "king:-1x3",
                          "king:8x8:torus:", "king:2x2:torus", "wazir:2x2x2", "king:4:cyl-y"})
    CHECK_THROWS_AS(parse_board(bad), ParseError);
}

TEST_CASE("adjacency properties on random boards") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const bool wazir = rng() % 3 == 0;
    const std::size_t d = wazir ? 2 : 1 + rng() % 3;
    std::vector<int> dims;
    std::vector<Boundary> bnd;
    for (std::size_t i = 0; i < d; ++i) {
      dims.push_back(static_cast<int>(rng() % 6));
      const bool cyclic = dims.back() >= 3 && rng() % 2;
      bnd.push_back(cyclic ? Boundary::Cyclic : Boundary::Free);
    }
    const BoardSpec spec(wazir ? Family::Wazir : Family::King, dims, bnd);
    const auto adj = adjacency(spec);
    const std::size_t n = vertex_count(spec);
    for (std::size_t v = 0; v < n; ++v)
      for (auto u : adj[v]) {
        CHECK(u != v);
        CHECK(std::binary_search(adj[u].begin(), adj[u].end(), static_cast<std::uint32_t>(v)));
      }
    CHECK(is_dominating(spec, VertexSet::full(n)));
    CHECK(is_dominating(spec, VertexSet(n)) == (n == 0));
  }
}

TEST_CASE("degree bounds") {
  SUBCASE("free interior king has 3^d - 1 neighbors") {
    CHECK(neighbors(BoardSpec(Family::King, {5}), Vertex{{3}}).size() == 2);
    CHECK(neighbors(BoardSpec(Family::King, {5, 5}), Vertex{{3, 3}}).size() == 8);
    CHECK(neighbors(BoardSpec(Family::King, {5, 5, 5}), Vertex{{3, 3, 3}}).size() == 26);
    CHECK(neighbors(BoardSpec(Family::King, {3, 3, 3, 3}), Vertex{{2, 2, 2, 2}}).size() == 80);
  }
  SUBCASE("free interior wazir has 2d neighbors") {
    CHECK(neighbors(BoardSpec(Family::Wazir, {5, 5}), Vertex{{3, 3}}).size() == 4);
  }
  SUBCASE("torus king is 8-regular") {
    for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 6}, {7, 5}}) {
      const auto adj = adjacency(make_board(Family::King, m, n, BoundaryMode::Torus));
      for (const auto& list : adj) CHECK(list.size() == 8);
    }
  }
}
