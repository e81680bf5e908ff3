#include "doctest.h"
#include "kingdom/errors.hpp"
#include "kingdom/matching.hpp"
#include "kingdom/oracle.hpp"
#include "kingdom/transfer.hpp"

using namespace kingdom;

namespace {

VertexSet set_of(const BoardSpec& spec, std::initializer_list<std::vector<int>> cells) {
  VertexSet s(vertex_count(spec));
  for (const auto& c : cells) s.set(index_of(spec, Vertex{c}));
  return s;
}

// The 8x8 position with the white king at (3,3); x runs right, y down.
VertexSet figure_two(const BoardSpec& spec) {
  return set_of(spec, {{1, 1}, {3, 1}, {5, 1}, {7, 1}, {1, 3}, {3, 3}, {5, 3}, {8, 3}, {3, 4}, {7, 4}, {1, 5},
                       {2, 5}, {5, 5}, {7, 5}, {1, 6}, {6, 6}, {2, 7}, {5, 7}, {7, 7}, {4, 8}, {7, 8}});
}

long prod_half_ceil(const std::vector<int>& dims) {
  long p = 1;
  for (int n : dims) p *= (n + 1) / 2;
  return p;
}

}  // namespace

TEST_CASE("decompose") {
  SUBCASE("8x8 has sixteen full blocks") {
    const auto d = decompose(BoardSpec(Family::King, {8, 8}));
    CHECK(d.blocks.size() == 16);
    for (const auto& b : d.blocks) CHECK(b.others.size() == 3);
  }
  SUBCASE("3x3 truncates at the odd edges") {
    const BoardSpec spec(Family::King, {3, 3});
    const auto d = decompose(spec);
    REQUIRE(d.blocks.size() == 4);
    CHECK(d.blocks[0].corner == Vertex{{1, 1}});
    CHECK(d.blocks[0].others.size() == 3);
    CHECK(d.blocks[1].corner == Vertex{{3, 1}});
    CHECK(d.blocks[1].others == std::vector<std::size_t>{index_of(spec, Vertex{{3, 2}})});
    CHECK(d.blocks[2].corner == Vertex{{1, 3}});
    CHECK(d.blocks[2].others == std::vector<std::size_t>{index_of(spec, Vertex{{2, 3}})});
    CHECK(d.blocks[3].corner == Vertex{{3, 3}});
    CHECK(d.blocks[3].others.empty());
  }
  SUBCASE("1x1") {
    const auto d = decompose(BoardSpec(Family::King, {1, 1}));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].others.empty());
  }
  SUBCASE("partition, count and scan order on assorted shapes") {
    for (const auto& dims : std::vector<std::vector<int>>{{5}, {4, 7}, {3, 6}, {2, 3, 5}, {3, 3, 3}, {2, 1, 3, 2}, {4, 0}}) {
      const BoardSpec spec(Family::King, dims);
      const auto d = decompose(spec);
      CHECK(static_cast<long>(d.blocks.size()) == prod_half_ceil(dims));
      std::vector<int> seen(vertex_count(spec), 0);
      for (const auto& b : d.blocks) {
        ++seen[b.corner_index];
        for (auto c : b.others) ++seen[c];
      }
      for (int s : seen) CHECK(s == 1);
      // No later corner is coordinatewise below an earlier one.
      for (std::size_t i = 0; i < d.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
          bool below = true;
          for (std::size_t a = 0; a < dims.size(); ++a)
            below = below && d.blocks[j].corner.coords[a] <= d.blocks[i].corner.coords[a];
          CHECK_FALSE(below);
        }
    }
  }
  SUBCASE("refuses wrapped and wazir boards") {
    CHECK_THROWS_AS(decompose(parse_board("king:4x4:torus")), UnsupportedError);
    CHECK_THROWS_AS(decompose(parse_board("king:4x4:cyl-y")), UnsupportedError);
    CHECK_THROWS_AS(decompose(parse_board("wazir:4x4")), UnsupportedError);
  }
}

TEST_CASE("fixed point") {
  const BoardSpec k8(Family::King, {8, 8});
  const auto t = fixed_point(k8);
  CHECK(t.count() == 16);
  for (int y = 1; y <= 8; y += 2)
    for (int x = 1; x <= 8; x += 2) CHECK(t.test(index_of(k8, Vertex{{x, y}})));
  CHECK(is_dominating(k8, t));

  const BoardSpec k5(Family::King, {5, 5});
  CHECK(fixed_point(k5).count() == 9);
  CHECK(transfer_eval(k5, -1) == -1);

  const BoardSpec cube(Family::King, {3, 3, 3});
  CHECK(fixed_point(cube).count() == 8);
  CHECK(is_dominating(cube, fixed_point(cube)));
}

TEST_CASE("partner") {
  SUBCASE("T has no partner") {
    const BoardSpec k8(Family::King, {8, 8});
    const auto out = partner(k8, fixed_point(k8));
    CHECK(out.kind == MatchOutcome::Kind::FixedPoint);
    CHECK_FALSE(out.flipped.has_value());
    CHECK_FALSE(out.partner.has_value());
  }
  SUBCASE("single 2x2 block") {
    const BoardSpec k2(Family::King, {2, 2});
    const auto out = partner(k2, set_of(k2, {{1, 2}}));
    REQUIRE(out.kind == MatchOutcome::Kind::Partner);
    CHECK(*out.flipped == Vertex{{1, 1}});
    CHECK(*out.partner == set_of(k2, {{1, 1}, {1, 2}}));
  }
  SUBCASE("the white king is the flipped corner") {
    const BoardSpec k8(Family::King, {8, 8});
    const auto s = figure_two(k8);
    REQUIRE(is_dominating(k8, s));
    const auto out = partner(k8, s);
    REQUIRE(out.kind == MatchOutcome::Kind::Partner);
    CHECK(*out.flipped == Vertex{{3, 3}});
    VertexSet expected = s;
    expected.set(index_of(k8, Vertex{{3, 3}}), false);
    CHECK(*out.partner == expected);
    CHECK(is_dominating(k8, *out.partner));
    CHECK(partner(k8, *out.partner).partner == s);
  }
  SUBCASE("input validation") {
    const BoardSpec k3(Family::King, {3, 3});
    CHECK_THROWS_AS(partner(k3, set_of(k3, {{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(partner(k3, VertexSet(8)), std::invalid_argument);
    const auto torus = parse_board("king:4x4:torus");
    CHECK_THROWS_AS(partner(torus, VertexSet::full(16)), UnsupportedError);
  }
}

TEST_CASE("verify_theorem") {
  for (const char* text : {"king:3x3", "king:4x4", "king:2x3x2", "king:1x1", "king:1x7", "king:0x3"}) {
    CAPTURE(text);
    const auto spec = parse_board(text);
    const auto r = verify_theorem(spec);
    CHECK(r.passed());
    CHECK(r.fixed_points == 1);
    CHECK(r.dominating_sets == 2 * r.pairs + 1);
    CHECK(r.signed_count == eval_signed_count(spec));
    CHECK(r.signed_count == r.predicted);
  }
  const auto r33 = verify_theorem(parse_board("king:3x3"));
  CHECK(r33.signed_count == 1);
  CHECK(r33.corner_count == 4);
  CHECK(r33.dominating_sets == 417);
  CHECK(verify_theorem(parse_board("king:2x3x2")).signed_count == 1);

  CHECK_THROWS_AS(verify_theorem(parse_board("king:6x6")), GuardError);
  CHECK_THROWS_AS(verify_theorem(parse_board("king:3x3:cyl-x")), UnsupportedError);
}

TEST_CASE("sampled_check") {
  SampleOptions opts;
  opts.trials = 2000;
  opts.seed = 7;
  const auto r = sampled_check(parse_board("king:12x12"), opts);
  CHECK(r.passed());
  CHECK(r.partner_samples + r.fixed_point_samples == opts.trials);

  SampleOptions with_t;
  with_t.trials = 500;
  with_t.seed = 3;
  with_t.include_fixed_point = true;
  const auto r97 = sampled_check(parse_board("king:9x7"), with_t);
  CHECK(r97.passed());
  CHECK(r97.fixed_point_samples == 1);

  SampleOptions cube;
  cube.trials = 1000;
  cube.seed = 1;
  CHECK(sampled_check(parse_board("king:5x5x5"), cube).passed());

  // Same seed, same report.
  CHECK(to_json(sampled_check(parse_board("king:6x5"), opts)) == to_json(sampled_check(parse_board("king:6x5"), opts)));
  CHECK_THROWS_AS(sampled_check(parse_board("king:6x6:torus"), opts), UnsupportedError);
}

TEST_CASE("report JSON") {
  const auto r = verify_theorem(parse_board("king:2x2"));
  const std::string json = to_json(r);
  CHECK(json.find("\"pairs\":7") != std::string::npos);
  CHECK(json.find("\"fixed_points\":1") != std::string::npos);
  CHECK(json.find("\"violations\":[]") != std::string::npos);
}
