#include "kingdom/matching.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "kingdom/errors.hpp"
#include "kingdom/oracle.hpp"

namespace kingdom {

namespace {

constexpr std::size_t kMaxReportedViolations = 20;

void require_free_king(const BoardSpec& spec) {
  if (spec.family() != Family::King)
    throw UnsupportedError("the block matching is defined for king boards only");
  if (!spec.all_free())
    throw UnsupportedError("matching undefined: the block matching needs free boundaries on every axis");
}

void note(std::vector<std::string>& out, std::string msg) {
  if (out.size() < kMaxReportedViolations) out.push_back(std::move(msg));
}

std::string board_name(const BoardSpec& spec) {
  try {
    return to_string(spec);
  } catch (const std::exception&) {
    return "(board)";
  }
}

}  // namespace

BlockDecomposition decompose(const BoardSpec& spec) {
  require_free_king(spec);
  BlockDecomposition out;
  const std::size_t n = vertex_count(spec);
  const std::size_t d = spec.dimension();
  // Canonical order is lexicographic with axis 1 fastest, which is the scan order.
  for (std::size_t index = 0; index < n; ++index) {
    Vertex corner = vertex_at(spec, index);
    bool all_odd = true;
    for (int c : corner.coords) all_odd = all_odd && (c % 2 == 1);
    if (!all_odd) continue;

    Block block{corner, index, {}};
    for (std::size_t offset = 1; offset < (std::size_t{1} << d); ++offset) {
      Vertex cell = corner;
      bool inside = true;
      for (std::size_t i = 0; i < d && inside; ++i)
        if (offset >> i & 1U) inside = ++cell.coords[i] <= spec.dims()[i];
      if (inside) block.others.push_back(index_of(spec, cell));
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

VertexSet fixed_point(const BoardSpec& spec) {
  VertexSet t(vertex_count(spec));
  for (const auto& b : decompose(spec).blocks) t.set(b.corner_index);
  return t;
}

Matcher::Matcher(const BoardSpec& spec)
    : spec_(spec), decomposition_(decompose(spec)), adjacency_(adjacency(spec)) {
  fixed_point_ = VertexSet(vertex_count(spec));
  for (const auto& b : decomposition_.blocks) fixed_point_.set(b.corner_index);
}

bool Matcher::is_dominating(const VertexSet& s) const { return kingdom::is_dominating(adjacency_, s); }

std::optional<std::size_t> Matcher::flip_index(const VertexSet& s) const {
  for (const auto& b : decomposition_.blocks)
    for (auto cell : b.others)
      if (s.test(cell)) return b.corner_index;
  return std::nullopt;
}

MatchOutcome Matcher::partner(const VertexSet& s) const {
  if (s.size() != fixed_point_.size()) throw std::invalid_argument("vertex set width does not match board");
  if (!is_dominating(s)) throw std::invalid_argument("partner is only defined on dominating sets");

  for (const auto& b : decomposition_.blocks) {
    bool active = false;
    for (auto cell : b.others) active = active || s.test(cell);
    if (active) {
      MatchOutcome out;
      out.kind = MatchOutcome::Kind::Partner;
      out.flipped = b.corner;
      out.partner = s;
      out.partner->flip(b.corner_index);
      return out;
    }
    // Every block before the first active one is reduced to its corner, which
    // then has no occupied neighbor and must dominate itself.
    if (!s.test(b.corner_index))
      throw std::logic_error("dominating set leaves an inactive block's corner empty");
  }
  if (!(s == fixed_point_)) throw std::logic_error("set without an active block differs from T");
  return MatchOutcome{};
}

MatchOutcome partner(const BoardSpec& spec, const VertexSet& s) { return Matcher(spec).partner(s); }

namespace {

// Checks one non-fixed dominating set against its partner. Returns false on any violation.
bool check_pair(const Matcher& matcher, const VertexSet& s, const MatchOutcome& out,
                std::vector<std::string>& violations, bool& closure, bool& parity, bool& involution) {
  const VertexSet& p = *out.partner;
  const std::string label = s.to_string();
  bool ok = true;
  if (!matcher.is_dominating(p)) {
    closure = false;
    note(violations, "closure: partner of " + label + " is not dominating");
    return false;
  }
  if ((p.count() + s.count()) % 2 == 0 || (p.count() != s.count() + 1 && p.count() + 1 != s.count())) {
    parity = false;
    ok = false;
    note(violations, "parity: partner of " + label + " has the same parity");
  }
  const MatchOutcome back = matcher.partner(p);
  if (back.kind != MatchOutcome::Kind::Partner || !(*back.partner == s)) {
    involution = false;
    ok = false;
    note(violations, "involution: partner(partner(" + label + ")) != " + label);
  }
  return ok;
}

}  // namespace

TheoremReport verify_theorem(const BoardSpec& spec, const VerifyOptions& opts) {
  const Matcher matcher(spec);
  TheoremReport r;
  r.board = board_name(spec);
  r.corner_count = matcher.fixed_point().count();
  r.predicted = r.corner_count % 2 ? -1 : 1;

  const std::size_t n = vertex_count(spec);
  long signed_total = 0;
  std::size_t matched = 0;
  OracleOptions oracle;
  oracle.force = opts.force;
  for_each_dominating_mask(
      spec,
      [&](std::uint64_t mask) {
        const VertexSet s = VertexSet::from_mask(n, mask);
        ++r.dominating_sets;
        signed_total += (std::popcount(mask) % 2) ? -1 : 1;
        try {
          const MatchOutcome out = matcher.partner(s);
          if (out.kind == MatchOutcome::Kind::FixedPoint) {
            ++r.fixed_points;
          } else {
            ++matched;
            check_pair(matcher, s, out, r.violations, r.closure, r.parity_flip, r.involution);
          }
        } catch (const std::exception& e) {
          note(r.violations, "prefix: " + s.to_string() + ": " + e.what());
        }
      },
      oracle);

  r.pairs = matched / 2;
  if (matched % 2) {
    r.involution = false;
    note(r.violations, "odd number of matched sets");
  }
  r.unique_fixed_point = r.fixed_points == 1;
  if (!r.unique_fixed_point)
    note(r.violations, "expected exactly one fixed point, found " + std::to_string(r.fixed_points));
  r.signed_count = BigInt(signed_total);
  r.signed_sum = r.signed_count == r.predicted;
  if (!r.signed_sum)
    note(r.violations, "signed count " + r.signed_count.get_str() + " != (-1)^|T| = " +
                           std::to_string(r.predicted));
  return r;
}

SampleReport sampled_check(const BoardSpec& spec, const SampleOptions& opts) {
  const Matcher matcher(spec);
  SampleReport r;
  r.board = board_name(spec);
  r.trials = opts.trials;

  const std::size_t n = vertex_count(spec);
  const VertexSet& t = matcher.fixed_point();
  std::vector<std::size_t> non_corner;
  for (std::size_t v = 0; v < n; ++v)
    if (!t.test(v)) non_corner.push_back(v);

  std::mt19937_64 rng(opts.seed);
  bool closure = true, parity = true, involution = true;

  auto uniform_dominating = [&]() -> std::optional<VertexSet> {
    for (int attempt = 0; attempt < (1 << 16); ++attempt) {
      VertexSet s(n);
      std::uint64_t bits = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (v % 64 == 0) bits = rng();
        s.set(v, bits >> (v % 64) & 1U);
      }
      if (matcher.is_dominating(s)) return s;
    }
    return std::nullopt;
  };

  auto perturbed_fixed_point = [&]() {
    VertexSet s = t;
    std::vector<std::size_t> pool = non_corner;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
      s.set(pool[j]);
      pool[j] = pool.back();
      pool.pop_back();
    }
    return s;
  };

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    std::optional<VertexSet> s;
    if (trial == 0 && opts.include_fixed_point)
      s = t;
    else if (trial % 2 == 0)
      s = uniform_dominating();
    else
      s = perturbed_fixed_point();
    if (!s) {
      note(r.violations, "trial " + std::to_string(trial) + ": no dominating sample found");
      continue;
    }
    try {
      const MatchOutcome out = matcher.partner(*s);
      if (out.kind == MatchOutcome::Kind::FixedPoint) {
        ++r.fixed_point_samples;
      } else {
        ++r.partner_samples;
        check_pair(matcher, *s, out, r.violations, closure, parity, involution);
      }
    } catch (const std::exception& e) {
      note(r.violations, "trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  return r;
}

std::string to_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["board"] = r.board;
  j["dominating_sets"] = r.dominating_sets;
  j["pairs"] = r.pairs;
  j["fixed_points"] = r.fixed_points;
  j["corners"] = r.corner_count;
  j["signed_count"] = r.signed_count.get_str();
  j["predicted"] = r.predicted;
  j["checks"] = {{"involution", r.involution},
                 {"parity_flip", r.parity_flip},
                 {"closure", r.closure},
                 {"unique_fixed_point", r.unique_fixed_point},
                 {"signed_sum", r.signed_sum}};
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  return j.dump();
}

std::string to_json(const SampleReport& r) {
  nlohmann::ordered_json j;
  j["board"] = r.board;
  j["trials"] = r.trials;
  j["pairs"] = r.partner_samples;
  j["fixed_points"] = r.fixed_point_samples;
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  return j.dump();
}

}  // namespace kingdom
