#include "kingdom/board.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "kingdom/errors.hpp"

namespace kingdom {

BoardSpec::BoardSpec(Family family, std::vector<int> dims, std::vector<Boundary> boundary)
    : family_(family), dims_(std::move(dims)), boundary_(std::move(boundary)) {
  if (dims_.empty()) throw std::invalid_argument("board needs at least one axis");
  if (dims_.size() != boundary_.size())
    throw std::invalid_argument("dims and boundary must have equal length");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 0) throw std::invalid_argument("board side lengths must be nonnegative");
    if (boundary_[i] == Boundary::Cyclic && dims_[i] <= 2)
      throw std::invalid_argument("cyclic axis " + std::to_string(i + 1) +
                                  " needs length >= 3, got " + std::to_string(dims_[i]));
  }
  if (family_ == Family::Wazir && dims_.size() != 2)
    throw std::invalid_argument("wazir boards are two-dimensional");
}

BoardSpec::BoardSpec(Family family, std::vector<int> dims)
    : BoardSpec(family, dims, std::vector<Boundary>(dims.size(), Boundary::Free)) {}

bool BoardSpec::all_free() const noexcept {
  return std::all_of(boundary_.begin(), boundary_.end(),
                     [](Boundary b) { return b == Boundary::Free; });
}

bool BoardSpec::empty() const noexcept {
  return std::any_of(dims_.begin(), dims_.end(), [](int n) { return n == 0; });
}

BoardSpec make_board(Family family, int m, int n, BoundaryMode mode) {
  const bool cx = mode == BoundaryMode::CylX || mode == BoundaryMode::Torus;
  const bool cy = mode == BoundaryMode::CylY || mode == BoundaryMode::Torus;
  return BoardSpec(family, {m, n},
                   {cx ? Boundary::Cyclic : Boundary::Free, cy ? Boundary::Cyclic : Boundary::Free});
}

std::string_view to_string(Family family) { return family == Family::King ? "king" : "wazir"; }

Family parse_family(std::string_view text) {
  if (text == "king") return Family::King;
  if (text == "wazir") return Family::Wazir;
  throw ParseError("unknown board family '" + std::string(text) + "'");
}

namespace {

int parse_side(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw ParseError("bad board side length '" + std::string(text) + "'");
  return value;
}

}  // namespace

BoardSpec parse_board(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("board string must look like king:8x8[:boundary], got '" +
                     std::string(text) + "'");
  const Family family = parse_family(text.substr(0, colon));

  std::string_view rest = text.substr(colon + 1);
  std::string_view boundary_text = "free";
  if (auto c2 = rest.find(':'); c2 != std::string_view::npos) {
    boundary_text = rest.substr(c2 + 1);
    rest = rest.substr(0, c2);
  }

  std::vector<int> dims;
  while (true) {
    const auto x = rest.find('x');
    dims.push_back(parse_side(rest.substr(0, x)));
    if (x == std::string_view::npos) break;
    rest = rest.substr(x + 1);
  }

  std::vector<Boundary> boundary(dims.size(), Boundary::Free);
  if (boundary_text == "free") {
  } else if (boundary_text == "cyl-x") {
    boundary[0] = Boundary::Cyclic;
  } else if (boundary_text == "cyl-y") {
    if (dims.size() < 2) throw ParseError("cyl-y needs a second axis");
    boundary[1] = Boundary::Cyclic;
  } else if (boundary_text == "torus") {
    std::fill(boundary.begin(), boundary.end(), Boundary::Cyclic);
  } else {
    throw ParseError("unknown boundary '" + std::string(boundary_text) +
                     "' (expected free, cyl-x, cyl-y or torus)");
  }

  try {
    return BoardSpec(family, std::move(dims), std::move(boundary));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(text) + ": " + e.what());
  }
}

std::string to_string(const BoardSpec& spec) {
  std::string out(to_string(spec.family()));
  out += ':';
  for (std::size_t i = 0; i < spec.dimension(); ++i) {
    if (i) out += 'x';
    out += std::to_string(spec.dims()[i]);
  }
  const auto& b = spec.boundary();
  const auto cyclic = static_cast<std::size_t>(std::count(b.begin(), b.end(), Boundary::Cyclic));
  if (cyclic == 0) return out;
  if (cyclic == b.size() && b.size() >= 2) return out + ":torus";
  if (cyclic == 1 && b[0] == Boundary::Cyclic) return out + ":cyl-x";
  if (cyclic == 1 && b.size() >= 2 && b[1] == Boundary::Cyclic) return out + ":cyl-y";
  throw UnsupportedError("boundary combination has no board-string form");
}

std::size_t vertex_count(const BoardSpec& spec) {
  std::size_t n = 1;
  for (int d : spec.dims()) n *= static_cast<std::size_t>(d);
  return n;
}

std::size_t index_of(const BoardSpec& spec, const Vertex& v) {
  const auto& dims = spec.dims();
  if (v.coords.size() != dims.size()) throw std::out_of_range("vertex has wrong dimension");
  std::size_t index = 0, stride = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (v.coords[i] < 1 || v.coords[i] > dims[i]) throw std::out_of_range("vertex out of bounds");
    index += static_cast<std::size_t>(v.coords[i] - 1) * stride;
    stride *= static_cast<std::size_t>(dims[i]);
  }
  return index;
}

Vertex vertex_at(const BoardSpec& spec, std::size_t index) {
  if (index >= vertex_count(spec)) throw std::out_of_range("vertex index out of range");
  Vertex v;
  v.coords.reserve(spec.dimension());
  for (int d : spec.dims()) {
    v.coords.push_back(static_cast<int>(index % static_cast<std::size_t>(d)) + 1);
    index /= static_cast<std::size_t>(d);
  }
  return v;
}

namespace {

// Calls fn(neighbor_index) for every neighbor of `index`, in no particular order.
template <class Fn>
void visit_neighbors(const BoardSpec& spec, std::size_t index, Fn&& fn) {
  const auto& dims = spec.dims();
  const auto& bnd = spec.boundary();
  const std::size_t d = dims.size();

  std::vector<int> base(d);
  std::vector<std::size_t> stride(d);
  std::size_t s = 1;
  for (std::size_t i = 0; i < d; ++i) {
    base[i] = static_cast<int>(index / s % static_cast<std::size_t>(dims[i]));
    stride[i] = s;
    s *= static_cast<std::size_t>(dims[i]);
  }

  // Shifts coordinate i by delta; false if it falls off a free edge.
  auto shifted = [&](std::size_t i, int delta, int& out) {
    out = base[i] + delta;
    if (out >= 0 && out < dims[i]) return true;
    if (bnd[i] == Boundary::Free) return false;
    out = (out + dims[i]) % dims[i];
    return true;
  };

  if (spec.family() == Family::Wazir) {
    for (std::size_t i = 0; i < d; ++i)
      for (int delta : {-1, 1}) {
        int c;
        if (shifted(i, delta, c))
          fn(index - stride[i] * static_cast<std::size_t>(base[i]) +
             stride[i] * static_cast<std::size_t>(c));
      }
    return;
  }

  // King: every displacement in {-1,0,1}^d except zero.
  std::vector<int> delta(d, -1);
  while (true) {
    bool zero = std::all_of(delta.begin(), delta.end(), [](int x) { return x == 0; });
    if (!zero) {
      std::size_t target = 0;
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) {
        int c;
        ok = shifted(i, delta[i], c);
        target += stride[i] * static_cast<std::size_t>(c);
      }
      if (ok) fn(target);
    }
    std::size_t i = 0;
    while (i < d && delta[i] == 1) delta[i++] = -1;
    if (i == d) break;
    ++delta[i];
  }
}

}  // namespace

std::vector<Vertex> neighbors(const BoardSpec& spec, const Vertex& v) {
  const std::size_t index = index_of(spec, v);
  std::vector<std::size_t> found;
  visit_neighbors(spec, index, [&](std::size_t u) { found.push_back(u); });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto u : found) out.push_back(vertex_at(spec, u));
  return out;
}

std::vector<std::vector<std::uint32_t>> adjacency(const BoardSpec& spec) {
  const std::size_t n = vertex_count(spec);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    visit_neighbors(spec, v, [&](std::size_t u) { list.push_back(static_cast<std::uint32_t>(u)); });
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

std::vector<VertexSet> closed_neighborhood_masks(const BoardSpec& spec, std::size_t max_vertices) {
  const std::size_t n = vertex_count(spec);
  if (n > max_vertices)
    throw GuardError("oracle", "board has " + std::to_string(n) + " vertices, above the limit of " +
                                   std::to_string(max_vertices));
  const auto adj = adjacency(spec);
  std::vector<VertexSet> masks(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) {
    masks[v].set(v);
    for (auto u : adj[v]) masks[v].set(u);
  }
  return masks;
}

bool is_dominating(const std::vector<std::vector<std::uint32_t>>& adj, const VertexSet& s) {
  if (s.size() != adj.size()) throw std::invalid_argument("vertex set width does not match board");
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (s.test(v)) continue;
    if (std::none_of(adj[v].begin(), adj[v].end(), [&](std::uint32_t u) { return s.test(u); }))
      return false;
  }
  return true;
}

bool is_dominating(const BoardSpec& spec, const VertexSet& s) {
  return is_dominating(adjacency(spec), s);
}

}  // namespace kingdom
