#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "kingdom/board.hpp"
#include "kingdom/engine.hpp"
#include "kingdom/errors.hpp"
#include "kingdom/matching.hpp"
#include "kingdom/oracle.hpp"
#include "kingdom/poly.hpp"
#include "kingdom/transfer.hpp"

namespace py = pybind11;
using namespace kingdom;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string digits = v.get_str(16);
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 16));
}

EngineOptions engine_options(const std::string& method, unsigned threads, bool force) {
  EngineOptions opts;
  opts.method = parse_method(method);
  opts.threads = threads;
  opts.force = force;
  return opts;
}

std::vector<std::vector<int>> to_cells(const BoardSpec& spec, const VertexSet& s) {
  std::vector<std::vector<int>> cells;
  for (auto i : s.indices()) cells.push_back(vertex_at(spec, i).coords);
  return cells;
}

VertexSet from_cells(const BoardSpec& spec, const std::vector<std::vector<int>>& cells) {
  VertexSet s(vertex_count(spec));
  for (const auto& c : cells) s.set(index_of(spec, Vertex{c}));
  return s;
}

BoundaryMode boundary_mode(const std::string& name) {
  if (name == "free") return BoundaryMode::Free;
  if (name == "cyl-x") return BoundaryMode::CylX;
  if (name == "cyl-y") return BoundaryMode::CylY;
  if (name == "torus") return BoundaryMode::Torus;
  throw ParseError("unknown boundary: " + name);
}

py::list coefficients(const DominationPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Domination polynomials of king and grid graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_RuntimeError);

  m.def(
      "polynomial",
      [](const std::string& board, const std::string& method, unsigned threads, bool force) {
        return coefficients(compute_polynomial(parse_board(board), engine_options(method, threads, force)));
      },
      py::arg("board"), py::kw_only(), py::arg("method") = "auto", py::arg("threads") = 0, py::arg("force") = false,
      "Coefficients N_0..N_|V| of the domination polynomial.");

  m.def(
      "evaluate",
      [](const std::string& board, long z, const std::string& method, unsigned threads, bool force) {
        return to_py(compute_eval(parse_board(board), z, engine_options(method, threads, force)));
      },
      py::arg("board"), py::arg("z") = -1, py::kw_only(), py::arg("method") = "auto", py::arg("threads") = 0,
      py::arg("force") = false, "P(z) as an exact integer.");

  m.def(
      "domination_number",
      [](const std::string& board, const std::string& method, bool force) {
        return domination_number(compute_polynomial(parse_board(board), engine_options(method, 0, force)));
      },
      py::arg("board"), py::kw_only(), py::arg("method") = "auto", py::arg("force") = false);

  m.def(
      "table",
      [](const std::string& family, const std::string& boundary, std::pair<int, int> ms, std::pair<int, int> ns,
         long z, unsigned threads) {
        const BoundaryMode bm = boundary_mode(boundary);
        TransferOptions opts;
        opts.threads = threads ? threads : 1;
        const auto t = table_scan(parse_family(family), bm, Range{ms.first, ms.second}, Range{ns.first, ns.second},
                                  z, opts);
        py::dict out;
        for (std::size_t r = 0; r < t.ns.size(); ++r)
          for (std::size_t c = 0; c < t.ms.size(); ++c)
            out[py::make_tuple(t.ms[c], t.ns[r])] = to_py(t.cells[r][c]);
        return out;
      },
      py::arg("family"), py::arg("boundary") = "free", py::kw_only(), py::arg("m"), py::arg("n"), py::arg("z") = -1,
      py::arg("threads") = 0, "Map (m, n) -> P(z) over inclusive ranges of widths m and heights n.");

  m.def(
      "compare",
      [](const std::string& board, bool force) {
        const auto spec = parse_board(board);
        OracleOptions oopts;
        oopts.force = force;
        const auto a = enumerate_polynomial(spec, oopts);
        const auto b = transfer_polynomial(spec);
        const long diff = first_difference(a, b);
        py::dict out;
        out["equal"] = diff < 0;
        out["first_difference"] = diff < 0 ? py::object(py::none()) : py::object(py::int_(diff));
        out["oracle"] = coefficients(a);
        out["transfer"] = coefficients(b);
        return out;
      },
      py::arg("board"), py::kw_only(), py::arg("force") = false);

  m.def("fixed_point", [](const std::string& board) {
    const auto spec = parse_board(board);
    return to_cells(spec, fixed_point(spec));
  }, py::arg("board"), "Cells of the unique unmatched dominating set (1-based coordinates).");

  m.def(
      "partner",
      [](const std::string& board, const std::vector<std::vector<int>>& cells) -> py::object {
        const auto spec = parse_board(board);
        const auto outcome = partner(spec, from_cells(spec, cells));
        if (outcome.kind == MatchOutcome::Kind::FixedPoint) return py::none();
        return py::cast(to_cells(spec, *outcome.partner));
      },
      py::arg("board"), py::arg("cells"), "Matched partner of a dominating set, or None at the fixed point.");

  m.def(
      "verify_matching",
      [](const std::string& board, bool force) {
        VerifyOptions opts;
        opts.force = force;
        const auto r = verify_theorem(parse_board(board), opts);
        py::dict out;
        out["board"] = r.board;
        out["dominating_sets"] = r.dominating_sets;
        out["pairs"] = r.pairs;
        out["fixed_points"] = r.fixed_points;
        out["corner_count"] = r.corner_count;
        out["signed_count"] = to_py(r.signed_count);
        out["predicted"] = r.predicted;
        out["violations"] = r.violations;
        out["passed"] = r.passed();
        return out;
      },
      py::arg("board"), py::kw_only(), py::arg("force") = false);

  m.def(
      "sampled_check",
      [](const std::string& board, std::size_t trials, std::uint64_t seed) {
        SampleOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        const auto r = sampled_check(parse_board(board), opts);
        py::dict out;
        out["board"] = r.board;
        out["trials"] = r.trials;
        out["partner_samples"] = r.partner_samples;
        out["fixed_point_samples"] = r.fixed_point_samples;
        out["violations"] = r.violations;
        out["passed"] = r.passed();
        return out;
      },
      py::arg("board"), py::arg("trials") = 10000, py::arg("seed") = 0);
}
