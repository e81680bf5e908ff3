#include "kingdom/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kingdom/board.hpp"
#include "kingdom/engine.hpp"
#include "kingdom/errors.hpp"
#include "kingdom/matching.hpp"
#include "kingdom/oracle.hpp"
#include "kingdom/table_format.hpp"
#include "kingdom/transfer.hpp"

namespace kingdom {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct GlobalFlags {
  bool json = false;
  unsigned threads = 0;
  bool no_prune = false;
  bool force = false;
  std::string method = "auto";

  EngineOptions engine() const {
    EngineOptions o;
    o.method = parse_method(method);
    o.threads = threads;
    o.prune = !no_prune;
    o.force = force;
    return o;
  }
};

int signature(int m, int n) {
  const long corners = static_cast<long>((m + 1) / 2) * ((n + 1) / 2);
  return corners % 2 ? -1 : 1;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int cmd_poly(const GlobalFlags& g, const std::string& board_text, std::ostream& out) {
  const BoardSpec spec = parse_board(board_text);
  const DominationPolynomial p = compute_polynomial(spec, g.engine());
  const std::string name = to_string(spec);
  if (g.json) {
    out << to_json(p, name) << '\n';
    return kExitOk;
  }
  out << "board: " << name << '\n';
  out << "method: " << to_string(resolve_method(spec, g.engine().method)) << '\n';
  out << "nverts: " << p.nverts() << '\n';
  out << "coeffs:";
  for (const auto& c : p.coeffs()) out << ' ' << c.get_str();
  out << '\n';
  out << "gamma: " << domination_number(p) << '\n';
  out << "P(-1): " << eval_at(p, -1).get_str() << '\n';
  out << "P(1): " << eval_at(p, 1).get_str() << '\n';
  return kExitOk;
}

int cmd_eval(const GlobalFlags& g, const std::string& board_text, long z, std::ostream& out) {
  const BoardSpec spec = parse_board(board_text);
  const BigInt value = compute_eval(spec, z, g.engine());
  if (g.json) {
    Json j;
    j["board"] = to_string(spec);
    j["z"] = z;
    j["value"] = value.get_str();
    out << j.dump() << '\n';
  } else {
    out << "P(" << z << ") = " << value.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_domination_number(const GlobalFlags& g, const std::string& board_text, std::ostream& out) {
  const BoardSpec spec = parse_board(board_text);
  const std::size_t gamma = domination_number(compute_polynomial(spec, g.engine()));
  if (g.json) {
    Json j;
    j["board"] = to_string(spec);
    j["gamma"] = gamma;
    out << j.dump() << '\n';
  } else {
    out << gamma << '\n';
  }
  return kExitOk;
}

struct TableArgs {
  std::string family;
  bool free = false, cyl_x = false, cyl_y = false, torus = false;
  std::string m_range, n_range;
  long z = -1;
  bool csv = false;
  bool check_theorem = false;
};

int cmd_table(const GlobalFlags& g, const TableArgs& a, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(a.family);
  if (a.free + a.cyl_x + a.cyl_y + a.torus > 1) throw ParseError("pick one boundary flag");
  BoundaryMode mode = BoundaryMode::Free;
  std::string mode_name = "free";
  if (a.cyl_x) mode = BoundaryMode::CylX, mode_name = "cyl-x";
  if (a.cyl_y) mode = BoundaryMode::CylY, mode_name = "cyl-y";
  if (a.torus) mode = BoundaryMode::Torus, mode_name = "torus";
  if (a.check_theorem && (family != Family::King || mode != BoundaryMode::Free))
    throw ParseError("--check-theorem applies to king --free tables only");

  const Range mr = parse_range(a.m_range), nr = parse_range(a.n_range);
  ValueTable table;
  for (int m = mr.first; m <= mr.last; ++m) table.ms.push_back(m);
  for (int n = nr.first; n <= nr.last; ++n) table.ns.push_back(n);
  const EngineOptions engine = g.engine();
  for (int n : table.ns) {
    auto& row = table.cells.emplace_back();
    for (int m : table.ms) {
      BoardSpec spec = [&] {
        try {
          return make_board(family, m, n, mode);
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string(to_string(family)) + ":" + std::to_string(m) + "x" +
                           std::to_string(n) + ":" + mode_name + ": " + e.what());
        }
      }();
      row.push_back(compute_eval(spec, a.z, engine));
    }
  }

  std::vector<std::vector<bool>> marks;
  std::size_t passed = 0, total = 0;
  if (a.check_theorem) {
    for (std::size_t r = 0; r < table.ns.size(); ++r) {
      auto& row = marks.emplace_back();
      for (std::size_t c = 0; c < table.ms.size(); ++c) {
        // The identity concerns z = -1; other z values are compared against it as well.
        const bool ok = table.cells[r][c] == signature(table.ms[c], table.ns[r]);
        row.push_back(ok);
        passed += ok;
        ++total;
      }
    }
  }

  if (g.json) {
    Json j;
    j["family"] = a.family;
    j["boundary"] = mode_name;
    j["z"] = a.z;
    j["m"] = table.ms;
    j["n"] = table.ns;
    auto cells = Json::array();
    for (const auto& row : table.cells) {
      auto jr = Json::array();
      for (const auto& v : row) jr.push_back(v.get_str());
      cells.push_back(std::move(jr));
    }
    j["cells"] = std::move(cells);
    if (a.check_theorem) j["theorem"] = {{"passed", passed}, {"cells", total}};
    out << j.dump() << '\n';
  } else if (a.csv) {
    out << render_csv(table);
  } else {
    out << render_text(table, a.check_theorem ? &marks : nullptr);
  }
  if (a.check_theorem) {
    (g.json || a.csv ? err : out) << "theorem check: " << passed << "/" << total
                                  << " cells equal (-1)^(ceil(m/2)*ceil(n/2))\n";
    if (passed != total) return kExitFailure;
  }
  return kExitOk;
}

int cmd_compare(const GlobalFlags& g, const std::string& board_text, std::ostream& out) {
  const BoardSpec spec = parse_board(board_text);
  if (spec.dimension() != 2) throw UnsupportedError("compare needs a two-dimensional board");
  const EngineOptions engine = g.engine();

  auto t0 = Clock::now();
  const DominationPolynomial oracle = enumerate_polynomial(spec, {engine.force, engine.threads});
  const double oracle_s = seconds_since(t0);
  t0 = Clock::now();
  const DominationPolynomial transfer = transfer_polynomial(spec, {engine.threads, engine.prune});
  const double transfer_s = seconds_since(t0);

  const long diff = first_difference(oracle, transfer);
  if (g.json) {
    Json j;
    j["board"] = to_string(spec);
    j["equal"] = diff < 0;
    if (diff >= 0) j["first_difference"] = diff;
    j["oracle_seconds"] = oracle_s;
    j["transfer_seconds"] = transfer_s;
    out << j.dump() << '\n';
  } else if (diff < 0) {
    out << to_string(spec) << ": equal (" << oracle.nverts() + 1 << " coefficients; oracle "
        << oracle_s << " s, transfer " << transfer_s << " s)\n";
  } else {
    const auto k = static_cast<std::size_t>(diff);
    auto coeff = [k](const DominationPolynomial& p) {
      return k < p.coeffs().size() ? p.coeffs()[k].get_str() : std::string("(missing)");
    };
    out << to_string(spec) << ": MISMATCH at N_" << k << ": oracle " << coeff(oracle) << ", transfer "
        << coeff(transfer) << '\n';
  }
  return diff < 0 ? kExitOk : kExitFailure;
}

struct MatchingArgs {
  std::string board;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

int cmd_verify_matching(const GlobalFlags& g, const MatchingArgs& a, std::ostream& out) {
  const BoardSpec spec = parse_board(a.board);
  if (a.exhaustive && a.samples) throw ParseError("use either --exhaustive or --samples");

  if (a.samples) {
    SampleOptions opts;
    opts.trials = a.samples;
    opts.seed = a.seed;
    const SampleReport r = sampled_check(spec, opts);
    if (g.json) {
      out << to_json(r) << '\n';
    } else {
      out << r.board << ": " << r.trials << " samples, " << r.partner_samples << " matched, "
          << r.fixed_point_samples << " at the fixed point, " << r.violations.size() << " violations\n";
      for (const auto& v : r.violations) out << "  " << v << '\n';
      out << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? kExitOk : kExitFailure;
  }

  const TheoremReport r = verify_theorem(spec, {g.force});
  if (g.json) {
    out << to_json(r) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "ok" : "FAILED"; };
    out << r.board << ": " << r.dominating_sets << " dominating sets, " << r.pairs << " pairs, "
        << r.fixed_points << " fixed point(s)\n";
    out << "  involution " << yn(r.involution) << ", parity flip " << yn(r.parity_flip) << ", closure "
        << yn(r.closure) << ", unique fixed point " << yn(r.unique_fixed_point) << '\n';
    out << "  signed count " << r.signed_count.get_str() << ", (-1)^|T| with |T| = " << r.corner_count
        << " is " << r.predicted << " (" << yn(r.signed_sum) << ")\n";
    for (const auto& v : r.violations) out << "  " << v << '\n';
    out << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return r.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination polynomials of king and wazir boards"};
  app.name("kingdom");
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_flag("--no-prune", g.no_prune, "Carry dead frontier states to the end (debug)");
  app.add_flag("--force", g.force, "Lift the oracle vertex limit");
  app.add_option("--method", g.method, "auto, transfer or oracle")
      ->check(CLI::IsMember({"auto", "transfer", "oracle"}));

  std::string board;
  long z = -1;

  auto* poly = app.add_subcommand("poly", "Print the domination polynomial");
  poly->add_option("board", board, "Board, e.g. king:8x8 or king:6x6:torus")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate P(z)");
  eval->add_option("board", board)->required();
  eval->add_option("-z", z, "Evaluation point")->allow_extra_args(false);

  auto* gamma = app.add_subcommand("domination-number", "Smallest dominating set size");
  gamma->add_option("board", board)->required();

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate P(z) over m x n boards");
  table->add_option("family", ta.family, "king or wazir")->required();
  table->add_flag("--free", ta.free);
  table->add_flag("--cyl-x", ta.cyl_x);
  table->add_flag("--cyl-y", ta.cyl_y);
  table->add_flag("--torus", ta.torus);
  table->add_option("-m", ta.m_range, "Column range a..b")->required();
  table->add_option("-n", ta.n_range, "Row range a..b")->required();
  table->add_option("-z", ta.z, "Evaluation point");
  table->add_flag("--csv", ta.csv);
  table->add_flag("--check-theorem", ta.check_theorem, "Compare king/free cells with (-1)^(ceil(m/2)ceil(n/2))");

  auto* compare = app.add_subcommand("compare", "Cross-check oracle and transfer polynomials");
  compare->add_option("board", board)->required();

  MatchingArgs ma;
  auto* verify = app.add_subcommand("verify-matching", "Check the parity matching on dominating sets");
  verify->add_option("board", ma.board)->required();
  verify->add_flag("--exhaustive", ma.exhaustive, "Check every dominating set (default)");
  verify->add_option("--samples", ma.samples, "Random samples instead of exhaustive");
  verify->add_option("--seed", ma.seed, "Sampling seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"kingdom"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(g, board, out);
    if (*eval) return cmd_eval(g, board, z, out);
    if (*gamma) return cmd_domination_number(g, board, out);
    if (*table) return cmd_table(g, ta, out, err);
    if (*compare) return cmd_compare(g, board, out);
    if (*verify) return cmd_verify_matching(g, ma, out);
  } catch (const GuardError& e) {
    err << "error: " << e.guard() << " guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kingdom
