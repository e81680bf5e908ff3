#include "kingdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "kingdom/errors.hpp"

namespace kingdom {

std::size_t oracle_vertex_limit() {
  if (const char* env = std::getenv("KINGDOM_MAX_ORACLE_BITS")) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0') return std::min(value, kOracleHardLimit);
  }
  return kDefaultOracleVertexLimit;
}

namespace {

// Subsets are split as high | low with `low_bits` low bits. Coverage of every low
// subset is tabulated once; a high subset's coverage is OR-ed in per row.
struct SubsetSweep {
  std::size_t n = 0;
  std::size_t low_bits = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> closed;  // N[v] as masks
  std::vector<std::uint64_t> low_cover;

  SubsetSweep(const BoardSpec& spec, const OracleOptions& opts) {
    n = vertex_count(spec);
    const std::size_t limit = opts.force ? kOracleHardLimit : oracle_vertex_limit();
    if (n > limit || n > kOracleHardLimit)
      throw GuardError("oracle", "board " + to_string_safe(spec) + " has " + std::to_string(n) +
                                     " vertices, above the oracle limit of " +
                                     std::to_string(std::min(limit, kOracleHardLimit)) +
                                     " (use --force or KINGDOM_MAX_ORACLE_BITS)");
    full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    const auto adj = adjacency(spec);
    closed.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      closed[v] = std::uint64_t{1} << v;
      for (auto u : adj[v]) closed[v] |= std::uint64_t{1} << u;
    }
    low_bits = std::min<std::size_t>(n, 16);
    low_cover.assign(std::size_t{1} << low_bits, 0);
    for (std::size_t s = 1; s < low_cover.size(); ++s)
      low_cover[s] = low_cover[s & (s - 1)] | closed[static_cast<std::size_t>(std::countr_zero(s))];
  }

  static std::string to_string_safe(const BoardSpec& spec) {
    try {
      return to_string(spec);
    } catch (const std::exception&) {
      return "(board)";
    }
  }

  std::uint64_t high_count() const { return std::uint64_t{1} << (n - low_bits); }

  std::uint64_t high_cover(std::uint64_t high) const {
    std::uint64_t cover = 0;
    for (; high; high &= high - 1)
      cover |= closed[low_bits + static_cast<std::size_t>(std::countr_zero(high))];
    return cover;
  }

  // fn(high, low) for each dominating subset with high part in [begin, end).
  template <class Fn>
  void run(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    const std::uint64_t low_all = low_cover.back();
    const std::size_t low_size = low_cover.size();
    for (std::uint64_t high = begin; high < end; ++high) {
      const std::uint64_t hc = high_cover(high);
      if ((hc | low_all) != full) continue;
      const std::uint64_t need = full & ~hc;
      for (std::size_t low = 0; low < low_size; ++low)
        if ((low_cover[low] & need) == need) fn(high, low);
    }
  }
};

unsigned worker_count(const OracleOptions& opts, std::uint64_t rows) {
  unsigned t = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, rows));
}

// Runs body(begin, end, worker) over disjoint high-part ranges.
template <class Body>
void parallel_rows(std::uint64_t rows, unsigned workers, Body&& body) {
  if (workers <= 1) {
    body(0, rows, 0U);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = rows * w / workers;
    const std::uint64_t end = rows * (w + 1) / workers;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

DominationPolynomial enumerate_polynomial(const BoardSpec& spec, const OracleOptions& opts) {
  const SubsetSweep sweep(spec, opts);
  const std::uint64_t rows = sweep.high_count();
  const unsigned workers = worker_count(opts, rows);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(sweep.n + 1, 0));
  parallel_rows(rows, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    auto& counts = partial[w];
    sweep.run(begin, end, [&](std::uint64_t high, std::uint64_t low) {
      ++counts[static_cast<std::size_t>(std::popcount(high) + std::popcount(low))];
    });
  });

  std::vector<BigInt> coeffs(sweep.n + 1, 0);
  for (const auto& counts : partial)
    for (std::size_t k = 0; k <= sweep.n; ++k) {
      // mpz_class has no uint64_t constructor on every platform; go through unsigned long.
      coeffs[k] += BigInt(static_cast<unsigned long>(counts[k]));
    }
  DominationPolynomial p(std::move(coeffs));
  check_invariants(p);
  return p;
}

BigInt eval_signed_count(const BoardSpec& spec, const OracleOptions& opts) {
  const SubsetSweep sweep(spec, opts);
  const std::uint64_t rows = sweep.high_count();
  const unsigned workers = worker_count(opts, rows);

  std::vector<std::int64_t> partial(workers, 0);
  parallel_rows(rows, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::int64_t total = 0;
    sweep.run(begin, end, [&](std::uint64_t high, std::uint64_t low) {
      total += ((std::popcount(high) + std::popcount(low)) & 1) ? -1 : 1;
    });
    partial[w] = total;
  });

  BigInt total = 0;
  for (auto t : partial) total += BigInt(static_cast<long>(t));
  return total;
}

void for_each_dominating_mask(const BoardSpec& spec, const std::function<void(std::uint64_t)>& fn,
                              const OracleOptions& opts) {
  const SubsetSweep sweep(spec, opts);
  sweep.run(0, sweep.high_count(), [&](std::uint64_t high, std::uint64_t low) {
    fn(high << sweep.low_bits | low);
  });
}

void enumerate_dominating_sets(const BoardSpec& spec,
                               const std::function<void(const VertexSet&)>& fn,
                               const OracleOptions& opts) {
  const std::size_t n = vertex_count(spec);
  for_each_dominating_mask(
      spec, [&](std::uint64_t mask) { fn(VertexSet::from_mask(n, mask)); }, opts);
}

}  // namespace kingdom
