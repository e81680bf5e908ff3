#include "kingdom/transfer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kingdom/errors.hpp"

namespace kingdom {

namespace {

// Cells are visited column by column along the sweep axis. A cell stays in the
// state from its own step until the step of its last neighbor; it owns a slot
// (bit position) in the occupancy and dominated masks for that lifetime.
struct Step {
  std::uint64_t slot_bit = 0;        // slot of the cell placed in this step
  std::uint64_t neighbor_slots = 0;  // slots of already-placed neighbors
  std::uint64_t retire = 0;          // slots whose last neighbor is this cell
};

struct SweepPlan {
  std::vector<Step> steps;
  std::size_t height = 0;
  std::size_t length = 0;
  std::size_t max_active = 0;
};

constexpr std::uint64_t kDeadBit = std::uint64_t{1} << 63;

void require_supported(const BoardSpec& spec) {
  if (spec.dimension() != 2)
    throw UnsupportedError("the column sweep handles two-dimensional boards only; use the oracle");
  const auto m = static_cast<std::size_t>(spec.dims()[0]);
  const auto n = static_cast<std::size_t>(spec.dims()[1]);
  const std::size_t height = std::min(m, n), length = std::max(m, n);
  if (height > kMaxFrontierHeight)
    throw GuardError("frontier", "frontier height " + std::to_string(height) +
                                     " exceeds the limit of " + std::to_string(kMaxFrontierHeight));
  if (length > kMaxSweepLength)
    throw GuardError("sweep", "sweep length " + std::to_string(length) +
                                  " exceeds the limit of " + std::to_string(kMaxSweepLength));
}

SweepPlan plan_sweep(const BoardSpec& spec) {
  const int m = spec.dims()[0], n = spec.dims()[1];
  // Sweep the longer axis so the frontier runs along the shorter one; ties sweep x.
  const bool sweep_x = m >= n;
  const int length = sweep_x ? m : n, height = sweep_x ? n : m;

  std::vector<std::size_t> order;
  order.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int s = 0; s < length; ++s)
    for (int c = 0; c < height; ++c) {
      const int x = sweep_x ? s : c, y = sweep_x ? c : s;
      order.push_back(static_cast<std::size_t>(x) + static_cast<std::size_t>(y) * static_cast<std::size_t>(m));
    }

  const auto adj = adjacency(spec);
  const std::size_t count = order.size();
  std::vector<std::size_t> position(count);
  for (std::size_t t = 0; t < count; ++t) position[order[t]] = t;

  std::vector<std::vector<std::size_t>> retiring(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t last = position[v];
    for (auto u : adj[v]) last = std::max(last, position[u]);
    retiring[last].push_back(v);
  }

  SweepPlan plan;
  plan.height = static_cast<std::size_t>(height);
  plan.length = static_cast<std::size_t>(length);
  plan.steps.resize(count);
  std::vector<int> slot(count, -1);
  std::uint64_t in_use = 0;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t v = order[t];
    const int free_slot = std::countr_one(in_use);
    if (free_slot >= 63) throw GuardError("frontier", "sweep state does not fit in 63 cells");
    slot[v] = free_slot;
    in_use |= std::uint64_t{1} << free_slot;
    plan.max_active = std::max<std::size_t>(plan.max_active, static_cast<std::size_t>(std::popcount(in_use)));

    Step& step = plan.steps[t];
    step.slot_bit = std::uint64_t{1} << free_slot;
    for (auto u : adj[v])
      if (position[u] < t) step.neighbor_slots |= std::uint64_t{1} << slot[u];
    for (auto r : retiring[t]) step.retire |= std::uint64_t{1} << slot[r];
    in_use &= ~step.retire;
  }
  return plan;
}

struct Key {
  std::uint64_t occ = 0;
  std::uint64_t dom = 0;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = k.occ * 0x9E3779B97F4A7C15ULL ^ (k.dom + 0x632BE59BD9B4E019ULL);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

// Widest value a weight can reach decides the coefficient type: a weight after t
// steps is bounded by (1 + |z|)^t in point mode and by 2^t in polynomial mode.
using i128 = __int128;
using u128 = unsigned __int128;

BigInt to_big(const BigInt& v) { return v; }
BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }
BigInt to_big(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}
BigInt to_big(i128 v) {
  const bool negative = v < 0;
  const BigInt magnitude = to_big(negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v));
  return negative ? BigInt(-magnitude) : magnitude;
}

bool is_zero_value(const BigInt& v) { return sgn(v) == 0; }
template <class T>
bool is_zero_value(const T& v) {
  return v == 0;
}

// Point evaluation: weight is P restricted to the configurations so far, at fixed z.
template <class T>
struct ScalarOps {
  using Weight = T;
  T z;
  Weight one() const { return T(1); }
  Weight place(const Weight& w) const { return w * z; }
  static void add(Weight& into, const Weight& w) { into += w; }
  static bool is_zero(const Weight& w) { return is_zero_value(w); }
};

// Polynomial mode: coefficients indexed by kings placed, stored from the lowest
// nonzero degree so that placing a king is an offset bump.
template <class T>
struct Series {
  std::size_t low = 0;
  std::vector<T> c;
};

template <class T>
struct SeriesOps {
  using Weight = Series<T>;
  Weight one() const { return Weight{0, {T(1)}}; }
  Weight place(const Weight& w) const { return Weight{w.low + 1, w.c}; }
  static void add(Weight& into, const Weight& w) {
    if (w.low < into.low) {
      into.c.insert(into.c.begin(), into.low - w.low, T(0));
      into.low = w.low;
    }
    const std::size_t off = w.low - into.low;
    if (into.c.size() < off + w.c.size()) into.c.resize(off + w.c.size(), T(0));
    for (std::size_t i = 0; i < w.c.size(); ++i) into.c[off + i] += w.c[i];
  }
  static bool is_zero(const Weight&) { return false; }
};

template <class Ops>
class Sweeper {
 public:
  using Weight = typename Ops::Weight;
  using Table = std::unordered_map<Key, Weight, KeyHash>;
  using Entries = std::vector<std::pair<Key, Weight>>;

  Sweeper(const SweepPlan& plan, Ops ops, const TransferOptions& opts)
      : plan_(plan), ops_(std::move(ops)), prune_(opts.prune) {
    threads_ = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  }

  Weight run(TransferStats* stats) {
    Entries current;
    current.emplace_back(Key{}, ops_.one());
    std::size_t max_states = 1;
    for (const Step& step : plan_.steps) {
      current = advance(current, step);
      max_states = std::max(max_states, current.size());
    }
    if (stats) {
      stats->frontier_height = plan_.height;
      stats->sweep_length = plan_.length;
      stats->max_active = plan_.max_active;
      stats->max_states = max_states;
    }
    for (auto& [key, w] : current)
      if (key == Key{}) return std::move(w);
    return Weight{};
  }

 private:
  // Applies the retirement check; false when the state is pruned.
  bool retire(Key& k, const Step& step) const {
    if ((k.dom & step.retire) != step.retire) {
      if (prune_) return false;
      k.dom |= kDeadBit;
    }
    k.occ &= ~step.retire;
    k.dom &= ~step.retire;
    return true;
  }

  template <class Sink>
  void expand(const Key& key, const Weight& w, const Step& step, Sink&& sink) const {
    Key empty = key;
    if (key.occ & step.neighbor_slots) empty.dom |= step.slot_bit;
    if (retire(empty, step)) sink(empty, Weight(w));

    Key placed{key.occ | step.slot_bit, key.dom | step.neighbor_slots | step.slot_bit};
    if (retire(placed, step)) sink(placed, ops_.place(w));
  }

  static void insert(Table& table, const Key& k, Weight&& w) {
    auto [it, fresh] = table.try_emplace(k);
    if (fresh)
      it->second = std::move(w);
    else
      Ops::add(it->second, std::move(w));
  }

  void drain(Table& table, Entries& out) const {
    out.reserve(out.size() + table.size());
    for (auto& entry : table)
      if (!Ops::is_zero(entry.second)) out.emplace_back(entry.first, std::move(entry.second));
  }

  Entries advance(const Entries& current, const Step& step) const {
    Entries next;
    if (threads_ <= 1 || current.size() < kParallelThreshold) {
      Table table;
      table.reserve(current.size() * 2);
      for (const auto& [key, w] : current)
        expand(key, w, step, [&](const Key& k, Weight&& x) { insert(table, k, std::move(x)); });
      drain(table, next);
      return next;
    }

    // Each worker expands a slice of the current layer into per-shard tables;
    // shard s then merges everyone's shard-s tables. Addition is exact, so the
    // result does not depend on the merge order.
    const unsigned t = threads_;
    std::vector<std::vector<Table>> local(t, std::vector<Table>(t));
    run_workers(t, [&](unsigned w) {
      const std::size_t begin = current.size() * w / t, end = current.size() * (w + 1) / t;
      auto& shards = local[w];
      for (std::size_t i = begin; i < end; ++i)
        expand(current[i].first, current[i].second, step, [&](const Key& k, Weight&& x) {
          insert(shards[KeyHash{}(k) % t], k, std::move(x));
        });
    });
    std::vector<Entries> merged(t);
    run_workers(t, [&](unsigned s) {
      Table& target = local[0][s];
      for (unsigned w = 1; w < t; ++w)
        for (auto& entry : local[w][s]) insert(target, entry.first, std::move(entry.second));
      drain(target, merged[s]);
    });
    for (auto& part : merged) std::move(part.begin(), part.end(), std::back_inserter(next));
    return next;
  }

  template <class Fn>
  static void run_workers(unsigned count, Fn&& fn) {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) pool.emplace_back([&fn, w] { fn(w); });
    for (auto& th : pool) th.join();
  }

  static constexpr std::size_t kParallelThreshold = 4096;

  const SweepPlan& plan_;
  Ops ops_;
  bool prune_;
  unsigned threads_;
};

}  // namespace

bool transfer_supported(const BoardSpec& spec) {
  if (spec.dimension() != 2) return false;
  const auto m = static_cast<std::size_t>(spec.dims()[0]);
  const auto n = static_cast<std::size_t>(spec.dims()[1]);
  return std::min(m, n) <= kMaxFrontierHeight && std::max(m, n) <= kMaxSweepLength;
}

namespace {

template <class T>
DominationPolynomial run_polynomial(const BoardSpec& spec, const SweepPlan& plan, const TransferOptions& opts,
                                    TransferStats* stats) {
  Series<T> s = Sweeper<SeriesOps<T>>(plan, SeriesOps<T>{}, opts).run(stats);
  std::vector<BigInt> coeffs(vertex_count(spec) + 1, BigInt(0));
  for (std::size_t i = 0; i < s.c.size(); ++i) coeffs.at(s.low + i) = to_big(s.c[i]);
  return DominationPolynomial(std::move(coeffs));
}

template <class T>
BigInt run_scalar(const SweepPlan& plan, long z, const TransferOptions& opts, TransferStats* stats) {
  return to_big(Sweeper<ScalarOps<T>>(plan, ScalarOps<T>{T(z)}, opts).run(stats));
}

}  // namespace

DominationPolynomial transfer_polynomial(const BoardSpec& spec, const TransferOptions& opts,
                                         TransferStats* stats) {
  require_supported(spec);
  const SweepPlan plan = plan_sweep(spec);
  const std::size_t cells = vertex_count(spec);
  DominationPolynomial p = cells <= 64    ? run_polynomial<std::uint64_t>(spec, plan, opts, stats)
                           : cells <= 128 ? run_polynomial<u128>(spec, plan, opts, stats)
                                          : run_polynomial<BigInt>(spec, plan, opts, stats);
  check_invariants(p);
  return p;
}

BigInt transfer_eval(const BoardSpec& spec, long z, const TransferOptions& opts, TransferStats* stats) {
  require_supported(spec);
  const SweepPlan plan = plan_sweep(spec);
  // |weight| <= (1 + |z|)^cells < 2^(cells * bit_width(1 + |z|)).
  const auto magnitude = static_cast<unsigned long>(z < 0 ? -z : z) + 1;
  const std::size_t bits = vertex_count(spec) * static_cast<std::size_t>(std::bit_width(magnitude));
  if (bits <= 62) return run_scalar<std::int64_t>(plan, z, opts, stats);
  if (bits <= 126) return run_scalar<i128>(plan, z, opts, stats);
  return run_scalar<BigInt>(plan, z, opts, stats);
}

ValueTable table_scan(Family family, BoundaryMode mode, Range m, Range n, long z,
                      const TransferOptions& opts) {
  if (m.first > m.last || n.first > n.last) throw ParseError("empty table range");
  ValueTable table;
  for (int x = m.first; x <= m.last; ++x) table.ms.push_back(x);
  for (int y = n.first; y <= n.last; ++y) table.ns.push_back(y);
  for (int y : table.ns) {
    auto& row = table.cells.emplace_back();
    for (int x : table.ms) row.push_back(transfer_eval(make_board(family, x, y, mode), z, opts));
  }
  return table;
}

}  // namespace kingdom
