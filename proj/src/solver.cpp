#include "simdim/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <future>
#include <limits>
#include <optional>
#include <set>

#include "simdim/error.hpp"

namespace simdim {

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static Bits from(const VertexSet& s) {
    Bits b;
    const auto& words = s.words();
    for (std::size_t i = 0; i < words.size() && i < W; ++i) b.w[i] = words[i];
    return b;
  }

  VertexSet to_set(std::size_t n) const {
    VertexSet s(n);
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t bits = w[i];
      while (bits != 0) {
        s.set(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return s;
  }

  bool any() const noexcept {
    for (auto x : w)
      if (x != 0) return true;
    return false;
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool intersects(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if ((w[i] & o.w[i]) != 0) return true;
    return false;
  }
  bool subset_of(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if ((w[i] & ~o.w[i]) != 0) return false;
    return true;
  }
  Bits minus(const Bits& o) const noexcept {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  Bits& operator|=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  void set(std::size_t i) noexcept { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const noexcept { return (w[i / 64] >> (i % 64)) & 1U; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t bits = w[i];
      while (bits != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bits&, const Bits&) = default;
};

struct Budget {
  std::uint64_t nodes;
  std::optional<Clock::time_point> deadline;
  // nodes counted locally between checks of the shared total
  std::uint64_t batch = 1024;
};

struct StopSearch {};

/// Drops duplicate and superset constraints, then orders by size so the
/// packing bound sees small sets first.
template <std::size_t W>
std::vector<Bits<W>> reduce(std::vector<Bits<W>> sets) {
  std::sort(sets.begin(), sets.end(), [](const Bits<W>& a, const Bits<W>& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return a.w < b.w;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Bits<W>> kept;
  for (const auto& s : sets) {
    bool subsumed = false;
    for (const auto& k : kept) {
      if (k.subset_of(s)) {
        subsumed = true;
        break;
      }
    }
    if (!subsumed) kept.push_back(s);
  }
  return kept;
}

template <std::size_t W>
std::vector<std::size_t> greedy_cover(std::size_t n, const std::vector<Bits<W>>& sets) {
  std::vector<bool> hit(sets.size(), false);
  std::size_t remaining = sets.size();
  std::vector<std::size_t> picked;
  std::vector<std::size_t> counts(n);
  while (remaining > 0) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!hit[i]) sets[i].for_each([&](std::size_t v) { ++counts[v]; });
    std::size_t best = 0;
    for (std::size_t v = 1; v < n; ++v)
      if (counts[v] > counts[best]) best = v;
    picked.push_back(best);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!hit[i] && sets[i].test(best)) {
        hit[i] = true;
        --remaining;
      }
    }
  }
  // Drop picks that later picks made redundant, newest first.
  for (std::size_t k = picked.size(); k-- > 0;) {
    Bits<W> without;
    for (std::size_t j = 0; j < picked.size(); ++j)
      if (j != k) without.set(picked[j]);
    bool ok = true;
    for (const auto& s : sets) {
      if (!s.intersects(without)) {
        ok = false;
        break;
      }
    }
    if (ok) picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return picked;
}

enum class Mode { Optimize, Enumerate };

template <std::size_t W>
struct Item {
  bool leaf = false;
  Bits<W> chosen;
  Bits<W> excluded;
  std::vector<std::uint32_t> unhit;
};

template <std::size_t W>
struct Shared {
  std::size_t n;
  const std::vector<Bits<W>>* sets;
  Budget budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> global_best{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> stop{false};
};

template <std::size_t W>
class Worker {
 public:
  Worker(Shared<W>& shared, Mode mode, std::size_t bound)
      : sh_(shared), mode_(mode), bound_(bound), scratch_(shared.n + 2), counts_(shared.n, 0) {}

  void collect_frontier(std::size_t depth, std::vector<Item<W>>* out) {
    collect_depth_ = depth;
    frontier_ = out;
  }

  /// Optimize: `bound` is the incumbent to beat. Enumerate: the exact target.
  void reset(std::size_t bound) {
    bound_ = bound;
    found_ = false;
    solutions_.clear();
  }

  void run(const Bits<W>& chosen, const Bits<W>& excluded,
           const std::vector<std::uint32_t>& unhit) {
    dfs(unhit, 0, chosen, excluded);
  }

  void flush() {
    if (pending_ != 0) {
      sh_.nodes.fetch_add(pending_);
      pending_ = 0;
    }
  }

  bool found() const noexcept { return found_; }
  std::size_t best_value() const noexcept { return bound_; }
  const Bits<W>& best_set() const noexcept { return best_; }
  std::vector<Bits<W>>& solutions() noexcept { return solutions_; }

 private:
  void tick() {
    if (++pending_ < sh_.budget.batch) return;
    const auto total = sh_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (sh_.stop.load(std::memory_order_relaxed)) throw StopSearch{};
    if (total > sh_.budget.nodes) throw StopSearch{};
    if (sh_.budget.deadline && Clock::now() > *sh_.budget.deadline) throw StopSearch{};
  }

  void leaf(const Bits<W>& chosen, std::size_t k) {
    if (frontier_ != nullptr) {
      if (mode_ == Mode::Enumerate ? k == bound_ : k < bound_) {
        frontier_->push_back({true, chosen, Bits<W>{}, {}});
        if (mode_ == Mode::Optimize) lower_global(k);
      }
      return;
    }
    if (mode_ == Mode::Enumerate) {
      if (k == bound_) solutions_.push_back(chosen);
      return;
    }
    if (k < bound_) {
      bound_ = k;
      best_ = chosen;
      found_ = true;
      lower_global(k);
    }
  }

  void lower_global(std::size_t k) {
    auto g = sh_.global_best.load();
    while (k < g && !sh_.global_best.compare_exchange_weak(g, k)) {
    }
  }

  void dfs(const std::vector<std::uint32_t>& parent, std::size_t level, Bits<W> chosen,
           Bits<W> excluded) {
    tick();
    const auto& sets = *sh_.sets;
    auto& unhit = scratch_[level];
    unhit.assign(parent.begin(), parent.end());

    // Unit propagation to a fixed point.
    for (bool forced = true; forced;) {
      forced = false;
      std::size_t out = 0;
      for (std::size_t i = 0; i < unhit.size(); ++i) {
        const auto& c = sets[unhit[i]];
        if (c.intersects(chosen)) continue;
        const auto avail = c.minus(excluded);
        const auto cnt = avail.count();
        if (cnt == 0) return;
        if (cnt == 1) {
          chosen |= avail;
          forced = true;
          continue;
        }
        unhit[out++] = unhit[i];
      }
      unhit.resize(out);
    }

    const std::size_t k = chosen.count();
    if (unhit.empty()) {
      leaf(chosen, k);
      return;
    }

    // Packing bound over available elements, and coverage counts.
    Bits<W> used;
    Bits<W> touched;
    std::size_t packing = 0;
    for (const auto idx : unhit) {
      const auto avail = sets[idx].minus(excluded);
      if (!avail.intersects(used)) {
        used |= avail;
        ++packing;
      }
      avail.for_each([&](std::size_t v) { ++counts_[v]; });
      touched |= avail;
    }
    std::size_t branch = sh_.n;
    std::size_t max_cov = 0;
    touched.for_each([&](std::size_t v) {
      if (counts_[v] > max_cov) {
        max_cov = counts_[v];
        branch = v;
      }
      counts_[v] = 0;
    });
    const std::size_t degree = (unhit.size() + max_cov - 1) / max_cov;
    const std::size_t lb = std::max(packing, degree);

    if (mode_ == Mode::Enumerate) {
      if (k + lb > bound_) return;
    } else {
      if (k + lb >= bound_) return;
      if (k + lb > sh_.global_best.load(std::memory_order_relaxed)) return;
    }

    if (frontier_ != nullptr && level == collect_depth_) {
      frontier_->push_back({false, chosen, excluded, unhit});
      return;
    }

    Bits<W> with = chosen;
    with.set(branch);
    dfs(unhit, level + 1, with, excluded);
    excluded.set(branch);
    dfs(unhit, level + 1, chosen, excluded);
  }

  Shared<W>& sh_;
  Mode mode_;
  std::size_t bound_;
  std::vector<std::vector<std::uint32_t>> scratch_;
  std::vector<std::size_t> counts_;
  std::uint64_t pending_ = 0;
  bool found_ = false;
  Bits<W> best_;
  std::vector<Bits<W>> solutions_;
  std::size_t collect_depth_ = std::numeric_limits<std::size_t>::max();
  std::vector<Item<W>>* frontier_ = nullptr;
};

template <std::size_t W>
std::size_t root_lower_bound(const std::vector<Bits<W>>& sets, std::size_t n) {
  if (sets.empty()) return 0;
  Bits<W> used;
  std::size_t packing = 0;
  std::vector<std::size_t> counts(n, 0);
  for (const auto& s : sets) {
    if (!s.intersects(used)) {
      used |= s;
      ++packing;
    }
    s.for_each([&](std::size_t v) { ++counts[v]; });
  }
  const auto max_cov = *std::max_element(counts.begin(), counts.end());
  return std::max(packing, (sets.size() + max_cov - 1) / max_cov);
}

std::size_t frontier_depth(unsigned threads) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < std::size_t{threads} * 8) ++d;
  return d;
}

/// Runs a search in `mode` over the reduced sets. Optimize returns the first
/// leaf in depth-first order among those of minimum size below `bound`;
/// Enumerate returns every leaf of size exactly `bound`. The parallel path
/// reproduces both results exactly.
template <std::size_t W>
struct SearchOutcome {
  bool found = false;
  std::size_t value = 0;
  Bits<W> best;
  std::vector<Bits<W>> solutions;
};

template <std::size_t W>
SearchOutcome<W> search(Shared<W>& sh, Mode mode, std::size_t bound, unsigned threads) {
  std::vector<std::uint32_t> all(sh.sets->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  if (mode == Mode::Optimize) sh.global_best.store(bound);

  SearchOutcome<W> out;
  if (threads <= 1) {
    Worker<W> w(sh, mode, bound);
    w.run(Bits<W>{}, Bits<W>{}, all);
    w.flush();
    out.found = w.found();
    out.value = w.best_value();
    out.best = w.best_set();
    out.solutions = std::move(w.solutions());
    return out;
  }

  std::vector<Item<W>> items;
  {
    Worker<W> collector(sh, mode, bound);
    collector.collect_frontier(frontier_depth(threads), &items);
    collector.run(Bits<W>{}, Bits<W>{}, all);
    collector.flush();
  }

  struct ItemResult {
    bool found = false;
    std::size_t value = 0;
    Bits<W> best;
    std::vector<Bits<W>> solutions;
  };
  std::vector<ItemResult> results(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].leaf) continue;
    results[i].found = true;
    results[i].value = items[i].chosen.count();
    results[i].best = items[i].chosen;
    results[i].solutions.push_back(items[i].chosen);
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    Worker<W> w(sh, mode, bound);
    try {
      for (;;) {
        const auto i = next.fetch_add(1);
        if (i >= items.size()) break;
        if (items[i].leaf) continue;
        w.reset(bound);
        w.run(items[i].chosen, items[i].excluded, items[i].unhit);
        results[i].found = w.found();
        results[i].value = w.best_value();
        results[i].best = w.best_set();
        results[i].solutions = std::move(w.solutions());
      }
    } catch (...) {
      sh.stop.store(true);
      w.flush();
      throw;
    }
    w.flush();
  };
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work));
  std::exception_ptr failure;
  for (auto& j : jobs) {
    try {
      j.get();
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (mode == Mode::Enumerate) {
    for (auto& r : results)
      out.solutions.insert(out.solutions.end(), r.solutions.begin(), r.solutions.end());
    return out;
  }
  // Minimum value, earliest item on ties: the first optimal leaf in
  // depth-first order, which is what the sequential search returns.
  for (const auto& r : results) {
    if (r.found && (!out.found || r.value < out.value)) {
      out.found = true;
      out.value = r.value;
      out.best = r.best;
    }
  }
  return out;
}

template <std::size_t W>
HittingSetResult solve_fixed(std::size_t n, const std::vector<VertexSet>& input,
                             const SolveOptions& opts) {
  HittingSetResult result;
  result.witness = VertexSet(n);
  std::vector<Bits<W>> raw;
  raw.reserve(input.size());
  for (const auto& s : input) {
    if (s.none()) throw Error(ErrorKind::InvalidInput, "empty constraint cannot be hit");
    raw.push_back(Bits<W>::from(s));
  }
  const auto sets = reduce(std::move(raw));
  if (sets.empty()) {
    if (opts.collect_all) result.all_minimum.push_back(VertexSet(n));
    return result;
  }

  const auto greedy = greedy_cover(n, sets);
  Bits<W> greedy_set;
  for (auto v : greedy) greedy_set.set(v);
  const std::size_t lb = root_lower_bound(sets, n);

  Shared<W> sh;
  sh.n = n;
  sh.sets = &sets;
  sh.budget.nodes = opts.node_budget;
  sh.budget.batch = std::clamp<std::uint64_t>(opts.node_budget / 64, 1, 1024);
  if (opts.time_budget) sh.budget.deadline = Clock::now() + *opts.time_budget;

  std::size_t value = greedy.size();
  Bits<W> best = greedy_set;
  try {
    if (lb < value) {
      auto found = search(sh, Mode::Optimize, value, opts.threads);
      if (found.found) {
        value = found.value;
        best = found.best;
      }
    }
    if (opts.collect_all) {
      auto all = search(sh, Mode::Enumerate, value, opts.threads);
      for (const auto& s : all.solutions) result.all_minimum.push_back(s.to_set(n));
      sort_lexicographic(result.all_minimum);
    }
  } catch (const StopSearch&) {
    throw BudgetExceeded(lb, value, sh.nodes.load());
  }
  result.value = value;
  result.witness = best.to_set(n);
  result.nodes = sh.nodes.load();
  return result;
}

template <std::size_t W>
std::size_t lower_bound_fixed(std::size_t n, const std::vector<VertexSet>& input) {
  std::vector<Bits<W>> raw;
  for (const auto& s : input) raw.push_back(Bits<W>::from(s));
  return root_lower_bound(reduce(std::move(raw)), n);
}

std::size_t words_needed(std::size_t n) {
  if (n <= 64) return 1;
  if (n <= 128) return 2;
  if (n <= 256) return 4;
  if (n <= 512) return 8;
  throw Error(ErrorKind::UniverseTooLarge,
              "solver supports at most 512 vertices, got " + std::to_string(n));
}

std::vector<VertexSet> resolver_sets(const DistinguisherSystem& sys) {
  std::vector<VertexSet> sets;
  sets.reserve(sys.constraints().size());
  for (const auto& c : sys.constraints()) sets.push_back(c.resolvers);
  return sets;
}

}  // namespace

InvariantKind invariant_kind(Truncation t) noexcept {
  if (t.is_geodesic()) return InvariantKind::Metric;
  if (t.value() == 2) return InvariantKind::Adjacency;
  return InvariantKind::Truncated;
}

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Metric:
      return "metric";
    case InvariantKind::Adjacency:
      return "adjacency";
    case InvariantKind::Truncated:
      return "truncated";
  }
  return "unknown";
}

HittingSetResult solve_hitting_set(std::size_t n, const std::vector<VertexSet>& sets,
                                   const SolveOptions& opts) {
  switch (words_needed(n)) {
    case 1:
      return solve_fixed<1>(n, sets, opts);
    case 2:
      return solve_fixed<2>(n, sets, opts);
    case 4:
      return solve_fixed<4>(n, sets, opts);
    default:
      return solve_fixed<8>(n, sets, opts);
  }
}

std::size_t hitting_set_lower_bound(std::size_t n, const std::vector<VertexSet>& sets) {
  switch (words_needed(n)) {
    case 1:
      return lower_bound_fixed<1>(n, sets);
    case 2:
      return lower_bound_fixed<2>(n, sets);
    case 4:
      return lower_bound_fixed<4>(n, sets);
    default:
      return lower_bound_fixed<8>(n, sets);
  }
}

std::size_t lower_bound(const DistinguisherSystem& sys) {
  return hitting_set_lower_bound(sys.order(), resolver_sets(sys));
}

SolveReport solve(const DistinguisherSystem& sys, const SolveOptions& opts) {
  const auto start = Clock::now();
  auto hs = solve_hitting_set(sys.order(), resolver_sets(sys), opts);

  if (!is_generator(sys, hs.witness) || hs.witness.count() != hs.value)
    throw Error(ErrorKind::ValidationFailed, "solver witness failed re-verification");

  SolveReport report;
  report.kind = invariant_kind(sys.truncation());
  report.truncation = sys.truncation();
  report.value = hs.value;
  report.witness = std::move(hs.witness);
  if (opts.collect_all) {
    for (const auto& b : hs.all_minimum)
      if (!is_generator(sys, b) || b.count() != hs.value)
        throw Error(ErrorKind::ValidationFailed, "enumerated basis failed re-verification");
    report.all_bases = std::move(hs.all_minimum);
  }
  report.stats.nodes = hs.nodes;
  report.stats.strategy = opts.threads > 1 ? "bnb-parallel" : "bnb";
  if (opts.collect_all) report.stats.strategy += "+enumerate";
  report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

SolveReport solve(const GraphFamily& fam, Truncation t, const SolveOptions& opts) {
  return solve(build_system(fam, t), opts);
}

SolveReport brute_force(const GraphFamily& fam, Truncation t, std::size_t max_size,
                        std::size_t oracle_limit) {
  const auto start = Clock::now();
  const std::size_t n = fam.order();
  if (n > oracle_limit)
    throw Error(ErrorKind::OracleLimitExceeded,
                "brute force limited to " + std::to_string(oracle_limit) + " vertices, got " +
                    std::to_string(n));

  std::vector<DistanceMatrix> dist;
  for (const auto& g : fam) dist.push_back(distance_matrix(g, t));

  auto resolves = [&](const std::vector<std::size_t>& s) {
    for (const auto& d : dist) {
      std::set<std::vector<int>> seen;
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<int> r;
        r.reserve(s.size());
        for (auto w : s) r.push_back(d.at(x, w));
        if (!seen.insert(std::move(r)).second) return false;
      }
    }
    return true;
  };

  std::uint64_t checked = 0;
  const std::size_t cap = std::min(max_size, n);
  for (std::size_t k = 0; k <= cap; ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
      ++checked;
      if (resolves(comb)) {
        SolveReport report;
        report.kind = invariant_kind(t);
        report.truncation = t;
        report.value = k;
        report.witness = VertexSet::from_indices(n, comb);
        report.stats.nodes = checked;
        report.stats.strategy = "brute-force";
        report.stats.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return report;
      }
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw BudgetExceeded(cap + 1, n, checked);
}

std::vector<VertexSet> enumerate_bases(const GraphFamily& fam, Truncation t,
                                       const SolveOptions& opts) {
  auto o = opts;
  o.collect_all = true;
  return *solve(fam, t, o).all_bases;
}

std::size_t sd(const GraphFamily& fam, const SolveOptions& opts) {
  return solve(fam, Truncation::geodesic(), opts).value;
}

std::size_t sd_a(const GraphFamily& fam, const SolveOptions& opts) {
  return solve(fam, Truncation::adjacency(), opts).value;
}

std::size_t dim(const LabeledGraph& g, const SolveOptions& opts) {
  return sd(singleton_family(g), opts);
}

std::size_t dim_a(const LabeledGraph& g, const SolveOptions& opts) {
  return sd_a(singleton_family(g), opts);
}

}  // namespace simdim
