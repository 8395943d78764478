#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simdim/family.hpp"
#include "simdim/resolvability.hpp"

namespace simdim {

enum class InvariantKind { Metric, Adjacency, Truncated };

InvariantKind invariant_kind(Truncation t) noexcept;
std::string to_string(InvariantKind kind);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::optional<std::chrono::milliseconds> time_budget;
  /// Worker count for the branch-and-bound. Value and witness do not depend
  /// on it; node counts do.
  unsigned threads = 1;
  /// Also return every minimum generator.
  bool collect_all = false;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::string strategy;
};

struct SolveReport {
  InvariantKind kind;
  Truncation truncation = Truncation::adjacency();
  std::size_t value = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_bases;
  SolveStats stats;
};

/// Minimum hitting set over explicit sets on {0..n-1}. The building block
/// under solve(); exposed for direct testing.
struct HittingSetResult {
  std::size_t value = 0;
  VertexSet witness;
  std::vector<VertexSet> all_minimum;  // filled only with collect_all
  std::uint64_t nodes = 0;
};

HittingSetResult solve_hitting_set(std::size_t n, const std::vector<VertexSet>& sets,
                                   const SolveOptions& opts = {});

/// Greedy-cover lower/upper scaffolding shared by the solver.
/// Valid lower bound on the minimum hitting set of `sets`.
std::size_t hitting_set_lower_bound(std::size_t n, const std::vector<VertexSet>& sets);

/// Disjoint-packing and degree bound on the system's minimum generator size.
std::size_t lower_bound(const DistinguisherSystem& sys);

/// Exact minimum simultaneous generator under truncation t.
SolveReport solve(const GraphFamily& fam, Truncation t, const SolveOptions& opts = {});
SolveReport solve(const DistinguisherSystem& sys, const SolveOptions& opts = {});

inline constexpr std::size_t kDefaultOracleLimit = 16;

/// Independent oracle: subsets in increasing size, lexicographic within a
/// size, checked by distinctness of distance vectors. Returns the first hit.
SolveReport brute_force(const GraphFamily& fam, Truncation t,
                        std::size_t max_size = static_cast<std::size_t>(-1),
                        std::size_t oracle_limit = kDefaultOracleLimit);

/// Every minimum generator, in lexicographic order.
std::vector<VertexSet> enumerate_bases(const GraphFamily& fam, Truncation t,
                                       const SolveOptions& opts = {});

// Shorthands used throughout the analysis code.
std::size_t sd(const GraphFamily& fam, const SolveOptions& opts = {});
std::size_t sd_a(const GraphFamily& fam, const SolveOptions& opts = {});
std::size_t dim(const LabeledGraph& g, const SolveOptions& opts = {});
std::size_t dim_a(const LabeledGraph& g, const SolveOptions& opts = {});

}  // namespace simdim
