#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "simdim/universe.hpp"
#include "simdim/vertex_set.hpp"

namespace simdim {

using Edge = std::pair<std::size_t, std::size_t>;

/// Immutable simple undirected graph on a labeled universe.
class LabeledGraph {
 public:
  LabeledGraph(UniversePtr universe, const std::vector<Edge>& edges,
               std::string name = {});
  /// Rows must be symmetric with an empty diagonal.
  LabeledGraph(UniversePtr universe, std::vector<VertexSet> rows,
               std::string name = {});

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t order() const noexcept { return rows_.size(); }
  const std::string& name() const noexcept { return name_; }
  LabeledGraph renamed(std::string name) const;

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }
  VertexSet closed_neighborhood(std::size_t v) const;
  /// Union of closed neighborhoods of the members of `set`.
  VertexSet closed_neighborhood(const VertexSet& set) const;
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const noexcept;
  /// Edges as (low, high) index pairs sorted lexicographically.
  std::vector<Edge> edges() const;
  const std::vector<VertexSet>& rows() const noexcept { return rows_; }

  const std::string& label(std::size_t v) const { return universe_->label(v); }

  /// Labeled equality: same universe labels and same edge set. Names ignored.
  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  UniversePtr universe_;
  std::vector<VertexSet> rows_;
  std::string name_;
};

/// Distance cap: a positive integer t, or geodesic (uncapped).
class Truncation {
 public:
  static constexpr Truncation geodesic() noexcept { return Truncation{0}; }
  static Truncation finite(int t);
  static Truncation adjacency() noexcept { return Truncation{2}; }

  bool is_geodesic() const noexcept { return value_ == 0; }
  /// Only meaningful when !is_geodesic().
  int value() const noexcept { return value_; }
  std::string to_string() const;

  friend bool operator==(Truncation, Truncation) = default;

 private:
  constexpr explicit Truncation(int v) noexcept : value_(v) {}
  int value_;
};

class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, Truncation t, std::vector<std::uint16_t> entries)
      : n_(n), t_(t), entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return n_; }
  Truncation truncation() const noexcept { return t_; }
  int at(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }

 private:
  std::size_t n_;
  Truncation t_;
  std::vector<std::uint16_t> entries_;
};

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const LabeledGraph& g, std::size_t source);

/// Truncated distances. Vertices in different components sit at distance t;
/// the geodesic variant throws DisconnectedGraph instead.
DistanceMatrix distance_matrix(const LabeledGraph& g, Truncation t);

LabeledGraph complement(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

inline constexpr int kInfinite = std::numeric_limits<int>::max();

struct GraphInvariants {
  int diameter;  // kInfinite when disconnected
  int girth;     // kInfinite when acyclic
  std::size_t min_degree;
  std::size_t max_degree;
  bool connected;
};

GraphInvariants basic_invariants(const LabeledGraph& g);

enum class TwinKind { Singleton, TrueTwin, FalseTwin };

struct TwinClass {
  VertexSet members;
  TwinKind kind;
};

/// Partition of V into twin classes, listed by lowest member.
class TwinPartition {
 public:
  TwinPartition(std::size_t n, std::vector<TwinClass> classes);

  const std::vector<TwinClass>& classes() const noexcept { return classes_; }
  /// Number of true (resp. false) twin classes, i.e. |T(G)| and |F(G)|.
  std::size_t true_class_count() const noexcept { return true_count_; }
  std::size_t false_class_count() const noexcept { return false_count_; }
  const VertexSet& true_twin_vertices() const noexcept { return v_t_; }
  const VertexSet& false_twin_vertices() const noexcept { return v_f_; }
  /// V_T minus the lowest-index member of each true class; likewise for V_F.
  const VertexSet& true_twin_vertices_but_one() const noexcept { return v_t_prime_; }
  const VertexSet& false_twin_vertices_but_one() const noexcept { return v_f_prime_; }
  bool twins_free() const noexcept { return true_count_ == 0 && false_count_ == 0; }
  /// Index into classes() of the class containing v.
  std::size_t class_of(std::size_t v) const { return class_of_[v]; }

 private:
  std::vector<TwinClass> classes_;
  std::vector<std::size_t> class_of_;
  std::size_t true_count_ = 0;
  std::size_t false_count_ = 0;
  VertexSet v_t_, v_f_, v_t_prime_, v_f_prime_;
};

TwinPartition twin_partition(const LabeledGraph& g);

bool are_twins(const LabeledGraph& g, std::size_t x, std::size_t y);

/// Subgraph on N[b] holding every edge with at least one endpoint in b.
/// Its universe is a fresh one containing the labels of N[b] in order.
LabeledGraph weakly_induced_subgraph(const LabeledGraph& g, const VertexSet& b);

/// Checks that `mapping` (indices of a's universe -> indices of b's) is an
/// edge-preserving bijection between the two graphs.
bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    const std::vector<std::size_t>& mapping);

// Standard graphs on v1..vn.
LabeledGraph path_graph(std::size_t n);
LabeledGraph cycle_graph(std::size_t n);
LabeledGraph complete_graph(std::size_t n);
LabeledGraph empty_graph(std::size_t n);
/// K_{1,n-1} on n vertices with center v1.
LabeledGraph star_graph(std::size_t n);
LabeledGraph petersen_graph();

LabeledGraph path_graph(UniversePtr universe, std::string name = {});
LabeledGraph cycle_graph(UniversePtr universe, std::string name = {});
LabeledGraph complete_graph(UniversePtr universe, std::string name = {});
LabeledGraph empty_graph(UniversePtr universe, std::string name = {});

}  // namespace simdim
