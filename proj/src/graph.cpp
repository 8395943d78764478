#include "simdim/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "simdim/error.hpp"

namespace simdim {

namespace {

std::vector<VertexSet> rows_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::InvalidInput, "edge endpoint outside the universe");
    if (u == v) throw Error(ErrorKind::InvalidInput, "self-loops are not allowed");
    rows[u].set(v);
    rows[v].set(u);
  }
  return rows;
}

}  // namespace

LabeledGraph::LabeledGraph(UniversePtr universe, const std::vector<Edge>& edges,
                           std::string name)
    : universe_(std::move(universe)), name_(std::move(name)) {
  if (!universe_) throw Error(ErrorKind::InvalidInput, "graph without a universe");
  rows_ = rows_from_edges(universe_->size(), edges);
}

LabeledGraph::LabeledGraph(UniversePtr universe, std::vector<VertexSet> rows,
                           std::string name)
    : universe_(std::move(universe)), rows_(std::move(rows)), name_(std::move(name)) {
  if (!universe_) throw Error(ErrorKind::InvalidInput, "graph without a universe");
  const std::size_t n = universe_->size();
  if (rows_.size() != n) throw Error(ErrorKind::InvalidInput, "row count differs from universe size");
  for (std::size_t u = 0; u < n; ++u) {
    if (rows_[u].universe_size() != n)
      throw Error(ErrorKind::InvalidInput, "row width differs from universe size");
    if (rows_[u].test(u)) throw Error(ErrorKind::InvalidInput, "self-loops are not allowed");
    rows_[u].for_each([&](std::size_t v) {
      if (!rows_[v].test(u)) throw Error(ErrorKind::InvalidInput, "adjacency is not symmetric");
    });
  }
}

LabeledGraph LabeledGraph::renamed(std::string name) const {
  LabeledGraph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

VertexSet LabeledGraph::closed_neighborhood(std::size_t v) const {
  VertexSet s = rows_[v];
  s.set(v);
  return s;
}

VertexSet LabeledGraph::closed_neighborhood(const VertexSet& set) const {
  VertexSet out(order());
  set.for_each([&](std::size_t v) {
    out |= rows_[v];
    out.set(v);
  });
  return out;
}

std::size_t LabeledGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
}

Truncation Truncation::finite(int t) {
  if (t < 1) throw Error(ErrorKind::InvalidInput, "truncation must be a positive integer");
  if (t > 60000) throw Error(ErrorKind::InvalidInput, "truncation too large; use geodesic");
  return Truncation{t};
}

std::string Truncation::to_string() const {
  return is_geodesic() ? std::string("inf") : std::to_string(value_);
}

std::vector<int> bfs_distances(const LabeledGraph& g, std::size_t source) {
  const std::size_t n = g.order();
  std::vector<int> dist(n, -1);
  VertexSet visited(n);
  VertexSet frontier(n);
  frontier.set(source);
  visited.set(source);
  int level = 0;
  while (frontier.any()) {
    VertexSet next(n);
    frontier.for_each([&](std::size_t v) {
      dist[v] = level;
      next |= g.neighbors(v);
    });
    next -= visited;
    visited |= next;
    frontier = std::move(next);
    ++level;
  }
  return dist;
}

DistanceMatrix distance_matrix(const LabeledGraph& g, Truncation t) {
  const std::size_t n = g.order();
  std::vector<std::uint16_t> entries(n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (std::size_t v = 0; v < n; ++v) {
      int d = dist[v];
      if (d < 0) {
        if (t.is_geodesic())
          throw Error(ErrorKind::DisconnectedGraph,
                      "graph '" + g.name() + "' is disconnected; geodesic distance undefined");
        d = t.value();
      } else if (!t.is_geodesic()) {
        d = std::min(d, t.value());
      }
      entries[s * n + v] = static_cast<std::uint16_t>(d);
    }
  }
  return DistanceMatrix(n, t, std::move(entries));
}

LabeledGraph complement(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) rows.push_back(g.closed_neighborhood(v).complement());
  return LabeledGraph(g.universe(), std::move(rows), g.name().empty() ? "" : "co-" + g.name());
}

bool is_connected(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

GraphInvariants basic_invariants(const LabeledGraph& g) {
  const std::size_t n = g.order();
  GraphInvariants inv{0, kInfinite, n == 0 ? 0 : n, 0, true};
  for (std::size_t v = 0; v < n; ++v) {
    inv.min_degree = std::min(inv.min_degree, g.degree(v));
    inv.max_degree = std::max(inv.max_degree, g.degree(v));
  }
  if (n == 0) inv.min_degree = 0;

  for (std::size_t s = 0; s < n; ++s) {
    // BFS with parents; every non-tree edge closes a cycle through s's tree.
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      g.neighbors(x).for_each([&](std::size_t y) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          inv.girth = std::min(inv.girth, dist[x] + dist[y] + 1);
        }
      });
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        inv.connected = false;
      } else if (inv.diameter != kInfinite) {
        inv.diameter = std::max(inv.diameter, dist[v]);
      }
    }
    if (!inv.connected) inv.diameter = kInfinite;
  }
  return inv;
}

TwinPartition::TwinPartition(std::size_t n, std::vector<TwinClass> classes)
    : classes_(std::move(classes)),
      class_of_(n, n),
      v_t_(n),
      v_f_(n),
      v_t_prime_(n),
      v_f_prime_(n) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& cls = classes_[c];
    cls.members.for_each([&](std::size_t v) {
      if (class_of_[v] != n) throw Error(ErrorKind::InvalidInput, "twin classes overlap");
      class_of_[v] = c;
    });
    VertexSet but_one = cls.members;
    but_one.reset(cls.members.first());
    if (cls.kind == TwinKind::TrueTwin) {
      ++true_count_;
      v_t_ |= cls.members;
      v_t_prime_ |= but_one;
    } else if (cls.kind == TwinKind::FalseTwin) {
      ++false_count_;
      v_f_ |= cls.members;
      v_f_prime_ |= but_one;
    }
  }
  if (std::find(class_of_.begin(), class_of_.end(), n) != class_of_.end())
    throw Error(ErrorKind::InvalidInput, "twin classes do not cover the universe");
}

TwinPartition twin_partition(const LabeledGraph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<VertexSet::Word>, VertexSet> closed_groups;
  std::map<std::vector<VertexSet::Word>, VertexSet> open_groups;
  for (std::size_t v = 0; v < n; ++v) {
    closed_groups.try_emplace(g.closed_neighborhood(v).words(), n).first->second.set(v);
    open_groups.try_emplace(g.neighbors(v).words(), n).first->second.set(v);
  }

  std::vector<TwinClass> classes;
  std::vector<bool> placed(n, false);
  auto place = [&](const VertexSet& members, TwinKind kind) {
    members.for_each([&](std::size_t v) { placed[v] = true; });
    classes.push_back({members, kind});
  };
  for (const auto& [key, members] : closed_groups)
    if (members.count() >= 2) place(members, TwinKind::TrueTwin);
  for (const auto& [key, members] : open_groups) {
    if (members.count() < 2) continue;
    // A vertex cannot have both a true and a false twin in a simple graph.
    bool overlap = false;
    members.for_each([&](std::size_t v) { overlap = overlap || placed[v]; });
    assert(!overlap);
    if (overlap) throw Error(ErrorKind::InvalidInput, "inconsistent twin structure");
    place(members, TwinKind::FalseTwin);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!placed[v]) classes.push_back({VertexSet(n, {v}), TwinKind::Singleton});

  std::sort(classes.begin(), classes.end(), [](const TwinClass& a, const TwinClass& b) {
    return a.members.first() < b.members.first();
  });
  return TwinPartition(n, std::move(classes));
}

bool are_twins(const LabeledGraph& g, std::size_t x, std::size_t y) {
  return g.neighbors(x) == g.neighbors(y) ||
         g.closed_neighborhood(x) == g.closed_neighborhood(y);
}

LabeledGraph weakly_induced_subgraph(const LabeledGraph& g, const VertexSet& b) {
  if (b.none()) throw Error(ErrorKind::EmptySubset, "weakly induced subgraph needs a nonempty set");
  const VertexSet support = g.closed_neighborhood(b);
  const auto old_index = support.members();
  std::vector<std::size_t> new_index(g.order(), g.order());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < old_index.size(); ++i) {
    new_index[old_index[i]] = i;
    labels.push_back(g.label(old_index[i]));
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (b.test(u) || b.test(v)) edges.emplace_back(new_index[u], new_index[v]);
  return LabeledGraph(make_universe(std::move(labels)), edges, g.name() + "[w]");
}

bool is_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                    const std::vector<std::size_t>& mapping) {
  if (a.order() != b.order() || mapping.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (auto m : mapping) {
    if (m >= b.order() || hit[m]) return false;
    hit[m] = true;
  }
  if (a.edge_count() != b.edge_count()) return false;
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

LabeledGraph path_graph(UniversePtr universe, std::string name) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < universe->size(); ++i) edges.emplace_back(i - 1, i);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

LabeledGraph cycle_graph(UniversePtr universe, std::string name) {
  const std::size_t n = universe->size();
  if (n < 3) throw Error(ErrorKind::InvalidInput, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  edges.emplace_back(0, n - 1);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

LabeledGraph complete_graph(UniversePtr universe, std::string name) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < universe->size(); ++i)
    for (std::size_t j = i + 1; j < universe->size(); ++j) edges.emplace_back(i, j);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

LabeledGraph empty_graph(UniversePtr universe, std::string name) {
  return LabeledGraph(std::move(universe), std::vector<Edge>{}, std::move(name));
}

LabeledGraph path_graph(std::size_t n) {
  return path_graph(make_indexed_universe(n), "P" + std::to_string(n));
}
LabeledGraph cycle_graph(std::size_t n) {
  return cycle_graph(make_indexed_universe(n), "C" + std::to_string(n));
}
LabeledGraph complete_graph(std::size_t n) {
  return complete_graph(make_indexed_universe(n), "K" + std::to_string(n));
}
LabeledGraph empty_graph(std::size_t n) {
  return empty_graph(make_indexed_universe(n), "N" + std::to_string(n));
}

LabeledGraph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, i);
  return LabeledGraph(make_indexed_universe(n), edges, "K1," + std::to_string(n == 0 ? 0 : n - 1));
}

LabeledGraph petersen_graph() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return LabeledGraph(make_indexed_universe(10), edges, "Petersen");
}

}  // namespace simdim
