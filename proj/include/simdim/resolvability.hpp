#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simdim/family.hpp"

namespace simdim {

/// One (graph, unordered pair) requirement: a generator must contain a
/// vertex of `resolvers`. Both u and v always belong to `resolvers`, which is
/// exactly the "pairs outside S need an external resolver" reading.
struct Constraint {
  std::size_t graph;
  std::size_t u;
  std::size_t v;
  VertexSet resolvers;
};

/// The hitting-set view of a (family, truncation) pair. One constraint per
/// graph per pair, no deduplication across graphs.
class DistinguisherSystem {
 public:
  DistinguisherSystem(UniversePtr universe, Truncation t, std::vector<std::string> graph_names,
                      std::vector<Constraint> constraints)
      : universe_(std::move(universe)),
        t_(t),
        graph_names_(std::move(graph_names)),
        constraints_(std::move(constraints)) {}

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t order() const noexcept { return universe_->size(); }
  Truncation truncation() const noexcept { return t_; }
  const std::vector<std::string>& graph_names() const noexcept { return graph_names_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  /// First constraint that `s` fails to hit, in construction order.
  std::optional<Constraint> first_unresolved(const VertexSet& s) const;

 private:
  UniversePtr universe_;
  Truncation t_;
  std::vector<std::string> graph_names_;
  std::vector<Constraint> constraints_;
};

DistinguisherSystem build_system(const GraphFamily& fam, Truncation t);

bool is_generator(const DistinguisherSystem& sys, const VertexSet& s);
bool is_generator(const GraphFamily& fam, const VertexSet& s, Truncation t);
bool is_generator(const LabeledGraph& g, const VertexSet& s, Truncation t);

bool is_dominating(const LabeledGraph& g, const VertexSet& s);
bool is_dominating(const GraphFamily& fam, const VertexSet& s);

/// Some v with s ⊆ N(v), lowest index first.
std::optional<std::size_t> contained_in_some_neighborhood(const LabeledGraph& g,
                                                          const VertexSet& s);

}  // namespace simdim
