#include "simdim/resolvability.hpp"

#include <future>

namespace simdim {

namespace {

std::vector<Constraint> constraints_for(const LabeledGraph& g, std::size_t graph_index,
                                        Truncation t) {
  const auto d = distance_matrix(g, t);
  const std::size_t n = g.order();
  std::vector<Constraint> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      VertexSet resolvers(n);
      for (std::size_t w = 0; w < n; ++w)
        if (d.at(w, u) != d.at(w, v)) resolvers.set(w);
      out.push_back({graph_index, u, v, std::move(resolvers)});
    }
  }
  return out;
}

}  // namespace

std::optional<Constraint> DistinguisherSystem::first_unresolved(const VertexSet& s) const {
  for (const auto& c : constraints_)
    if (!c.resolvers.intersects(s)) return c;
  return std::nullopt;
}

DistinguisherSystem build_system(const GraphFamily& fam, Truncation t) {
  std::vector<std::vector<Constraint>> per_graph(fam.size());
  if (fam.size() > 1 && fam.order() >= 24) {
    std::vector<std::future<std::vector<Constraint>>> jobs;
    for (std::size_t i = 0; i < fam.size(); ++i)
      jobs.push_back(std::async(std::launch::async, constraints_for, std::cref(fam[i]), i, t));
    for (std::size_t i = 0; i < fam.size(); ++i) per_graph[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < fam.size(); ++i) per_graph[i] = constraints_for(fam[i], i, t);
  }

  std::vector<Constraint> all;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    names.push_back(fam[i].name());
    all.insert(all.end(), std::make_move_iterator(per_graph[i].begin()),
               std::make_move_iterator(per_graph[i].end()));
  }
  return DistinguisherSystem(fam.universe(), t, std::move(names), std::move(all));
}

bool is_generator(const DistinguisherSystem& sys, const VertexSet& s) {
  return !sys.first_unresolved(s).has_value();
}

bool is_generator(const GraphFamily& fam, const VertexSet& s, Truncation t) {
  return is_generator(build_system(fam, t), s);
}

bool is_generator(const LabeledGraph& g, const VertexSet& s, Truncation t) {
  return is_generator(singleton_family(g), s, t);
}

bool is_dominating(const LabeledGraph& g, const VertexSet& s) {
  return g.closed_neighborhood(s) == VertexSet::full(g.order());
}

bool is_dominating(const GraphFamily& fam, const VertexSet& s) {
  for (const auto& g : fam)
    if (!is_dominating(g, s)) return false;
  return true;
}

std::optional<std::size_t> contained_in_some_neighborhood(const LabeledGraph& g,
                                                          const VertexSet& s) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (s.is_subset_of(g.neighbors(v))) return v;
  return std::nullopt;
}

}  // namespace simdim
