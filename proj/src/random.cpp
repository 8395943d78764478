#include "simdim/random.hpp"

#include <numeric>

namespace simdim {

bool coin(Rng& rng, std::uint64_t num, std::uint64_t den) { return bounded_draw(rng, den) < num; }

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[bounded_draw(rng, i)]);
  return p;
}

LabeledGraph random_graph(Rng& rng, UniversePtr universe, std::uint64_t num, std::uint64_t den,
                          std::string name) {
  const std::size_t n = universe->size();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng, num, den)) edges.emplace_back(u, v);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

LabeledGraph random_tree(Rng& rng, UniversePtr universe, std::string name) {
  const std::size_t n = universe->size();
  const auto order = random_permutation(rng, n);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(order[i], order[bounded_draw(rng, i)]);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

LabeledGraph random_connected_graph(Rng& rng, UniversePtr universe, std::uint64_t num,
                                    std::uint64_t den, std::string name) {
  const auto tree = random_tree(rng, universe);
  auto edges = tree.edges();
  const std::size_t n = universe->size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && coin(rng, num, den)) edges.emplace_back(u, v);
  return LabeledGraph(std::move(universe), edges, std::move(name));
}

}  // namespace simdim
