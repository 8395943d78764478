#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "simdim/graph.hpp"

namespace simdim {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection. Kept local so sampled
/// families match across standard libraries.
template <typename Engine>
std::uint64_t bounded_draw(Engine& eng, std::uint64_t bound) {
  const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} / bound) * bound;
  for (;;) {
    const std::uint64_t x = eng();
    if (x < limit) return x % bound;
  }
}

/// True with probability num/den.
bool coin(Rng& rng, std::uint64_t num, std::uint64_t den);

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// G(n, num/den) on the given universe.
LabeledGraph random_graph(Rng& rng, UniversePtr universe, std::uint64_t num, std::uint64_t den,
                          std::string name = {});

/// Random labeled tree (uniform attachment) plus extra edges with
/// probability num/den, so the result is always connected.
LabeledGraph random_connected_graph(Rng& rng, UniversePtr universe, std::uint64_t num,
                                    std::uint64_t den, std::string name = {});

LabeledGraph random_tree(Rng& rng, UniversePtr universe, std::string name = {});

}  // namespace simdim
