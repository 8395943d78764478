#include <doctest.h>

#include "oracles.hpp"
#include "simdim/solver.hpp"

using namespace simdim;

TEST_CASE("dim_A(G) = n-1 exactly for K_n and N_n, over all graphs on n <= 6 vertices") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto u = make_indexed_universe(n);
    std::vector<Edge> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t full = (std::uint64_t{1} << slots.size()) - 1;
    std::vector<std::uint64_t> extremal;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      std::vector<Edge> es;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) es.push_back(slots[b]);
      const LabeledGraph g(u, es);
      const auto v = solve(singleton_family(g), Truncation::adjacency()).value;
      // the oracle only needs to confirm that no (n-2)-set generates
      bool small = false;
      for (const auto& s : oracle::subsets_of_size(n, n - 2))
        if (oracle::resolves(oracle::truncated(oracle::adjacency(g), 2), s)) {
          small = true;
          break;
        }
      CHECK((v == n - 1) == !small);
      if (v == n - 1) extremal.push_back(mask);
    }
    CAPTURE(n);
    CHECK(extremal == std::vector<std::uint64_t>{0, full});
  }
}
