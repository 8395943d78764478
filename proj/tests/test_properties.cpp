// Randomized and exhaustive properties. Instances come from a local seeded
// generator so the corpus does not depend on the library's sampler.
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simdim/error.hpp"
#include "simdim/family.hpp"
#include "simdim/solver.hpp"

using namespace simdim;

namespace {

constexpr int kInstances = 250;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  LabeledGraph graph(const UniversePtr& u, double p, bool connected, const std::string& name) {
    const std::size_t n = u->size();
    for (;;) {
      std::vector<Edge> es;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (coin(p)) es.emplace_back(i, j);
      LabeledGraph g(u, es, name);
      if (!connected || oracle::connected(oracle::adjacency(g))) return g;
    }
  }

  GraphFamily family(std::size_t n, std::size_t k, bool connected) {
    auto u = make_indexed_universe(n);
    std::vector<LabeledGraph> gs;
    const double p = 0.25 + 0.5 * static_cast<double>(between(0, 10)) / 10.0;
    for (std::size_t i = 0; i < k; ++i) gs.push_back(graph(u, p, connected, "R" + std::to_string(i + 1)));
    return GraphFamily(u, gs);
  }

  VertexSet subset(std::size_t n) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
      if (coin(0.4)) s.set(v);
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

std::size_t min_a(const LabeledGraph& g) { return solve(singleton_family(g), Truncation::adjacency()).value; }
std::size_t min_m(const LabeledGraph& g) { return solve(singleton_family(g), Truncation::geodesic()).value; }

int oracle_t(Truncation t) { return t.is_geodesic() ? 0 : t.value(); }

}  // namespace

TEST_CASE("bound chain: max dim_A <= Sd_A <= |V|-1 and max dim <= Sd <= Sd_A") {
  Gen gen(101);
  for (int i = 0; i < kInstances; ++i) {
    const auto fam = gen.family(gen.between(3, 8), gen.between(1, 4), true);
    const auto sda = solve(fam, Truncation::adjacency()).value;
    const auto sdm = solve(fam, Truncation::geodesic()).value;
    std::size_t max_a = 0, max_m = 0;
    for (const auto& g : fam) {
      max_a = std::max(max_a, min_a(g));
      max_m = std::max(max_m, min_m(g));
    }
    CHECK(max_a <= sda);
    CHECK(sda <= fam.order() - 1);
    CHECK(max_m <= sdm);
    CHECK(sdm <= sda);
  }
}

TEST_CASE("complement invariance of adjacency generators") {
  Gen gen(202);
  for (int i = 0; i < kInstances; ++i) {
    const auto fam = gen.family(gen.between(2, 9), gen.between(1, 3), false);
    const auto co = complement_family(fam);
    for (int j = 0; j < 4; ++j) {
      const auto s = gen.subset(fam.order());
      CHECK(is_generator(fam, s, Truncation::adjacency()) == is_generator(co, s, Truncation::adjacency()));
    }
    CHECK(solve(fam, Truncation::adjacency()).value == solve(co, Truncation::adjacency()).value);
    CHECK(enumerate_bases(fam, Truncation::adjacency()) == enumerate_bases(co, Truncation::adjacency()));
  }
}

TEST_CASE("truncation monotonicity") {
  Gen gen(303);
  for (int i = 0; i < kInstances; ++i) {
    const auto fam = gen.family(gen.between(3, 9), gen.between(1, 3), true);
    const std::vector<Truncation> ts = {Truncation::adjacency(), Truncation::finite(3), Truncation::finite(4),
                                        Truncation::geodesic()};
    const auto s = gen.subset(fam.order());
    std::size_t prev = fam.order();
    bool was_generator = false;
    for (auto t : ts) {
      const auto v = solve(fam, t).value;
      CHECK(v <= prev);
      prev = v;
      const bool now = is_generator(fam, s, t);
      if (was_generator) CHECK(now);
      was_generator = now;
    }
  }
}

TEST_CASE("superset closure of generators") {
  Gen gen(404);
  for (int i = 0; i < kInstances; ++i) {
    const auto fam = gen.family(gen.between(3, 9), gen.between(1, 3), true);
    for (auto t : {Truncation::adjacency(), Truncation::finite(3), Truncation::geodesic()}) {
      auto s = solve(fam, t).witness;
      for (int j = 0; j < 3; ++j) {
        s.set(gen.between(0, fam.order() - 1));
        CHECK(is_generator(fam, s, t));
      }
    }
  }
}

TEST_CASE("random families: solver, library oracle and reference oracle agree") {
  Gen gen(505);
  for (int i = 0; i < kInstances; ++i) {
    const auto fam = gen.family(gen.between(2, 8), gen.between(1, 4), true);
    const auto ref = oracle::from(fam);
    for (auto t : {Truncation::adjacency(), Truncation::finite(3), Truncation::geodesic()}) {
      const auto r = solve(fam, t);
      CHECK(r.value == oracle::min_generator(ref, oracle_t(t)));
      CHECK(oracle::generates(ref, r.witness.members(), oracle_t(t)));
      CHECK(r.value == brute_force(fam, t).value);
    }
  }
}

TEST_CASE("all connected graphs on n <= 6: solve equals both oracles for t in {2, 3, inf}") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto u = make_indexed_universe(n);
    std::vector<Edge> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::size_t seen = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) es.push_back(slots[b]);
      const LabeledGraph g(u, es);
      const auto m = oracle::adjacency(g);
      if (!oracle::connected(m)) continue;
      ++seen;
      const auto fam = singleton_family(g);
      const oracle::Family ref{n, {m}};
      for (auto t : {Truncation::adjacency(), Truncation::finite(3), Truncation::geodesic()}) {
        const auto want = oracle::min_generator(ref, oracle_t(t));
        const auto got = solve(fam, t).value;
        if (got != want || brute_force(fam, t).value != want) {
          FAIL_CHECK("mismatch n=" << n << " mask=" << mask << " t=" << t.to_string());
        }
      }
    }
    const std::vector<std::size_t> connected_counts = {0, 1, 1, 4, 38, 728, 26704};
    CHECK(seen == connected_counts[n]);
  }
}
