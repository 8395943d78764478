#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/io.hpp"
#include "simdim/solver.hpp"

using namespace simdim;
using testing::names;

namespace {

GraphFamily figure1() {
  return load_family_document(std::filesystem::path(SIMDIM_TEST_FIXTURES) / "figure1.json").family;
}

}  // namespace

TEST_CASE("solve: complete graphs need n-1") {
  for (std::size_t n = 2; n <= 7; ++n) {
    CHECK(solve(singleton_family(complete_graph(n)), Truncation::adjacency()).value == n - 1);
    CHECK(solve(singleton_family(empty_graph(n)), Truncation::adjacency()).value == n - 1);
  }
}

TEST_CASE("solve: P8 and the Figure 1 family") {
  CHECK(solve(singleton_family(path_graph(8)), Truncation::adjacency()).value == 3);
  CHECK(oracle::min_generator(singleton_family(path_graph(8)), 2) == 3);
  const auto fam = figure1();
  const auto a = solve(fam, Truncation::adjacency());
  const auto m = solve(fam, Truncation::geodesic());
  CHECK(a.value == 4);
  CHECK(m.value == 3);
  CHECK(a.kind == InvariantKind::Adjacency);
  CHECK(m.kind == InvariantKind::Metric);
  CHECK(is_generator(fam, a.witness, Truncation::adjacency()));
  CHECK(is_generator(fam, m.witness, Truncation::geodesic()));
}

TEST_CASE("solve: star family on five vertices") {
  CHECK(solve(star_family(5), Truncation::adjacency()).value == 4);
}

TEST_CASE("brute force examples") {
  const auto p3 = brute_force(singleton_family(path_graph(3)), Truncation::adjacency());
  CHECK(p3.value == 1);
  CHECK(names(path_graph(3).universe(), p3.witness) == std::vector<std::string>{"v1"});
  CHECK(brute_force(singleton_family(empty_graph(4)), Truncation::adjacency()).value == 3);
  CHECK(brute_force(singleton_family(cycle_graph(5)), Truncation::adjacency()).value == 2);
}

TEST_CASE("brute force limits") {
  CHECK_THROWS_AS(brute_force(singleton_family(path_graph(17)), Truncation::adjacency()), Error);
  CHECK_THROWS_AS(brute_force(singleton_family(complete_graph(5)), Truncation::adjacency(), 2), Error);
}

TEST_CASE("enumerate_bases: C5, P5, P2") {
  const auto c5 = singleton_family(cycle_graph(5));
  const auto bases = enumerate_bases(c5, Truncation::adjacency());
  CHECK(bases.size() == 10);
  for (const auto& b : bases) CHECK(b.count() == 2);

  const auto p5 = singleton_family(path_graph(5));
  using L = std::vector<std::vector<std::string>>;
  CHECK(names(p5.universe(), enumerate_bases(p5, Truncation::adjacency())) ==
        L{{"v1", "v3"}, {"v1", "v5"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}, {"v3", "v5"}});

  const auto p2 = singleton_family(path_graph(2));
  CHECK(names(p2.universe(), enumerate_bases(p2, Truncation::adjacency())) == L{{"v1"}, {"v2"}});
}

TEST_CASE("enumerate_bases matches the oracle on Figure 1") {
  const auto fam = figure1();
  for (auto [t, ot] : {std::pair{Truncation::adjacency(), 2}, std::pair{Truncation::geodesic(), 0}}) {
    std::vector<std::vector<std::size_t>> got;
    for (const auto& b : enumerate_bases(fam, t)) got.push_back(b.members());
    CHECK(got == oracle::all_bases(oracle::from(fam), ot));
  }
}

TEST_CASE("solve report with collect_all") {
  SolveOptions opts;
  opts.collect_all = true;
  const auto r = solve(figure1(), Truncation::adjacency(), opts);
  REQUIRE(r.all_bases.has_value());
  CHECK(r.all_bases->size() == 6);
  CHECK(std::find(r.all_bases->begin(), r.all_bases->end(), r.witness) != r.all_bases->end());
}

TEST_CASE("lower bounds never exceed the optimum") {
  const auto k3 = build_system(singleton_family(complete_graph(3)), Truncation::adjacency());
  CHECK(lower_bound(k3) <= 2);
  CHECK(lower_bound(k3) >= 1);
  CHECK(brute_force(singleton_family(complete_graph(3)), Truncation::adjacency()).value == 2);
  const DistinguisherSystem empty(make_indexed_universe(3), Truncation::adjacency(), {}, {});
  CHECK(lower_bound(empty) == 0);
  CHECK(lower_bound(build_system(figure1(), Truncation::adjacency())) <= 4);
}

TEST_CASE("hitting set primitive") {
  std::vector<VertexSet> sets = {VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), VertexSet(4, {2, 3})};
  const auto r = solve_hitting_set(4, sets);
  CHECK(r.value == 2);
  CHECK(hitting_set_lower_bound(4, sets) <= 2);
  SolveOptions all;
  all.collect_all = true;
  // {0,2} {1,2} {1,3}
  CHECK(solve_hitting_set(4, sets, all).all_minimum.size() == 3);
}

TEST_CASE("node budget raises BudgetExceeded with bounds") {
  SolveOptions tight;
  tight.node_budget = 10;
  const auto fam = lex_product_families(singleton_family(cycle_graph(6)), h5_family());
  try {
    solve(fam, Truncation::geodesic(), tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower() <= e.upper());
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("thread count does not change value or witness") {
  const auto fam = lex_product_families(singleton_family(path_graph(3)), h5_family());
  SolveOptions one, four;
  four.threads = 4;
  const auto a = solve(fam, Truncation::geodesic(), one);
  const auto b = solve(fam, Truncation::geodesic(), four);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
}
