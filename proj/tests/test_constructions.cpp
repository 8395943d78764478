#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/io.hpp"
#include "simdim/solver.hpp"

using namespace simdim;
using testing::set_of;

namespace {

LabeledGraph on(const LabeledGraph& g, const std::string& prefix, const std::string& name) {
  return rebind(g, make_indexed_universe(g.order(), prefix), name);
}

StabilizerPermutation f1_of(const UniversePtr& u, const VertexSet& b) {
  // v1->v1, v2->v6, v3->v3, v4->v8, v5->v2, v6->v4, v7->v7, v8->v5
  return StabilizerPermutation(u, {0, 5, 2, 7, 1, 3, 6, 4}, b);
}

}  // namespace

TEST_CASE("join of graphs") {
  const auto k1 = on(complete_graph(1), "a", "K1");
  const auto k4 = on(complete_graph(4), "b", "K4");
  const auto j = join(k1, k4);
  CHECK(j.order() == 5);
  CHECK(j.edge_count() == 10);
  const auto c4 = join(on(empty_graph(2), "a", "N2"), on(empty_graph(2), "b", "N2"));
  CHECK(c4.edge_count() == 4);
  CHECK(oracle::adjacency(c4) == oracle::join(oracle::adjacency(empty_graph(2)), oracle::adjacency(empty_graph(2))));
  const auto p3 = on(path_graph(3), "a", "P3");
  const auto c5 = on(cycle_graph(5), "b", "C5");
  CHECK(join(p3, c5).order() == 8);
  CHECK(oracle::adjacency(join(p3, c5)) == oracle::join(oracle::adjacency(p3), oracle::adjacency(c5)));
  CHECK_THROWS_AS(join(path_graph(2), path_graph(3)), Error);
}

TEST_CASE("join of families") {
  auto ua = make_indexed_universe(3, "a");
  auto ub = make_indexed_universe(4, "b");
  const GraphFamily g(ua, {path_graph(ua, "P"), complete_graph(ua, "K")});
  const GraphFamily h(ub, {path_graph(ub, "P"), cycle_graph(ub, "C"), empty_graph(ub, "N")});
  CHECK(join_families(g, h).size() == 6);
  const auto k1 = GraphFamily(make_indexed_universe(1, "c"), {complete_graph(make_indexed_universe(1, "c"))});
  const auto stars = star_family(4);
  const auto k1s = join_families(k1, stars);
  CHECK(k1s.size() == 4);
  CHECK(k1s.order() == 5);
}

TEST_CASE("lexicographic product distances follow the product rule") {
  const auto g = on(path_graph(3), "a", "P3");
  const auto h = on(path_graph(4), "b", "P4");
  const auto p = lex_product(g, h);
  REQUIRE(p.order() == 12);
  CHECK(p.label(0) == "a1.b1");
  CHECK(p.label(5) == "a2.b2");
  CHECK(oracle::adjacency(p) == oracle::lex(oracle::adjacency(g), oracle::adjacency(h)));
  const auto d = distance_matrix(p, Truncation::geodesic());
  const auto dh = oracle::truncated(oracle::adjacency(h), 2);
  const auto dg = oracle::bfs_all_pairs(oracle::adjacency(g));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) {
          const int want = i == j ? dh[r][s] : dg[i][j];
          CHECK(d.at(i * 4 + r, j * 4 + s) == want);
        }
}

TEST_CASE("general lexicographic product with one factor per vertex") {
  const auto g = on(path_graph(2), "a", "P2");
  auto ub = make_indexed_universe(3, "b");
  const auto p = lex_product(g, {path_graph(ub), complete_graph(ub)});
  CHECK(p.order() == 6);
  CHECK(p.edge_count() == 2 + 3 + 9);
}

TEST_CASE("lexicographic product families") {
  const auto p2 = GraphFamily(make_indexed_universe(2, "a"), {path_graph(make_indexed_universe(2, "a"), "P2")});
  const auto pk = lex_product_families(p2, star_family(4));
  CHECK(pk.size() == 4);
  CHECK(pk.order() == 8);
  const auto single = lex_product_families(
      GraphFamily(make_indexed_universe(3, "a"), {path_graph(make_indexed_universe(3, "a"))}),
      singleton_family(cycle_graph(5)));
  CHECK(single.size() == 1);
  auto ua = make_indexed_universe(4, "a");
  const auto g = path_graph(ua, "P4");
  const GraphFamily gg(ua, {g, complement(g).renamed("coP4")});
  CHECK(lex_product_families(gg, h5_family()).size() == 4);
  const GraphFamily bad(ua, {empty_graph(ua, "N4")});
  CHECK_THROWS_AS(lex_product_families(bad, h5_family()), Error);
}

TEST_CASE("star family") {
  const auto k = star_family(4);
  CHECK(k.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(k[i].edge_count() == 3);
    CHECK(k[i].degree(i) == 3);
  }
  CHECK(oracle::min_generator(k, 2) == 3);
  CHECK(solve(k, Truncation::adjacency()).value == 3);
  CHECK_THROWS_AS(star_family(3), Error);
}

TEST_CASE("stabilizer permutations") {
  auto u = make_indexed_universe(4);
  const VertexSet b(4, {0});
  CHECK_THROWS_AS(StabilizerPermutation(u, {1, 0, 2, 3}, b), Error);
  CHECK_THROWS_AS(StabilizerPermutation(u, {0, 1, 1, 3}, b), Error);
  const StabilizerPermutation f(u, {0, 2, 3, 1}, b);
  CHECK(f(1) == 2);
  CHECK(f.inverse(2) == 1);
}

TEST_CASE("perm family members") {
  const auto c8 = cycle_graph(8);
  const auto& u = c8.universe();
  const auto b = set_of(u, {"v1", "v3", "v7"});
  std::vector<Edge> inside;
  for (const auto& [x, y] : c8.edges())
    if (!b.test(x) && !b.test(y)) inside.emplace_back(x, y);
  CHECK(perm_family_member(c8, b, StabilizerPermutation::identity(u, b), inside) == c8);

  const auto f = f1_of(u, b);
  const auto h = perm_family_member(c8, b, f, {});
  CHECK(in_perm_family(h, c8, b, f));
  for (auto x : b.members()) CHECK(h.neighbors(x) == f(c8.neighbors(x)));
  CHECK_FALSE(in_perm_family(c8, c8, b, f));
  CHECK(solve(GraphFamily(u, {c8, h}), Truncation::adjacency()).value == 3);
  CHECK_THROWS_AS(perm_family_member(c8, b, f, {{0, 1}}), Error);
}

TEST_CASE("perm family counts") {
  const auto c8 = cycle_graph(8);
  CHECK(perm_family_count(c8, c8.universe()->subset({"v1", "v3", "v7"})) == 122880);
  CHECK(perm_family_count(c8, VertexSet::full(8)) == 1);
  const auto p4 = path_graph(4);
  CHECK(perm_family_count(p4, p4.universe()->subset({"v1", "v2"})) == 4);
}

TEST_CASE("perm family samples") {
  const auto c8 = cycle_graph(8);
  const auto b = c8.universe()->subset({"v1", "v3", "v7"});
  const auto s = perm_family_sample(c8, b, 19, 7);
  CHECK(s.size() == 20);
  CHECK(s[0] == c8);
  CHECK(solve(s, Truncation::adjacency()).value == 3);
  CHECK(perm_family_sample(c8, b, 19, 7)[13] == s[13]);
  const auto only = perm_family_sample(c8, b, 1, 7);
  CHECK(solve(only, Truncation::adjacency()).value == solve(singleton_family(c8), Truncation::adjacency()).value);
  CHECK_THROWS_AS(perm_family_sample(c8, c8.universe()->subset({"v1"}), 3, 1, {true, true}), Error);
}

TEST_CASE("relaxed join families") {
  const auto g = on(path_graph(7), "a", "P7");
  const auto h = on(path_graph(7), "b", "P7");
  const auto gh = join(g, h);
  const auto b = solve(singleton_family(gh), Truncation::adjacency()).witness;
  CHECK(relaxed_join_family(g, h, b, {{}}).size() == 1);
  CHECK(relaxed_join_family(g, h, b, {{}})[0] == gh);
  const auto ep = join_relaxable_edges(gh, 7, b);
  REQUIRE(ep.size() >= 3);
  const auto r = relaxed_join_family(g, h, b, {{}, {ep[0]}, {ep[1], ep[2]}});
  CHECK(r.size() == 3);
  CHECK(solve(r, Truncation::geodesic()).value <= solve(singleton_family(gh), Truncation::geodesic()).value);
  CHECK_THROWS_AS(relaxed_join_family(g, h, b, {{{0, 1}}}), Error);
  CHECK_THROWS_AS(relaxed_join_family(g, h, VertexSet(14, {0}), {{}}), Error);
}

TEST_CASE("relaxed lexicographic families") {
  const auto g = on(path_graph(3), "a", "P3");
  const auto h = on(path_graph(3), "b", "P3");
  const auto p = lex_product(g, h);
  const auto b = solve(singleton_family(p), Truncation::adjacency()).witness;
  const auto ep = lex_relaxable_edges(p, 3, b);
  REQUIRE(ep.size() >= 2);
  for (const auto& [x, y] : ep) {
    CHECK(x / 3 != y / 3);
    CHECK_FALSE(b.test(x));
    CHECK_FALSE(b.test(y));
  }
  const auto r = relaxed_lex_family(g, h, b, {{}, {ep[0]}, {ep[0], ep[1]}});
  CHECK(solve(r, Truncation::geodesic()).value <= solve(singleton_family(p), Truncation::geodesic()).value);
}

TEST_CASE("h5 and hex families") {
  const auto h5 = h5_family();
  REQUIRE(h5.size() == 2);
  CHECK(h5[0].edge_count() == 4);
  CHECK(h5[1].edge_count() == 5);
  for (std::size_t n : {7, 9, 10, 12}) {
    const auto hex = h_ex_family(n);
    CHECK(hex.size() == 4);
    CHECK(hex.order() == n + 6);
    CHECK(check_h_ex_properties(hex, n).empty());
  }
  CHECK_THROWS_AS(h_ex_family(8), Error);
}

TEST_CASE("rebind, permuted and induced subgraphs") {
  const auto p4 = path_graph(4);
  const auto r = rebind(p4, make_indexed_universe(4, "x"));
  CHECK(r.label(0) == "x1");
  CHECK(r.edge_count() == 3);
  const auto q = permuted(p4, {3, 2, 1, 0});
  CHECK(q == p4);
  const auto ind = induced_subgraph(cycle_graph(6), VertexSet(6, {0, 1, 2}));
  CHECK(ind.order() == 3);
  CHECK(ind.edge_count() == 2);
}
