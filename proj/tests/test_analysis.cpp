#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "simdim/analysis.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"

using namespace simdim;
using testing::names;
using testing::set_of;

namespace {

using Sets = std::vector<std::vector<std::string>>;

GraphFamily family(std::vector<LabeledGraph> gs) { return GraphFamily(std::move(gs)); }

LabeledGraph on(const LabeledGraph& g, const std::string& prefix, const std::string& name) {
  return rebind(g, make_indexed_universe(g.order(), prefix), name);
}

}  // namespace

TEST_CASE("V_M of singletons is empty") {
  for (const auto& g : {complete_graph(5), star_graph(5), path_graph(4), petersen_graph()})
    CHECK(v_m(singleton_family(g)).none());
}

TEST_CASE("V_M of {G, coG} is V_T(G) ∪ V_F(G)") {
  // a1-a2-a3-a4 with a5 on a2: a1 and a5 are false twins
  auto u = make_indexed_universe(5, "a");
  const LabeledGraph t5(u, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}}, "T5");
  const auto fam = family({t5, complement(t5).renamed("coT5")});
  const auto tp = twin_partition(t5);
  CHECK(v_m(fam) == (tp.true_twin_vertices() | tp.false_twin_vertices()));
  CHECK(names(u, v_m(fam)) == std::vector<std::string>{"a1", "a5"});
  std::vector<std::size_t> want = {0, 4};
  CHECK(oracle::v_m(oracle::from(fam)) == want);
}

TEST_CASE("V_M of cycle and tree families is empty") {
  auto u = make_indexed_universe(6);
  const auto fam = family({cycle_graph(u, "C6"), path_graph(u, "P6"),
                           LabeledGraph(u, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}, "T")});
  CHECK(v_m(fam).none());
  CHECK(oracle::v_m(oracle::from(fam)).empty());
}

TEST_CASE("V_M of the apex families covers the apex set") {
  // N_2 + P5 and K_7 on w1 w2 v1..v5
  std::vector<std::string> labels = {"w1", "w2", "v1", "v2", "v3", "v4", "v5"};
  auto u = make_universe(labels);
  std::vector<Edge> low;
  for (std::size_t i = 2; i + 1 < 7; ++i) low.emplace_back(i, i + 1);
  for (std::size_t w = 0; w < 2; ++w)
    for (std::size_t v = 2; v < 7; ++v) low.emplace_back(w, v);
  const auto fam = family({LabeledGraph(u, low, "N2+P5"), complete_graph(u, "K7")});
  CHECK(names(u, v_m(fam)) == std::vector<std::string>{"w1", "w2"});
}

TEST_CASE("basis catalog of H5") {
  const auto h5 = h5_family();
  const auto& u = h5.universe();
  const auto c = basis_catalog(h5);
  CHECK(c.value == 2);
  CHECK(names(u, c.b1) == Sets{{"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}});
  CHECK(names(u, c.b2) == Sets{{"v2", "v4"}});
  for (const auto& b : c.b1) CHECK(std::find(c.b2.begin(), c.b2.end(), b) == c.b2.end());
}

TEST_CASE("basis catalog of C5") {
  const auto c5 = singleton_family(cycle_graph(5));
  const auto& u = c5.universe();
  const auto c = basis_catalog(c5);
  CHECK(names(u, c.b1) == Sets{{"v1", "v2"}, {"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}});
  CHECK(names(u, c.b2) == Sets{{"v1", "v3"}, {"v1", "v4"}, {"v2", "v4"}, {"v2", "v5"}, {"v3", "v5"}});
  for (const auto& b : c.b2) CHECK(oracle::dominates(oracle::adjacency(c5[0]), b.members()));
}

TEST_CASE("P10 has a dominating adjacency basis") {
  CHECK_FALSE(basis_catalog(singleton_family(path_graph(10))).b2.empty());
}

TEST_CASE("zeta") {
  const auto h5 = h5_family();
  CHECK(zeta(h5).value == 1);
  CHECK(zeta(h5.subfamily({0})).value == 1);
  CHECK(zeta(h5.subfamily({1})).value == 1);
  for (std::size_t mask = 1; mask < 16; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) idx.push_back(i);
    CHECK(zeta(h_ex_family(7).subfamily(idx)).value == 1);
  }
  CHECK_THROWS_AS(zeta(singleton_family(complete_graph(4))), Error);
}

TEST_CASE("P and Q sets") {
  const auto k = star_family(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto b = VertexSet::full(5) - VertexSet(5, {i});
    CHECK(p_set(k, b).test(i));
  }
  const auto h5 = h5_family();
  CHECK(p_set(h5, set_of(h5.universe(), {"v2", "v4"})).test(2));
  // a basis in B1 ∩ B2 has empty P, and Q meets only the basis itself
  const auto p7 = singleton_family(path_graph(7));
  const auto c = basis_catalog(p7);
  for (const auto& b : c.b1)
    if (in_b2(p7, b)) {
      CHECK(p_set(p7, b).none());
      CHECK((q_set(p7, b) - b).none());
    }
}

TEST_CASE("psi") {
  auto paths = [](const std::string& prefix) {
    auto u = make_indexed_universe(8, prefix);
    // K1 + P7 with the apex listed first
    std::vector<Edge> es;
    for (std::size_t i = 1; i < 8; ++i) es.emplace_back(0, i);
    for (std::size_t i = 1; i + 1 < 8; ++i) es.emplace_back(i, i + 1);
    return GraphFamily(u, {LabeledGraph(u, es, "K1+P7")});
  };
  CHECK(psi(paths("a"), paths("b")).value == 1);
  const auto c10 = singleton_family(on(cycle_graph(10), "a", "C10"));
  CHECK(psi(c10, singleton_family(on(cycle_graph(10), "b", "C10"))).value == 0);
}

TEST_CASE("xi") {
  CHECK(xi(path_graph(4), h5_family()).value == 0);
  CHECK(xi(petersen_graph(), star_family(4)).value == 0);
  CHECK(xi(path_graph(2), star_family(4)).value == 1);
  CHECK(xi(path_graph(2), star_family(5)).value == 1);
  // K2 is one true-twin class of size 2: coefficient |V_T|-|T| = 1, and P(B) = ∅ for P7 bases in B1
  const auto p7 = singleton_family(path_graph(7));
  CHECK(xi(complete_graph(2), p7).value == 0);
}
