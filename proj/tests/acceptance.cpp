// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
// Exit status is 0 when the failing criteria are exactly the ones listed in
// kKnownUnattainable, so a regression or an unexpected pass both show up.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "simdim/analysis.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/io.hpp"
#include "simdim/random.hpp"
#include "simdim/solver.hpp"
#include "simdim/verifier.hpp"

using namespace simdim;

namespace {

const std::filesystem::path kFixtures = SIMDIM_TEST_FIXTURES;

// Criteria whose stated values disagree with exact computation.
const std::set<int> kKnownUnattainable = {7, 8};

const Truncation kAdj = Truncation::adjacency();
const Truncation kMetric = Truncation::geodesic();

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      note << what;
      pass = false;
    }
  }
};

using LabelSets = std::set<std::set<std::string>>;

LabelSets label_sets(const UniversePtr& u, const std::vector<VertexSet>& sets) {
  LabelSets out;
  for (const auto& s : sets) {
    std::set<std::string> one;
    for (auto v : s.members()) one.insert(u->label(v));
    out.insert(one);
  }
  return out;
}

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<GraphFamily> subfamilies_of_h5() {
  const auto h5 = h5_family();
  return {h5.subfamily({0}), h5.subfamily({1}), h5};
}

GraphFamily family_on(const UniversePtr& u, std::vector<LabeledGraph> gs) { return GraphFamily(u, std::move(gs)); }

// ---------------------------------------------------------------------------

void c1(Outcome& o) {
  const auto fam = load_family_document(kFixtures / "figure1.json").family;
  const auto u = fam.universe();
  const auto a = sd_a(fam), m = sd(fam);
  o.expect(a == 4, "Sd_A = " + str(a));
  o.expect(m == 3, "Sd = " + str(m));
  o.expect(oracle::min_generator(fam, 2) == a && oracle::min_generator(fam, 0) == m, "oracle disagrees");
  o.expect(label_sets(u, enumerate_bases(fam, kAdj)).count({"v1", "v3", "v5", "v8"}) == 1,
           "{v1,v3,v5,v8} is not an adjacency basis");
  o.expect(label_sets(u, enumerate_bases(fam, kMetric)).count({"v1", "v5", "v8"}) == 1,
           "{v1,v5,v8} is not a metric basis");
}

void c2(Outcome& o) {
  for (std::size_t n = 4; n <= 15; ++n) {
    const std::size_t want = (2 * n + 2) / 5;
    for (const auto& g : {path_graph(n), cycle_graph(n)}) {
      const auto fam = singleton_family(g);
      const auto got = solve(fam, kAdj).value;
      const auto brute = brute_force(fam, kAdj).value;
      if (got != want || brute != want)
        o.expect(false, g.name() + " n=" + str(n) + ": solve " + str(got) + ", brute " + str(brute));
    }
  }
}

void c3(Outcome& o) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto u = make_indexed_universe(n);
    std::vector<Edge> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const std::uint64_t full = (std::uint64_t{1} << slots.size()) - 1;
    std::set<std::uint64_t> extremal;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      std::vector<Edge> es;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) es.push_back(slots[b]);
      if (dim_a(LabeledGraph(u, es)) == n - 1) extremal.insert(mask);
    }
    o.expect(extremal == std::set<std::uint64_t>{0, full}, "n=" + str(n) + ": " + str(extremal.size()) +
                                                                " graphs attain n-1");
  }
}

void c4(Outcome& o) {
  for (std::size_t n : {4, 5, 6}) {
    const auto v = sd_a(star_family(n));
    o.expect(v == n - 1, "Sd_A(K(V)) for |V|=" + str(n) + " is " + str(v));
  }
  const auto k1 = singleton_family(complete_graph(make_indexed_universe(1, "u"), "K1"));
  for (std::size_t n : {4, 5}) {
    const auto fam = join_families(k1, star_family(n));
    const auto v = sd(fam);
    o.expect(v == n, "Sd(K1+K(V)) for |V|=" + str(n) + " is " + str(v));
    o.expect(oracle::min_generator(fam, 0) == v, "oracle disagrees on K1+K(V)");
  }
}

void c5(Outcome& o) {
  const auto h5 = h5_family();
  const auto u = h5.universe();
  const LabelSets b1_h5 = {{"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}};
  const LabelSets b2_h5 = {{"v2", "v4"}};
  const LabelSets b1_c5 = {{"v1", "v2"}, {"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}};
  const LabelSets b2_c5 = {{"v1", "v3"}, {"v1", "v4"}, {"v2", "v4"}, {"v2", "v5"}, {"v3", "v5"}};
  const auto cat = basis_catalog(h5);
  o.expect(label_sets(u, cat.b1) == b1_h5, "B1(H5) differs");
  o.expect(label_sets(u, cat.b2) == b2_h5, "B2(H5) differs");
  const auto c5 = basis_catalog(h5.subfamily({1}));
  o.expect(label_sets(u, c5.b1) == b1_c5, "B1({C5}) differs");
  o.expect(label_sets(u, c5.b2) == b2_c5, "B2({C5}) differs");
  // the classification is recomputed from the oracle's basis list
  const auto ref = oracle::from(h5);
  LabelSets dominating;
  for (const auto& b : oracle::all_bases(ref, 2)) {
    bool dom = true;
    for (const auto& m : ref.members) dom = dom && oracle::dominates(m, b);
    if (dom) dominating.insert({u->label(b[0]), u->label(b[1])});
  }
  o.expect(dominating == b2_h5, "oracle B2(H5) differs");
  for (const auto& h : subfamilies_of_h5()) {
    const auto z = zeta(h).value;
    o.expect(z == 1, "zeta = " + str(z) + " on a subfamily of size " + str(h.size()));
  }
}

void c6(Outcome& o) {
  const std::vector<std::pair<LabeledGraph, LabeledGraph>> pairs = {{path_graph(3), path_graph(2)},
                                                                    {path_graph(2), path_graph(3)},
                                                                    {cycle_graph(4), complete_graph(2)},
                                                                    {path_graph(2), cycle_graph(5)}};
  for (const auto& [g, h] : pairs) {
    const auto p = lex_product(g, h);
    const auto n = p.order();
    const auto fam = singleton_family(p);
    const oracle::Family ref{n, {oracle::adjacency(p)}};
    std::size_t mismatches = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s(n);
      std::vector<std::size_t> idx;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) s.set(v), idx.push_back(v);
      const bool metric = is_generator(fam, s, kMetric);
      const bool adj = is_generator(fam, s, kAdj);
      if (metric != adj || metric != oracle::generates(ref, idx, 0) || adj != oracle::generates(ref, idx, 2))
        ++mismatches;
    }
    const std::string tag = g.name() + "∘" + h.name();
    o.expect(mismatches == 0, tag + ": " + str(mismatches) + " subsets disagree");
    o.expect(dim(p) == dim_a(p), tag + ": dim != dim_A");
  }
}

void c7(Outcome& o) {
  for (std::size_t n : {4, 5}) {
    const auto fam = lex_product_families(singleton_family(path_graph(2)), star_family(n));
    const auto v = sd(fam);
    const auto ref = oracle::min_generator(fam, 0);
    o.expect(v == ref, "|V|=" + str(n) + ": solver " + str(v) + " vs oracle " + str(ref));
    o.expect(v == 2 * n - 1, "|V|=" + str(n) + ": Sd = " + str(v) + ", stated " + str(2 * n - 1));
  }
}

void c8(Outcome& o) {
  auto u4 = make_indexed_universe(4, "a");
  auto u3 = make_indexed_universe(3, "a");
  auto u2 = make_indexed_universe(2, "a");
  const auto p4s = family_on(u4, {path_graph(u4, "P4"), permuted(path_graph(u4, "P4"), {1, 3, 0, 2}, "P4'")});
  const auto p2 = family_on(u2, {path_graph(u2, "P2")});
  const auto k3p3 = family_on(u3, {complete_graph(u3, "K3"), path_graph(u3, "P3")});
  std::size_t eq = 0, sandwich = 0;
  for (const auto& h : subfamilies_of_h5()) {
    const auto sda = sd_a(h);
    for (const auto* g : {&p2, &p4s}) {
      o.expect(v_m(*g).none(), "equality-regime family has twins across members");
      const auto v = sd(lex_product_families(*g, h));
      o.expect(v == g->order() * sda, "equality regime |V1|=" + str(g->order()) + ": Sd = " + str(v));
      ++eq;
    }
    const auto vm = v_m(k3p3).count();
    const auto z = zeta(h).value;
    const auto lo = 3 * sda + vm, hi = 3 * sda + z * vm;
    const auto prod = lex_product_families(k3p3, h);
    const auto v = sd(prod);
    o.expect(v == oracle::min_generator(prod, 0), "oracle disagrees on {K3,P3}∘H");
    o.expect(lo <= v && v <= hi, "{K3,P3}∘H (|H|=" + str(h.size()) + "): Sd = " + str(v) + " outside [" + str(lo) +
                                     ", " + str(hi) + "]");
    ++sandwich;
  }
  // {G, coG} with G a tree carrying a false-twin pair; 25 product vertices
  auto u5 = make_indexed_universe(5, "a");
  const LabeledGraph t5(u5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}}, "T5");
  const auto tt = family_on(u5, {t5, complement(t5).renamed("coT5")});
  const auto h = subfamilies_of_h5()[0];
  SolveOptions capped;
  capped.node_budget = 20'000'000;
  try {
    const auto v = sd(lex_product_families(tt, h), capped);
    const auto vm = v_m(tt).count();
    const auto lo = 5 * sd_a(h) + vm;
    o.expect(v >= lo, "{T5,coT5}∘{P5}: Sd = " + str(v) + " below " + str(lo));
  } catch (const BudgetExceeded&) {
    std::cerr << "criterion 8: {T5,coT5}∘{P5} skipped, node budget exceeded\n";
  }
  std::cerr << "criterion 8: " << eq << " equality and " << sandwich << " sandwich instances\n";
}

void c9(Outcome& o) {
  for (std::size_t n : {10, 12, 14}) {
    for (const auto& g : {path_graph(n), cycle_graph(n)}) {
      const auto cat = basis_catalog(singleton_family(g));
      o.expect(!cat.b2.empty(), g.name() + " has no dominating adjacency basis");
      if (!cat.b2.empty())
        o.expect(oracle::dominates(oracle::adjacency(g), cat.b2.front().members()), "reported basis does not dominate");
    }
  }
  const auto r = verify("lem-4.11", {{"n", "11,13"}});
  o.expect(r.verdict == Verdict::HypothesisNotMet, "n in {11,13} verdict is " + to_string(r.verdict));
  for (const auto& e : r.evidence) {
    const auto n = e["instance"]["n"].get<std::size_t>();
    const auto want = dim_a(path_graph(n));
    o.expect(e["detail"]["P_n"]["dim_A"] == want, "catalog for n=" + str(n) + " misreports dim_A");
  }
}

void c10(Outcome& o) {
  const auto c8g = cycle_graph(8);
  const auto u = c8g.universe();
  const auto b = u->subset({"v1", "v3", "v7"});
  const auto figure2 = [&](int which) {
    std::vector<std::size_t> m = {0, 1, 2, 3, 4, 5, 6, 7};
    const auto set = [&](std::size_t from, std::size_t to) { m[from - 1] = to - 1; };
    if (which == 1) set(2, 6), set(4, 8), set(5, 2), set(6, 4), set(8, 5);
    else set(2, 5), set(4, 8), set(5, 6), set(6, 4), set(8, 2);
    return perm_family_member(c8g, b, StabilizerPermutation(u, m, b), {}, which == 1 ? "f1(C8)" : "f2(C8)");
  };
  auto sample = perm_family_sample(c8g, b, 17, 20240501);
  sample = sample.with_member(figure2(1)).with_member(figure2(2));
  o.expect(sample.size() == 20, "sample has " + str(sample.size()) + " members");
  o.expect(std::any_of(sample.begin(), sample.end(), [&](const LabeledGraph& g) { return g == c8g; }),
           "C8 missing from the sample");
  const auto ref = oracle::from(sample);
  o.expect(oracle::generates(ref, b.members(), 2), "B is not a simultaneous adjacency generator");
  o.expect(is_generator(sample, b, kAdj), "library rejects B");
  const auto v = sd_a(sample);
  o.expect(v == 3, "Sd_A(sample) = " + str(v));
  const auto count = perm_family_count(c8g, b);
  o.expect(count == 122880, "perm_family_count = " + count.str());
}

// Compact reruns of the property suites, 200 instances each.
void c11(Outcome& o) {
  Rng rng(7);
  const auto family = [&](std::size_t lo, std::size_t hi, bool connected) {
    auto u = make_indexed_universe(lo + bounded_draw(rng, hi - lo + 1));
    std::vector<LabeledGraph> gs;
    const auto k = 1 + bounded_draw(rng, 3);
    for (std::size_t i = 0; i < k; ++i)
      gs.push_back(connected ? random_connected_graph(rng, u, 1, 3, "R" + str(i))
                             : random_graph(rng, u, 1, 2, "R" + str(i)));
    return GraphFamily(u, gs);
  };
  const auto subset = [&](std::size_t n) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng, 2, 5)) s.set(v);
    return s;
  };
  std::size_t bad_chain = 0, bad_complement = 0, bad_monotone = 0, bad_superset = 0;
  for (int i = 0; i < 200; ++i) {
    const auto fam = family(3, 8, true);
    const auto a = sd_a(fam), m = sd(fam);
    std::size_t max_a = 0;
    for (const auto& g : fam) max_a = std::max(max_a, dim_a(g));
    if (!(max_a <= a && a <= fam.order() - 1 && m <= a)) ++bad_chain;
  }
  for (int i = 0; i < 200; ++i) {
    const auto fam = family(2, 9, false);
    const auto co = complement_family(fam);
    const auto s = subset(fam.order());
    if (is_generator(fam, s, kAdj) != is_generator(co, s, kAdj) || sd_a(fam) != sd_a(co)) ++bad_complement;
  }
  for (int i = 0; i < 200; ++i) {
    const auto fam = family(3, 9, true);
    const auto s = subset(fam.order());
    const auto v2 = solve(fam, kAdj).value, v3 = solve(fam, Truncation::finite(3)).value, vm = sd(fam);
    const bool g2 = is_generator(fam, s, kAdj), g3 = is_generator(fam, s, Truncation::finite(3)),
               gm = is_generator(fam, s, kMetric);
    if (!(v2 >= v3 && v3 >= vm) || (g2 && !g3) || (g3 && !gm)) ++bad_monotone;
  }
  for (int i = 0; i < 200; ++i) {
    const auto fam = family(3, 9, true);
    auto s = solve(fam, kAdj).witness;
    s.set(bounded_draw(rng, fam.order()));
    if (!is_generator(fam, s, kAdj)) ++bad_superset;
  }
  o.expect(bad_chain == 0, str(bad_chain) + " bound-chain violations");
  o.expect(bad_complement == 0, str(bad_complement) + " complement mismatches");
  o.expect(bad_monotone == 0, str(bad_monotone) + " monotonicity violations");
  o.expect(bad_superset == 0, str(bad_superset) + " superset violations");

  std::size_t graphs = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    auto u = make_indexed_universe(n);
    std::vector<Edge> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) es.push_back(slots[b]);
      const LabeledGraph g(u, es);
      if (!is_connected(g)) continue;
      ++graphs;
      const auto fam = singleton_family(g);
      for (auto t : {kAdj, kMetric})
        if (solve(fam, t).value != brute_force(fam, t).value) ++mismatches;
    }
  }
  o.expect(graphs == 1 + 1 + 4 + 38 + 728 + 26704, str(graphs) + " connected graphs enumerated");
  o.expect(mismatches == 0, str(mismatches) + " solve/brute_force mismatches");
}

std::set<std::string> failing(const std::vector<TheoremCheck>& checks) {
  std::set<std::string> out;
  for (const auto& c : checks)
    if (c.verdict == Verdict::Fail) out.insert(c.id);
  return out;
}

void c12(Outcome& o) {
  const auto baseline = failing(verify_suite("smoke"));
  for (const auto& pin : pinned_fixtures()) {
    const auto dir = std::filesystem::temp_directory_path() / "simdim-acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const auto& p : pinned_fixtures()) std::filesystem::copy_file(kFixtures / p.file, dir / p.file);
    std::string text;
    {
      std::ifstream in(dir / pin.file, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    // drop the first listed edge
    const auto at = text.find("[[");
    const auto end = text.find("],", at);
    if (at == std::string::npos || end == std::string::npos) {
      o.expect(false, std::string(pin.file) + ": no edge to corrupt");
      continue;
    }
    text.erase(at + 1, end + 2 - (at + 1));
    std::ofstream(dir / pin.file, std::ios::binary) << text;
    VerifyOptions opts;
    opts.fixture_dir = dir;
    auto now = failing(verify_suite("smoke", opts));
    for (const auto& id : baseline) now.erase(id);
    o.expect(!now.empty(), std::string(pin.file) + ": corruption went unnoticed");
    std::filesystem::remove_all(dir);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Figure 1 reproduction", c1},
      {"path/cycle adjacency dimension formula", c2},
      {"extremal characterization n <= 6", c3},
      {"star families", c4},
      {"H5 basis catalogs and zeta", c5},
      {"lexicographic generator equivalence", c6},
      {"Sd(P2∘K(V)) = 2|V|-1", c7},
      {"lexicographic family regimes", c8},
      {"dominating adjacency bases of P_n and C_n", c9},
      {"G_B(C8) machinery", c10},
      {"property suites", c11},
      {"fixture negative control", c12},
  };
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first;
    if (!o.pass) {
      std::cout << ": " << o.note.str();
      failed.insert(id);
    }
    std::cout << "\n" << std::flush;
  }
  if (failed == kKnownUnattainable) {
    std::cerr << "failures match the documented counterexamples\n";
    return 0;
  }
  std::cerr << "failing criteria differ from the documented set\n";
  return 1;
}
