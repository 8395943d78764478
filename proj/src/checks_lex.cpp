// Checks for lexicographic product families, the twin sets V_M and the
// basis catalogs of the second factor.
#include <algorithm>

#include "verifier_internal.hpp"

namespace simdim::detail {
namespace {

const Truncation kAdj = Truncation::adjacency();
const Truncation kMetric = Truncation::geodesic();

bool nontrivial(const GraphFamily& fam) { return fam.order() >= 2 && !fam.empty(); }

bool has_common(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  return std::any_of(a.begin(), a.end(), [&](const VertexSet& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

std::vector<VertexSet> common(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  std::vector<VertexSet> out;
  for (const auto& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
  return out;
}

VertexSet mask_set(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) s.set(i);
  return s;
}

LabeledGraph on(const UniversePtr& u, const LabeledGraph& g) { return rebind(g, u, g.name()); }

LabeledGraph p4_relabeled(const UniversePtr& u) {
  return permuted(path_graph(u, "P4"), {1, 3, 0, 2}, "P4'");
}

// Tree a1-a2-a3-a4 with a5 hanging from a2; a1 and a5 are false twins.
LabeledGraph fork_tree() {
  return LabeledGraph(make_indexed_universe(5, "a"), {{0, 1}, {1, 2}, {2, 3}, {1, 4}}, "T5");
}

SolveOptions capped(const SolveOptions& base, std::uint64_t cap) {
  SolveOptions o = base;
  o.node_budget = std::min(o.node_budget, cap);
  return o;
}

// N_t + G and K_t + G on a shared universe w1..wt, then G's labels.
GraphFamily apex_pair(std::size_t t, const LabeledGraph& g1, const LabeledGraph& g2) {
  const auto wt = make_indexed_universe(t, "w");
  const auto a = join(empty_graph(wt, "N" + std::to_string(t)), g1);
  const auto b = join(complete_graph(wt, "K" + std::to_string(t)), g2);
  return family_of({a.renamed("N" + std::to_string(t) + "+" + g1.name()),
                    rebind(b, a.universe(), "K" + std::to_string(t) + "+" + g2.name())},
                   "");
}

// ---------------------------------------------------------------------------

void check_claim_4_1(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "named pairs plus seeded random pairs (G connected on 2..4, H on 2..4 vertices)";
  std::vector<std::pair<LabeledGraph, LabeledGraph>> cases = {
      {path_graph(3), path_graph(2)}, {path_graph(4), empty_graph(3)}, {cycle_graph(4), path_graph(3)},
      {star_graph(4), cycle_graph(4)}, {complete_graph(3), empty_graph(2)}};
  const long count = ctx.get_int("count", ctx.full() ? 60 : 20);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    cases.push_back({random_connected_graph(rng, make_indexed_universe(pick(rng, 2, 4)), 1, 2, "G"),
                     random_graph(rng, make_indexed_universe(pick(rng, 2, 4)), 1, 2, "H")});
  }
  for (const auto& [g0, h0] : cases) {
    const auto g = on(make_indexed_universe(g0.order(), "a"), g0);
    const auto h = on(make_indexed_universe(h0.order(), "b"), h0);
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    const auto prod = lex_product(g, h);
    const std::size_t n = g.order(), m = h.order();
    std::size_t nb_bad = 0, far_bad = 0, near_bad = 0, checked = 0;
    std::vector<std::vector<int>> dg, dh;
    for (std::size_t x = 0; x < n; ++x) dg.push_back(bfs_distances(g, x));
    for (std::size_t x = 0; x < m; ++x) dh.push_back(bfs_distances(h, x));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const std::size_t x = a * m + b;
        VertexSet expect(n * m);
        h.neighbors(b).for_each([&](std::size_t d) { expect.set(a * m + d); });
        g.neighbors(a).for_each([&](std::size_t c) {
          for (std::size_t d = 0; d < m; ++d) expect.set(c * m + d);
        });
        if (!(expect == prod.neighbors(x))) ++nb_bad;
        const auto dp = bfs_distances(prod, x);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < m; ++d) {
            const std::size_t y = c * m + d;
            if (y == x) continue;
            ++checked;
            if (c != a) {
              if (dp[y] != dg[a][c]) ++far_bad;
            } else {
              const int hd = dh[b][d] < 0 ? 2 : std::min(dh[b][d], 2);
              if (dp[y] != hd) ++near_bad;
            }
          }
      }
    rec.equal(inst, nb_bad + far_bad + near_bad, 0,
              {{"pairs", checked}, {"neighbourhood_mismatches", nb_bad},
               {"cross_copy_mismatches", far_bad}, {"same_copy_mismatches", near_bad}});
  }
}

std::vector<std::pair<LabeledGraph, LabeledGraph>> small_products(Context& ctx, long count) {
  std::vector<std::pair<LabeledGraph, LabeledGraph>> out = {
      {path_graph(3), path_graph(2)}, {path_graph(2), path_graph(3)}, {cycle_graph(4), complete_graph(2)},
      {path_graph(2), cycle_graph(5)}, {path_graph(3), path_graph(4)}, {complete_graph(3), empty_graph(2)},
      {path_graph(4), path_graph(3)}, {path_graph(6), path_graph(2)}};
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const std::size_t n = pick(rng, 2, 4);
    const std::size_t m = pick(rng, 2, 12 / n);
    out.push_back({random_connected_graph(rng, make_indexed_universe(n), 1, 2, "G"),
                   random_graph(rng, make_indexed_universe(m), 1, 2, "H")});
  }
  for (auto& [g, h] : out) {
    g = on(make_indexed_universe(g.order(), "a"), g);
    h = on(make_indexed_universe(h.order(), "b"), h);
  }
  return out;
}

void check_thm_4_2(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every vertex subset of G∘H, |V(G∘H)| <= 12: P3∘P2, P2∘P3, C4∘K2, P2∘C5, P3∘P4, "
                "K3∘N2, P4∘P3, P6∘P2 and seeded random pairs";
  for (const auto& [g, h] : small_products(ctx, ctx.get_int("count", ctx.full() ? 30 : 8))) {
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    const auto prod = lex_product(g, h);
    const std::size_t n = prod.order();
    if (n > 16) {
      rec.hypothesis_not_met(inst, "product too large for exhaustive subset enumeration");
      continue;
    }
    const auto sm = build_system(singleton_family(prod), kMetric);
    const auto sa = build_system(singleton_family(prod), kAdj);
    std::size_t metric = 0, adjacency = 0, mismatch = 0;
    Json first_mismatch;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto s = mask_set(n, mask);
      const bool m = is_generator(sm, s), a = is_generator(sa, s);
      metric += m;
      adjacency += a;
      if (m != a && mismatch++ == 0) first_mismatch = labels(*prod.universe(), s);
    }
    Json detail = {{"subsets", std::uint64_t{1} << n}, {"mismatches", mismatch}};
    if (mismatch) detail["first_mismatch"] = first_mismatch;
    rec.record(inst, mismatch == 0, metric, adjacency, detail);
  }
}

void check_cor_4_3(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "single products (including diameter > 2) and product families up to 20 vertices";
  for (const auto& [g, h] : small_products(ctx, ctx.get_int("count", ctx.full() ? 20 : 6))) {
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    rec.attempt(inst, [&] {
      const auto prod = lex_product(g, h);
      rec.equal(inst, dim(prod, ctx.solve()), dim_a(prod, ctx.solve()),
                {{"diameter", basic_invariants(prod).diameter}});
    });
  }
  auto u4 = make_indexed_universe(4, "a");
  auto u3 = make_indexed_universe(3, "a");
  std::vector<std::pair<GraphFamily, GraphFamily>> fams = {
      {family_of({path_graph(u4, "P4"), p4_relabeled(u4)}, "{P4,P4'}"), on_prefix(named(path_graph(3)), "b")},
      {family_of({complete_graph(u3, "K3"), path_graph(u3, "P3")}, "{K3,P3}"), h5_family()},
      {on_prefix(named(path_graph(5)), "a"),
       family_of({path_graph(make_indexed_universe(2, "b"), "P2"),
                  empty_graph(make_indexed_universe(2, "b"), "N2")}, "{P2,N2}")},
  };
  for (auto [g, h] : fams) {
    g = on_prefix(g, "a");
    h = on_prefix(h, "b");
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    rec.attempt(inst, [&] {
      const auto prod = lex_product_families(g, h);
      rec.equal(inst, sd(prod, ctx.solve()), sd_a(prod, ctx.solve()), {{"members", prod.size()}});
    });
  }
}

void check_thm_4_4(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "named pairs and seeded random pairs (product <= 12 vertices)";
  for (const auto& [g, h] : small_products(ctx, ctx.get_int("count", ctx.full() ? 30 : 8))) {
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    rec.attempt(inst, [&] {
      const auto lhs = dim(lex_product(g, h), ctx.solve());
      const auto da = dim_a(h, ctx.solve());
      rec.record(inst, lhs >= g.order() * da, lhs, g.order() * da, {{"dim_A(H)", da}, {"relation", ">="}});
    });
  }
}

void check_thm_4_5(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "{P4,P4'}∘H5, {K3,P3}∘H5 and seeded random family pairs (|V1| 2..4, |V2| 2..4)";
  auto u4 = make_indexed_universe(4, "a");
  auto u3 = make_indexed_universe(3, "a");
  std::vector<std::pair<GraphFamily, GraphFamily>> cases = {
      {family_of({path_graph(u4, "P4"), p4_relabeled(u4)}, "{P4,P4'}"), h5_family()},
      {family_of({complete_graph(u3, "K3"), path_graph(u3, "P3")}, "{K3,P3}"), h5_family()},
  };
  const long count = ctx.get_int("count", ctx.full() ? 40 : 12);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    cases.push_back({random_family(rng, pick(rng, 2, 4), pick(rng, 1, 3), true),
                     random_family(rng, pick(rng, 2, 4), pick(rng, 1, 3), false)});
  }
  for (auto [g, h] : cases) {
    g = on_prefix(g, "a");
    h = on_prefix(h, "b");
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    rec.attempt(inst, [&] {
      const auto lhs = sd(lex_product_families(g, h), ctx.solve());
      const auto rhs = g.order() * sd_a(h, ctx.solve());
      rec.record(inst, lhs >= rhs, lhs, rhs, {{"relation", ">="}});
    });
  }
}

// Both sides of the two-regime theorem for one (G, H) pair.
void thm_4_6_instance(Context& ctx, Recorder& rec, const GraphFamily& g, const GraphFamily& h) {
  const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
  if (!g.all_connected() || !nontrivial(h)) {
    rec.hypothesis_not_met(inst, "G needs connected members and H non-trivial ones");
    return;
  }
  rec.attempt(inst, [&] {
    const auto cat = basis_catalog(h, ctx.solve());
    if (cat.b1.empty() || cat.b2.empty()) {
      rec.hypothesis_not_met(inst, "B1(H) and B2(H) must both be nonempty",
                             {{"B1", cat.b1.size()}, {"B2", cat.b2.size()}});
      return;
    }
    const auto vm = v_m(g);
    const auto both = common(cat.b1, cat.b2);
    const auto lhs = sd(lex_product_families(g, h), ctx.solve());
    const auto lhs_bar = sd(lex_product_families(g, complement_family(h)), ctx.solve());
    const std::size_t base = g.order() * cat.value;
    Json detail = {{"Sd(G∘H)", lhs}, {"Sd(G∘coH)", lhs_bar}, {"Sd_A(H)", cat.value},
                   {"V_M", labels(*g.universe(), vm)}, {"B1_cap_B2", labels(*h.universe(), both)}};
    if (vm.none() || !both.empty()) {
      detail["regime"] = "equality";
      rec.record(inst, lhs == base && lhs_bar == base, Json::array({lhs, lhs_bar}), base, detail);
      return;
    }
    const auto z = zeta(h, cat).value;
    const std::size_t lo = base + vm.count(), hi = base + z * vm.count();
    detail["regime"] = "sandwich";
    detail["zeta"] = z;
    const bool ok = lhs == lhs_bar && lo <= lhs && lhs <= hi;
    rec.record(inst, ok, Json::array({lhs, lhs_bar}), Json{{"lower", lo}, {"upper", hi}}, detail);
  });
}

void check_thm_4_6(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "equality regime: {P4,P4'}∘H and {P2}∘H over nonempty H ⊆ H5; sandwich regime: "
                "{K3,P3}∘H (V_M = {a1,a3}); full-desk adds {C4,K4}∘H and seeded random pairs";
  const auto h5 = h5_family();
  const auto subs = nonempty_subfamilies(h5);
  auto u4 = make_indexed_universe(4, "a");
  auto u3 = make_indexed_universe(3, "a");
  const auto p2 = on_prefix(named(path_graph(2)), "a");
  const auto p4s = family_of({path_graph(u4, "P4"), p4_relabeled(u4)}, "{P4,P4'}");
  const auto k3p3 = family_of({complete_graph(u3, "K3"), path_graph(u3, "P3")}, "{K3,P3}");
  for (const auto& h : subs) thm_4_6_instance(ctx, rec, p2, h);
  for (const auto& h : subs) thm_4_6_instance(ctx, rec, p4s, h);
  for (const auto& h : subs) thm_4_6_instance(ctx, rec, k3p3, h);
  if (ctx.full()) {
    const auto c4k4 = family_of({cycle_graph(u4, "C4"), complete_graph(u4, "K4")}, "{C4,K4}");
    for (const auto& h : subs) thm_4_6_instance(ctx, rec, c4k4, h);
  }
  const long count = ctx.get_int("count", ctx.full() ? 30 : 0);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    thm_4_6_instance(ctx, rec, on_prefix(random_family(rng, pick(rng, 3, 4), 2, true), "a"),
                     on_prefix(random_family(rng, pick(rng, 4, 5), pick(rng, 1, 2), false), "b"));
  }
}

void check_rem_4_7(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "paths, cycles (n >= 4), C4/Q3-type girth-4 graphs and seeded random trees; K4 "
                "as a negative instance";
  std::vector<GraphFamily> fams;
  for (std::size_t n : {4, 5, 6, 8}) {
    auto u = make_indexed_universe(n);
    fams.push_back(family_of({path_graph(u, "P"), cycle_graph(u, "C"), random_relabel(ctx.rng(), cycle_graph(u), "C'")},
                             "{P,C,C'} n=" + std::to_string(n)));
  }
  {
    // Q3 on v1..v8: bit-flip adjacency.
    std::vector<Edge> e;
    for (std::size_t x = 0; x < 8; ++x)
      for (std::size_t b = 1; b < 8; b <<= 1)
        if (x < (x ^ b)) e.emplace_back(x, x ^ b);
    auto u = make_indexed_universe(8);
    LabeledGraph q3(u, e, "Q3");
    fams.push_back(family_of({q3, random_relabel(ctx.rng(), q3, "Q3'"), cycle_graph(u, "C8")}, "{Q3,Q3',C8}"));
  }
  const long count = ctx.get_int("count", ctx.full() ? 60 : 20);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    auto u = make_indexed_universe(pick(rng, 4, 8));
    std::vector<LabeledGraph> gs;
    for (std::size_t k = 0, m = pick(rng, 1, 3); k < m; ++k) gs.push_back(random_tree(rng, u, "T" + std::to_string(k + 1)));
    if (coin(rng, 1, 2)) gs.push_back(cycle_graph(u, "C"));
    fams.push_back(family_of(gs, "trees"));
  }
  {
    auto u = make_indexed_universe(4);
    fams.push_back(family_of({complete_graph(u, "K4"), cycle_graph(u, "C4")}, "{K4,C4}"));
  }
  for (const auto& fam : fams) {
    const Json inst = {{"family", describe(fam)}};
    bool ok = true;
    for (const auto& g : fam) {
      const auto inv = basic_invariants(g);
      const bool tree = inv.connected && g.edge_count() + 1 == g.order();
      if (!tree && !(inv.girth != kInfinite && inv.girth >= 4)) ok = false;
    }
    if (!ok) {
      rec.hypothesis_not_met(inst, "some member is neither a tree nor of girth >= 4",
                             {{"V_M", labels(*fam.universe(), v_m(fam))}});
      continue;
    }
    const auto vm = v_m(fam);
    rec.equal(inst, vm.count(), 0, {{"V_M", labels(*fam.universe(), vm)}});
  }
}

void check_rem_4_8(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "C8 with B={v1,v3,v7}, P6 and seeded random graphs with a solver basis; seeded "
                "samples of G_B(G) with and without G";
  struct Case {
    LabeledGraph g;
    VertexSet b;
  };
  std::vector<Case> cases;
  auto c8 = cycle_graph(8);
  cases.push_back({c8, c8.universe()->subset({"v1", "v3", "v7"})});
  auto p6 = path_graph(6);
  cases.push_back({p6, solve(singleton_family(p6), kAdj, ctx.solve()).witness});
  const long count = ctx.get_int("count", ctx.full() ? 40 : 12);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    auto g = random_graph(rng, make_indexed_universe(pick(rng, 4, 8)), 1, 2, "R" + std::to_string(i + 1));
    cases.push_back({g, solve(singleton_family(g), kAdj, ctx.solve()).witness});
  }
  for (const auto& c : cases) {
    for (int with_base = 1; with_base >= 0; --with_base) {
      PermSampleOptions po;
      po.include_base = with_base == 1;
      const auto fam = perm_family_sample(c.g, c.b, 6, ctx.rng()(), po);
      const Json inst = {{"graph", describe(c.g)}, {"B", labels(*c.g.universe(), c.b)},
                         {"contains_G", with_base == 1}, {"members", fam.size()}};
      const auto vm = v_m(fam);
      rec.equal(inst, vm.count(), 0, {{"V_M", labels(*fam.universe(), vm)}});
    }
  }
}

void check_rem_4_9(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "subfamilies of H5 and H_ex^(10), seeded random families (n 4..6, 1..3 members); "
                "those with B1, B2 nonempty and disjoint; "
                "one record per sufficient condition";
  const long count = ctx.get_int("count", ctx.full() ? 3000 : 800);
  std::vector<GraphFamily> cases = nonempty_subfamilies(h5_family());
  for (const auto& f : nonempty_subfamilies(h_ex_family(10, false))) cases.push_back(f);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    cases.push_back(random_family(rng, pick(rng, 4, 6), pick(rng, 1, 3), false));
  }
  struct Tally {
    std::size_t applied = 0, zeta_one = 0;
    Json counterexample;
  };
  Tally single, contained, union_plus_one;
  auto tally = [](Tally& t, bool holds, std::size_t z, const GraphFamily& fam) {
    if (!holds) return;
    ++t.applied;
    if (z == 1) ++t.zeta_one;
    else if (t.counterexample.is_null()) t.counterexample = describe(fam);
  };
  std::size_t defined = 0;
  for (const auto& fam : cases) {
    const auto cat = basis_catalog(fam, ctx.solve());
    if (cat.b1.empty() || cat.b2.empty()) continue;
    if (std::any_of(cat.b1.begin(), cat.b1.end(), [&](const VertexSet& b) { return in_b2(fam, b); }))
      continue;
    ++defined;
    const auto z = zeta(fam, cat).value;
    const std::size_t n = fam.order();
    bool c = false;
    for (const auto& b2 : cat.b2)
      for (std::size_t v = 0; v < n && !c; ++v) {
        if (b2.test(v)) continue;
        c = std::all_of(fam.begin(), fam.end(), [&](const auto& g) { return b2.is_subset_of(g.neighbors(v)); });
      }
    bool d = false;
    for (const auto& b1 : cat.b1)
      for (const auto& b2 : cat.b2)
        if ((b1 | b2).count() == cat.value + 1) d = true;
    tally(single, fam.size() == 1, z, fam);
    tally(contained, c, z, fam);
    tally(union_plus_one, d, z, fam);
  }
  auto emit = [&](const char* name, const Tally& t) {
    Json detail = {{"families_in_scope", defined}};
    if (!t.counterexample.is_null()) detail["counterexample"] = t.counterexample;
    if (t.applied == 0) {
      rec.hypothesis_not_met({{"condition", name}}, "no sampled family met the condition", detail);
      return;
    }
    rec.equal({{"condition", name}}, t.zeta_one, t.applied, detail);
  };
  emit("single member", single);
  emit("some B2 inside N_H(v) for every H", contained);
  emit("|B1 ∪ B2| = Sd_A + 1", union_plus_one);
}

void check_rem_4_10(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every labeled graph on 2..6 vertices";
  for (long n : ctx.get_ints("n", {2, 3, 4, 5, 6})) {
    const Json inst = {{"n", n}};
    std::size_t bad = 0, total = 0;
    for (const auto& g : all_graphs(static_cast<std::size_t>(n), false)) {
      ++total;
      if (v_m(singleton_family(g)).any()) ++bad;
    }
    rec.equal(inst, bad, 0, {{"graphs", total}});
  }
}

void check_lem_4_11(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "P_n and C_n; full catalogs, counting the dominating bases";
  const auto ns = ctx.get_ints("n", ctx.full() ? std::vector<long>{7, 8, 9, 10, 11, 12, 13, 14, 15}
                                                 : std::vector<long>{7, 9, 10, 11, 12, 13, 14});
  for (long n : ns) {
    const auto sz = static_cast<std::size_t>(n);
    const Json inst = {{"n", n}};
    rec.attempt(inst, [&] {
      Json detail = Json::object();
      std::vector<std::size_t> dom;
      for (int cyc = 0; cyc < 2; ++cyc) {
        const auto g = cyc ? cycle_graph(sz) : path_graph(sz);
        const auto cat = basis_catalog(singleton_family(g), ctx.solve());
        Json side = {{"dim_A", cat.value}, {"bases", cat.all_bases.size()}, {"dominating_bases", cat.b2.size()}};
        if (!cat.b2.empty()) side["example"] = labels(*g.universe(), cat.b2.front());
        detail[cyc ? "C_n" : "P_n"] = side;
        dom.push_back(cat.b2.size());
      }
      if (n < 7 || n % 5 == 1 || n % 5 == 3) {
        rec.hypothesis_not_met(inst, "needs n >= 7 and n mod 5 in {0,2,4}", detail);
        return;
      }
      rec.record(inst, dom[0] > 0 && dom[1] > 0, Json::array({dom[0], dom[1]}), ">= 1 each", detail);
    });
  }
}

// A dominating adjacency basis shared by P_n and C_n, if any.
std::optional<VertexSet> shared_dominating_basis(std::size_t n, const SolveOptions& opts) {
  auto u = make_indexed_universe(n);
  const auto fam = family_of({path_graph(u, "P"), cycle_graph(u, "C")}, "");
  const auto cat = basis_catalog(fam, opts);
  if (cat.value != floor_formula(n) || cat.b2.empty()) return std::nullopt;
  return cat.b2.front();
}

// H ⊆ G_B(P_n) ∪ G_B(C_n) containing P_n or C_n.
GraphFamily tagged(const GraphFamily& fam, const std::string& tag) {
  std::vector<LabeledGraph> ms;
  for (const auto& g : fam) ms.push_back(g.renamed(tag + ":" + g.name()));
  return GraphFamily(fam.universe(), std::move(ms));
}

std::vector<GraphFamily> rem_4_12_families(Context& ctx, std::size_t n, const VertexSet& b) {
  auto u = make_indexed_universe(n);
  const auto p = path_graph(u, "P" + std::to_string(n));
  const auto c = cycle_graph(u, "C" + std::to_string(n));
  PermSampleOptions without;
  without.include_base = false;
  std::vector<GraphFamily> out;
  const auto sp = tagged(perm_family_sample(p, b, 3, ctx.rng()()), "P");
  const auto sc = tagged(perm_family_sample(c, b, 2, ctx.rng()(), without), "C");
  out.push_back(sp.united_with(sc, "G_B(P) sample with P, G_B(C) sample"));
  const auto sp2 = tagged(perm_family_sample(p, b, 2, ctx.rng()(), without), "P");
  out.push_back(singleton_family(c).united_with(sp2, "C, G_B(P) sample"));
  out.push_back(family_of({p, c}, "{P,C}"));
  return out;
}

void check_rem_4_12(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "n in {7,9,10}: a dominating basis B of P_n and C_n and seeded subfamilies of "
                "G_B(P_n) ∪ G_B(C_n) containing P_n or C_n";
  for (long n : ctx.get_ints("n", ctx.full() ? std::vector<long>{7, 9, 10, 12} : std::vector<long>{7, 9, 10})) {
    const auto sz = static_cast<std::size_t>(n);
    const Json inst0 = {{"n", n}};
    if (n < 7 || n % 5 == 1 || n % 5 == 3) {
      rec.hypothesis_not_met(inst0, "needs n >= 7 and n mod 5 in {0,2,4}");
      continue;
    }
    rec.attempt(inst0, [&] {
      const auto b = shared_dominating_basis(sz, ctx.solve());
      if (!b) {
        rec.hypothesis_not_met(inst0, "no adjacency basis dominating both P_n and C_n");
        return;
      }
      for (const auto& fam : rem_4_12_families(ctx, sz, *b)) {
        const Json inst = {{"n", n}, {"B", labels(*fam.universe(), *b)}, {"family", describe(fam)}};
        const auto cat = basis_catalog(fam, ctx.solve());
        const auto both = common(cat.b1, cat.b2);
        const bool b_in = std::find(both.begin(), both.end(), *b) != both.end();
        rec.record(inst, !both.empty(), both.size(), ">= 1",
                   {{"B_in_B1_cap_B2", b_in}, {"Sd_A", cat.value}});
      }
    });
  }
}

void check_prop_4_13(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "G = {P2} and {P3,K3} with H from n=7 subfamilies of G_B(P7) ∪ G_B(C7)";
  const std::size_t n = static_cast<std::size_t>(ctx.get_int("n", 7));
  const auto b = shared_dominating_basis(n, ctx.solve());
  if (!b || n < 7 || n % 5 == 1 || n % 5 == 3) {
    rec.hypothesis_not_met({{"n", n}}, "needs n >= 7, n mod 5 in {0,2,4} and a shared dominating basis");
    return;
  }
  auto u3 = make_indexed_universe(3, "a");
  std::vector<GraphFamily> gs = {on_prefix(named(path_graph(2)), "a")};
  if (ctx.full()) gs.push_back(family_of({path_graph(u3, "P3"), complete_graph(u3, "K3")}, "{P3,K3}"));
  const auto hs = rem_4_12_families(ctx, n, *b);
  for (const auto& g : gs)
    for (const auto& h0 : hs) {
      const auto h = on_prefix(h0, "b");
      const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
      rec.attempt(inst, [&] {
        const auto lhs = sd(lex_product_families(g, h), ctx.solve());
        rec.equal(inst, lhs, g.order() * floor_formula(n));
      });
    }
}

void check_rem_4_18(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "{P7}+{C7}, {P7,C7}+{P7}, and seeded G_B(P7) + G_B'(C7) samples containing the bases";
  auto ua = make_indexed_universe(7, "a");
  auto ub = make_indexed_universe(7, "b");
  const auto pa = path_graph(ua, "P7");
  const auto cb = cycle_graph(ub, "C7");
  std::vector<std::pair<GraphFamily, GraphFamily>> cases = {
      {named(pa), named(cb)},
      {family_of({pa, cycle_graph(ua, "C7")}, "{P7,C7}"), named(path_graph(ub, "P7"))},
  };
  const auto ba = solve(named(pa), kAdj, ctx.solve()).witness;
  const auto bb = solve(named(cb), kAdj, ctx.solve()).witness;
  cases.push_back({perm_family_sample(pa, ba, 2, ctx.rng()()), perm_family_sample(cb, bb, 2, ctx.rng()())});
  for (const auto& [h, h2] : cases) {
    const Json inst = {{"H", describe(h)}, {"H'", describe(h2)}};
    if (family_lemma_hypothesis(h).empty() && h.size() == 1) {
      rec.hypothesis_not_met(inst, "containment-lemma hypothesis fails for H");
      continue;
    }
    rec.attempt(inst, [&] {
      const auto fam = join_families(h, h2);
      const auto cat = basis_catalog(fam, ctx.solve());
      const auto both = common(cat.b1, cat.b2);
      Json detail = {{"Sd_A", cat.value}, {"bases", cat.all_bases.size()}};
      if (!both.empty()) detail["example"] = labels(*fam.universe(), both.front());
      rec.record(inst, !both.empty(), both.size(), ">= 1", detail);
    });
  }
}

void check_prop_lex_join(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "K1∘({P7}+{C7}), K1∘(G_B(P7)+G_B'(C7)) samples; P2∘({P7}+{C7}) (28 vertices, "
                "skipped if over budget)";
  auto ua = make_indexed_universe(7, "a");
  auto ub = make_indexed_universe(7, "b");
  const auto pa = path_graph(ua, "P7");
  const auto cb = cycle_graph(ub, "C7");
  const auto ba = solve(named(pa), kAdj, ctx.solve()).witness;
  const auto bb = solve(named(cb), kAdj, ctx.solve()).witness;
  const auto k1 = complete_family(1, "u");
  const auto p2 = on_prefix(named(path_graph(2)), "u");
  struct Case {
    GraphFamily g, h, h2;
    bool perm;
  };
  std::vector<Case> cases = {
      {k1, named(pa), named(cb), false},
      {k1, perm_family_sample(pa, ba, 2, ctx.rng()()), perm_family_sample(cb, bb, 2, ctx.rng()()), true},
      {p2, named(pa), named(cb), false},
  };
  const auto cap = static_cast<std::uint64_t>(ctx.get_int("budget", 20'000'000));
  for (const auto& c : cases) {
    const Json inst = {{"G", describe(c.g)}, {"H", describe(c.h)}, {"H'", describe(c.h2)}};
    rec.attempt(inst, [&] {
      const auto lhs = sd(lex_product_families(c.g, join_families(c.h, c.h2)), capped(ctx.solve(), cap));
      const auto a = c.perm ? dim_a(pa, ctx.solve()) : sd_a(c.h, ctx.solve());
      const auto a2 = c.perm ? dim_a(cb, ctx.solve()) : sd_a(c.h2, ctx.solve());
      rec.equal(inst, lhs, c.g.order() * (a + a2),
                {{"form", c.perm ? "dim_A(H)+dim_A(H')" : "Sd_A(H)+Sd_A(H')"}});
    });
  }
}

void check_rem_4_15(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "t in {2,3}: {N_t+G', K_t+G''} with seeded G', G'' on 2..4 vertices, plus an extra "
                "connected member";
  const long count = ctx.get_int("count", ctx.full() ? 40 : 12);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const std::size_t t = pick(rng, 2, 3);
    auto u = make_indexed_universe(pick(rng, 2, 4));
    auto fam = apex_pair(t, random_graph(rng, u, 1, 2, "G'"), random_graph(rng, u, 1, 2, "G''"));
    if (coin(rng, 1, 2))
      fam = fam.with_member(random_connected_graph(rng, fam.universe(), 1, 2, "R"));
    const Json inst = {{"t", t}, {"family", describe(fam)}};
    const auto vm = v_m(fam);
    VertexSet vprime(fam.order());
    for (std::size_t k = 0; k < t; ++k) vprime.set(k);
    rec.record(inst, vm.any(), vm.count(), ">= 1",
               {{"V_M", labels(*fam.universe(), vm)}, {"contains_V'", vprime.is_subset_of(vm)}});
  }
}

void check_cor_4_14(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every pair of nonempty subfamilies, G = {P4,C4}, {P5,C5}, {P6,C6}, t in {2,3}";
  for (long n : ctx.get_ints("n", {4, 5, 6})) {
    for (long t : ctx.get_ints("t", {2, 3})) {
      const auto sn = static_cast<std::size_t>(n), st = static_cast<std::size_t>(t);
      auto u = make_indexed_universe(sn);
      const std::vector<LabeledGraph> gs = {path_graph(u, "P" + std::to_string(n)),
                                            cycle_graph(u, "C" + std::to_string(n))};
      const Json inst = {{"n", n}, {"t", t}};
      if (n < 4 || t < 2) {
        rec.hypothesis_not_met(inst, "needs n >= 4 and t >= 2");
        continue;
      }
      // Candidate pool on w1..wt, v1..vn: N_t+G_i, then K_{n+t}, K_t+G_i.
      std::vector<LabeledGraph> low, high;
      UniversePtr uni;
      for (const auto& g : gs) {
        const auto pair = apex_pair(st, g, g);
        if (!uni) uni = pair.universe();
        low.push_back(on(uni, pair[0]));
        high.push_back(on(uni, pair[1]));
      }
      high.insert(high.begin(), complete_graph(uni, "K" + std::to_string(n + t)));
      VertexSet v2(sn + st);
      for (std::size_t k = 0; k < st; ++k) v2.set(k);
      std::size_t pairs = 0, bad = 0;
      Json first_bad;
      for (std::uint64_t a = 1; a < (std::uint64_t{1} << low.size()); ++a)
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << high.size()); ++b) {
          std::vector<LabeledGraph> ms;
          for (std::size_t k = 0; k < low.size(); ++k)
            if ((a >> k) & 1U) ms.push_back(low[k]);
          for (std::size_t k = 0; k < high.size(); ++k)
            if ((b >> k) & 1U) ms.push_back(high[k]);
          const GraphFamily fam(uni, ms);
          const auto vm = v_m(fam);
          ++pairs;
          if (!(vm == v2) && bad++ == 0)
            first_bad = {{"family", describe(fam)}, {"V_M", labels(*uni, vm)}};
        }
      Json detail = {{"subfamily_pairs", pairs}, {"V2", labels(*uni, v2)}};
      if (bad) detail["first_counterexample"] = first_bad;
      rec.equal(inst, pairs - bad, pairs, detail);
    }
  }
}

std::vector<LabeledGraph> co_connected(std::size_t n) {
  std::vector<LabeledGraph> out;
  for (auto& g : all_graphs(n, true))
    if (is_connected(complement(g))) out.push_back(std::move(g));
  return out;
}

void check_rem_4_16(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every labeled connected graph with connected complement and a twin class, n 4..6; "
                "families {G, coG} and {G, coG, R} with seeded connected R";
  for (long n : ctx.get_ints("n", {4, 5, 6})) {
    const auto sz = static_cast<std::size_t>(n);
    std::size_t applicable = 0, ok = 0;
    Json first_bad;
    for (const auto& g : co_connected(sz)) {
      const auto tp = twin_partition(g);
      if (tp.true_class_count() == 0 && tp.false_class_count() == 0) continue;
      ++applicable;
      GraphFamily fam = family_of({g, complement(g)}, "");
      if (coin(ctx.rng(), 1, 2)) fam = fam.with_member(random_connected_graph(ctx.rng(), g.universe(), 1, 2, "R"));
      if (v_m(fam).any()) ++ok;
      else if (first_bad.is_null()) first_bad = describe(fam);
    }
    Json detail = {{"graphs_meeting_hypothesis", applicable}};
    if (!first_bad.is_null()) detail["counterexample"] = first_bad;
    rec.equal({{"n", n}}, ok, applicable, detail);
  }
}

void check_cor_4_17(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every labeled connected graph with connected complement, n 4..6";
  for (long n : ctx.get_ints("n", {4, 5, 6})) {
    std::size_t total = 0, ok = 0;
    Json first_bad;
    for (const auto& g : co_connected(static_cast<std::size_t>(n))) {
      ++total;
      const auto tp = twin_partition(g);
      const auto expect = tp.true_twin_vertices() | tp.false_twin_vertices();
      if (v_m(family_of({g, complement(g)}, "")) == expect) ++ok;
      else if (first_bad.is_null()) first_bad = describe(g);
    }
    Json detail = {{"graphs", total}};
    if (!first_bad.is_null()) detail["counterexample"] = first_bad;
    rec.equal({{"n", n}}, ok, total, detail);
  }
}

// Solves under a node cap; an exhausted budget still refutes the claim when
// its proven bounds exclude the expected value.
void capped_equality(Recorder& rec, const Json& inst, const GraphFamily& fam, std::size_t expected,
                     const SolveOptions& opts, Json detail) {
  try {
    const auto lhs = sd(fam, opts);
    rec.equal(inst, lhs, expected, std::move(detail));
  } catch (const BudgetExceeded& e) {
    detail["lower"] = e.lower();
    detail["upper"] = e.upper();
    if (e.upper() < expected || e.lower() > expected) {
      rec.record(inst, false, Json{{"lower", e.lower()}, {"upper", e.upper()}}, expected, detail);
    } else {
      rec.skipped(inst, e.what());
    }
  }
}

GraphFamily prop_4_19_family(std::size_t p, std::size_t t, bool with_complete) {
  auto u = make_indexed_universe(p, "v");
  const auto pair = apex_pair(t, path_graph(u, "P" + std::to_string(p)), path_graph(u, "P" + std::to_string(p)));
  if (!with_complete) return pair;
  return pair.with_member(complete_graph(pair.universe(), "K" + std::to_string(p + t)));
}

void check_prop_4_19(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "(i) p=4, t=2, G' = {N2+P4}, G'' = {K2+P4} or {K2+P4, K6}, every nonempty H ⊆ H5; "
                "(ii) the same with H_ex^(7) under a node cap";
  const auto p = static_cast<std::size_t>(ctx.get_int("p", 4));
  const auto t = static_cast<std::size_t>(ctx.get_int("t", 2));
  for (int with_complete = 0; with_complete < 2; ++with_complete) {
    const auto g = prop_4_19_family(p, t, with_complete == 1);
    for (const auto& h : nonempty_subfamilies(h5_family())) {
      const Json inst = {{"part", "i"}, {"G", describe(g)}, {"H", describe(h)}};
      rec.attempt(inst, [&] {
        const auto vm = v_m(g);
        const auto lhs = sd(lex_product_families(g, h), ctx.solve());
        rec.equal(inst, lhs, 2 * p + 3 * t,
                  {{"V_M", labels(*g.universe(), vm)}, {"|V|*Sd_A(H)", (p + t) * sd_a(h, ctx.solve())}});
      });
    }
  }
  const auto cap = static_cast<std::uint64_t>(ctx.get_int("budget", ctx.full() ? 20'000'000 : 500'000));
  const std::size_t n = 7;
  const auto g = prop_4_19_family(p, t, false);
  const auto hex = h_ex_family(n, false);
  for (const auto& h : {hex.subfamily({0}, "{H1}"), hex}) {
    const Json inst = {{"part", "ii"}, {"G", describe(g)}, {"H", describe(h)}, {"node_cap", cap}};
    const std::size_t expected = (p + t) * (floor_formula(n) + 2) + t;
    capped_equality(rec, inst, lex_product_families(g, h), expected, capped(ctx.solve(), cap),
                    {{"vertices", g.order() * h.order()}});
  }
}

void check_prop_4_20(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "(i) G in {P4, T5 (a1-a2-a3-a4 plus a5 on a2)}, every nonempty H ⊆ H5; (ii) P4 with "
                "H_ex^(7) under a node cap";
  for (const auto& g : {path_graph(make_indexed_universe(4, "a"), "P4"), fork_tree()}) {
    const auto gbar = complement(g).renamed("co" + g.name());
    const Json ginst = describe(g);
    if (!is_connected(g) || !is_connected(gbar)) {
      rec.hypothesis_not_met({{"G", ginst}}, "G and its complement must be connected");
      continue;
    }
    const auto fam = family_of({g, gbar}, "{G,coG}");
    const auto tp = twin_partition(g);
    const std::size_t q = g.order();
    const std::size_t extra = tp.true_twin_vertices().count() + tp.false_twin_vertices().count();
    for (const auto& h : nonempty_subfamilies(h5_family())) {
      const Json inst = {{"part", "i"}, {"G", ginst}, {"H", describe(h)}};
      rec.attempt(inst, [&] {
        const auto lhs = sd(lex_product_families(fam, h), ctx.solve());
        rec.equal(inst, lhs, 2 * q + extra,
                  {{"V_M", labels(*g.universe(), v_m(fam))}, {"q*Sd_A(H)", q * sd_a(h, ctx.solve())}});
      });
    }
  }
  const auto cap = static_cast<std::uint64_t>(ctx.get_int("budget", ctx.full() ? 20'000'000 : 500'000));
  const std::size_t n = 7;
  const auto g = path_graph(make_indexed_universe(4, "a"), "P4");
  const auto fam = family_of({g, complement(g).renamed("coP4")}, "{P4,coP4}");
  const auto hex = h_ex_family(n, false);
  const Json inst = {{"part", "ii"}, {"G", describe(g)}, {"H", describe(hex)}, {"node_cap", cap}};
  capped_equality(rec, inst, lex_product_families(fam, hex), 4 * (floor_formula(n) + 2), capped(ctx.solve(), cap),
                  {{"vertices", 4 * hex.order()}});
}

void thm_4_23_instance(Context& ctx, Recorder& rec, const LabeledGraph& g, const GraphFamily& h) {
  const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
  if (!is_connected(g) || !nontrivial(h)) {
    rec.hypothesis_not_met(inst, "G must be connected and H non-trivial");
    return;
  }
  rec.attempt(inst, [&] {
    const auto cat = basis_catalog(h, ctx.solve());
    if (has_common(cat.b1, cat.b2)) {
      rec.hypothesis_not_met(inst, "some basis is in B1 and B2 (uncovered and dominating everywhere)");
      return;
    }
    const auto x = xi(g, h, cat);
    const auto lhs = sd(lex_product_families(singleton_family(g), h), ctx.solve());
    const std::size_t lo = g.order() * cat.value, hi = lo + x.value;
    Json detail = {{"xi", x.value}, {"Sd_A(H)", cat.value}};
    if (x.first) detail["xi_basis"] = labels(*h.universe(), *x.first);
    rec.record(inst, lo <= lhs && lhs <= hi, lhs, Json{{"lower", lo}, {"upper", hi}}, detail);
  });
}

void check_thm_4_23(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "K3∘H5, P3∘H5, P2∘K(4), K_{1,3}∘{P5}, C4∘{C5} and seeded random pairs";
  const auto h5 = on_prefix(h5_family(), "b");
  thm_4_23_instance(ctx, rec, complete_graph(make_indexed_universe(3, "a"), "K3"), h5);
  thm_4_23_instance(ctx, rec, path_graph(make_indexed_universe(3, "a"), "P3"), h5);
  thm_4_23_instance(ctx, rec, path_graph(make_indexed_universe(2, "a"), "P2"), on_prefix(star_family(4), "b"));
  thm_4_23_instance(ctx, rec, rebind(star_graph(4), make_indexed_universe(4, "a"), "K1,3"),
                    on_prefix(named(path_graph(5)), "b"));
  thm_4_23_instance(ctx, rec, cycle_graph(make_indexed_universe(4, "a"), "C4"),
                    on_prefix(named(cycle_graph(5)), "b"));
  const long count = ctx.get_int("count", ctx.full() ? 40 : 10);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    thm_4_23_instance(ctx, rec, random_connected_graph(rng, make_indexed_universe(pick(rng, 2, 4), "a"), 1, 2, "G"),
                      on_prefix(random_family(rng, pick(rng, 3, 4), pick(rng, 1, 2), false), "b"));
  }
}

void check_prop_4_24(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "twins-free P4, C5, P5 with H5, {P3}, K(4) and seeded random families; seeded "
                "random connected G (twin-containing ones reported as hypothesis not met)";
  std::vector<std::pair<LabeledGraph, GraphFamily>> cases = {
      {path_graph(4), h5_family()}, {cycle_graph(5), named(path_graph(3))},
      {path_graph(5), named(path_graph(2))}, {path_graph(4), star_family(4)}};
  const long count = ctx.get_int("count", ctx.full() ? 40 : 10);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    cases.push_back({random_connected_graph(rng, make_indexed_universe(pick(rng, 4, 5)), 1, 2, "G"),
                     random_family(rng, pick(rng, 2, 3), pick(rng, 1, 2), false)});
  }
  for (const auto& [g0, h0] : cases) {
    const auto g = on(make_indexed_universe(g0.order(), "a"), g0);
    const auto h = on_prefix(h0, "b");
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    if (!is_connected(g) || !twin_partition(g).twins_free()) {
      rec.hypothesis_not_met(inst, "G must be connected and twins-free");
      continue;
    }
    rec.attempt(inst, [&] {
      rec.equal(inst, sd(lex_product_families(singleton_family(g), h), ctx.solve()),
                g.order() * sd_a(h, ctx.solve()));
    });
  }
}

void check_prop_4_25(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "K(V) with |V| in {4,5} (6 in full-desk)";
  const auto p2 = path_graph(make_indexed_universe(2, "a"), "P2");
  for (long n : ctx.get_ints("n", ctx.full() ? std::vector<long>{4, 5, 6} : std::vector<long>{4, 5})) {
    const Json inst = {{"n", n}};
    if (n < 4) {
      rec.hypothesis_not_met(inst, "|V| >= 4 required");
      continue;
    }
    rec.attempt(inst, [&] {
      const auto k = on_prefix(star_family(static_cast<std::size_t>(n)), "b");
      const auto lhs = sd(lex_product_families(singleton_family(p2), k), ctx.solve());
      const auto x = xi(p2, k, ctx.solve()).value;
      rec.equal(inst, lhs, static_cast<std::size_t>(2 * n - 1), {{"xi", x}, {"xi_is_one", x == 1}});
    });
  }
}

void check_cor_4_27(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "P3∘P2, P2∘P3, C4∘K2, P3∘P3, P2∘C5 with a solver basis and seeded removals from E'";
  const std::vector<std::pair<LabeledGraph, LabeledGraph>> cases = {
      {path_graph(3), path_graph(2)}, {path_graph(2), path_graph(3)}, {cycle_graph(4), complete_graph(2)},
      {path_graph(3), path_graph(3)}, {path_graph(2), cycle_graph(5)}};
  for (const auto& [g0, h0] : cases) {
    const auto g = on(make_indexed_universe(g0.order(), "a"), g0);
    const auto h = on(make_indexed_universe(h0.order(), "b"), h0);
    const auto prod = lex_product(g, h);
    const Json inst = {{"G", describe(g)}, {"H", describe(h)}};
    rec.attempt(inst, [&] {
      const auto b = solve(singleton_family(prod), kAdj, ctx.solve()).witness;
      const auto relaxable = lex_relaxable_edges(prod, h.order(), b);
      std::vector<std::vector<Edge>> removals;
      for (int k = 0; k < 4; ++k) {
        std::vector<Edge> r;
        for (const auto& e : relaxable)
          if (coin(ctx.rng(), 1, 2)) r.push_back(e);
        removals.push_back(r);
      }
      const auto fam = relaxed_lex_family(g, h, b, removals);
      rec.leq(inst, sd(fam, ctx.solve()), dim(prod, ctx.solve()),
              {{"B", labels(*prod.universe(), b)}, {"E_prime", relaxable.size()}});
    });
  }
}

void check_ex_h5(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "paper instance (H5 fixture): exact B1/B2 catalogs and zeta on every nonempty subfamily";
  const auto fam = ctx.fixture("h5").family;
  const auto& u = *fam.universe();
  auto sets = [&](std::vector<std::vector<std::string>> ls) {
    std::vector<VertexSet> out;
    for (const auto& l : ls) out.push_back(u.subset(l));
    sort_lexicographic(out);
    return out;
  };
  struct Expected {
    std::vector<std::size_t> members;
    std::vector<VertexSet> b1, b2;
  };
  const std::vector<Expected> expected = {
      {{0, 1}, sets({{"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}}), sets({{"v2", "v4"}})},
      {{0}, sets({{"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}}), sets({{"v2", "v4"}})},
      {{1}, sets({{"v1", "v2"}, {"v1", "v5"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}}),
       sets({{"v1", "v3"}, {"v1", "v4"}, {"v2", "v4"}, {"v2", "v5"}, {"v3", "v5"}})},
  };
  for (const auto& e : expected) {
    const auto sub = fam.subfamily(e.members);
    const Json inst = {{"family", describe(sub)}};
    auto cat = basis_catalog(sub, ctx.solve());
    sort_lexicographic(cat.b1);
    sort_lexicographic(cat.b2);
    const auto z = zeta(sub, cat).value;
    const bool ok = cat.b1 == e.b1 && cat.b2 == e.b2 && z == 1;
    rec.record(inst, ok, Json{{"B1", labels(u, cat.b1)}, {"B2", labels(u, cat.b2)}, {"zeta", z}},
               Json{{"B1", labels(u, e.b1)}, {"B2", labels(u, e.b2)}, {"zeta", 1}},
               {{"disjoint", !has_common(cat.b1, cat.b2)}});
  }
}

void check_ex_hex(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "H_ex^(10) fixture (every nonempty subfamily); full-desk adds n = 7 and 12";
  struct Case {
    GraphFamily fam;
    std::size_t n;
  };
  std::vector<Case> cases;
  cases.push_back({ctx.fixture("hex10").family, 10});
  if (ctx.full()) {
    cases.push_back({h_ex_family(7, false), 7});
    cases.push_back({h_ex_family(12, false), 12});
  }
  for (const auto& c : cases) {
    const auto u = c.fam.universe();
    VertexSet v1(c.fam.order());
    for (std::size_t i = 0; i < c.n; ++i) v1.set(i);
    const auto pn = path_graph(c.n), cn = cycle_graph(c.n);
    for (const auto& sub : nonempty_subfamilies(c.fam)) {
      const Json inst = {{"n", c.n}, {"family", describe(sub)}};
      rec.attempt(inst, [&] {
        bool induced_ok = true;
        for (const auto& g : sub) {
          const auto ind = rebind(induced_subgraph(g, v1), pn.universe());
          if (!(ind == pn) && !(ind == cn)) induced_ok = false;
        }
        const auto why = check_h_ex_properties(sub, c.n);
        Json detail = {{"induced_V1_is_P_or_C", induced_ok}};
        if (!why.empty()) detail["failure"] = why;
        rec.record(inst, induced_ok && why.empty(), why.empty() ? "properties hold" : why, "properties hold",
                   detail);
      });
    }
  }
}

}  // namespace

void register_lex_checks(std::vector<Registration>& out) {
  out.push_back({{"claim-4.1", Relation::Equality,
                  "neighbourhoods and distances in G∘H: N(a,b) = {a}×N_H(b) ∪ N_G(a)×V(H), "
                  "d((a,b),(c,d)) = d_G(a,c), d((a,b),(a,d)) = d_{H,2}(b,d)"}, check_claim_4_1});
  out.push_back({{"thm-4.2", Relation::SetEquality,
                  "metric generators and adjacency generators of G∘H coincide"}, check_thm_4_2});
  out.push_back({{"cor-4.3", Relation::Equality, "dim(G∘H) = dim_A(G∘H); Sd(G∘H) = Sd_A(G∘H)"}, check_cor_4_3});
  out.push_back({{"thm-4.4", Relation::Inequality, "dim(G∘H) >= n·dim_A(H)"}, check_thm_4_4});
  out.push_back({{"thm-4.5", Relation::Inequality, "Sd(G∘H) >= |V1|·Sd_A(H)"}, check_thm_4_5});
  out.push_back({{"thm-4.6", Relation::Equality,
                  "Sd(G∘H) = Sd(G∘coH) = |V1|·Sd_A(H) when V_M = ∅ or B1 ∩ B2 ≠ ∅; otherwise "
                  "|V1|·Sd_A(H)+|V_M| <= Sd(G∘H) = Sd(G∘coH) <= |V1|·Sd_A(H)+zeta(H)·|V_M|"}, check_thm_4_6});
  out.push_back({{"rem-4.7", Relation::Equality, "V_M = ∅ when every member is a tree or has girth >= 4"}, check_rem_4_7});
  out.push_back({{"rem-4.8", Relation::Equality, "V_M(H) = ∅ for every H ⊆ G_B(G)"}, check_rem_4_8});
  out.push_back({{"rem-4.9", Relation::Equality,
                  "zeta(H) = 1 for single-member H, when some B2 lies in N_H(v) for every H, or when "
                  "|B1 ∪ B2| = Sd_A(H)+1"}, check_rem_4_9});
  out.push_back({{"rem-4.10", Relation::Equality, "V_M({G}) = ∅ for every graph G"}, check_rem_4_10});
  out.push_back({{"lem-4.11", Relation::Existence,
                  "P_n and C_n (n >= 7, n mod 5 in {0,2,4}) have dominating adjacency bases"}, check_lem_4_11});
  out.push_back({{"rem-4.12", Relation::Existence,
                  "B1(H) ∩ B2(H) ≠ ∅ for H ⊆ G_B(P_n) ∪ G_B(C_n) containing P_n or C_n"}, check_rem_4_12});
  out.push_back({{"prop-4.13", Relation::Equality,
                  "Sd(G∘H) = |V|·floor((2n+2)/5) for H ⊆ G_B(P_n) ∪ G_B(C_n) containing P_n or C_n"}, check_prop_4_13});
  out.push_back({{"cor-4.14", Relation::SetEquality,
                  "V_M(H ∪ H') = V2 for H ⊆ {N_t+G_i}, H' ⊆ {K_{n+t}, K_t+G_i}, G_i paths or cycles"}, check_cor_4_14});
  out.push_back({{"rem-4.15", Relation::Existence, "V_M ≠ ∅ when N_t+G' and K_t+G'' are both members"}, check_rem_4_15});
  out.push_back({{"rem-4.16", Relation::Existence,
                  "V_M ≠ ∅ for families containing G and coG, G with twins, both connected"}, check_rem_4_16});
  out.push_back({{"cor-4.17", Relation::SetEquality, "V_M({G, coG}) = V_T(G) ∪ V_F(G)"}, check_cor_4_17});
  out.push_back({{"rem-4.18", Relation::Existence,
                  "B1 ∩ B2 ≠ ∅ for joins H+H' of containment-lemma families (or of G_B samples)"}, check_rem_4_18});
  out.push_back({{"prop-lex-join", Relation::Equality,
                  "Sd(G∘(H+H')) = |V1|·Sd_A(H)+|V1|·Sd_A(H'), and the G_B form with dim_A"}, check_prop_lex_join});
  out.push_back({{"prop-4.19", Relation::Equality,
                  "Sd((G'∪G'')∘H) = 2p+3t for H ⊆ H5; (p+t)(floor((2n+2)/5)+2)+t for H ⊆ H_ex^(n)"}, check_prop_4_19});
  out.push_back({{"prop-4.20", Relation::Equality,
                  "Sd({G,coG}∘H) = 2q+|V_T(G)|+|V_F(G)| for H ⊆ H5; q(floor((2n+2)/5)+2)+|V_T|+|V_F| "
                  "for H ⊆ H_ex^(n)"}, check_prop_4_20});
  out.push_back({{"thm-4.23", Relation::Inequality,
                  "n·Sd_A(H) <= Sd(G∘H) <= n·Sd_A(H)+xi(G,H) when B1 ∩ B2 = ∅"}, check_thm_4_23});
  out.push_back({{"prop-4.24", Relation::Equality, "Sd(G∘H) = n·Sd_A(H) for twins-free G"}, check_prop_4_24});
  out.push_back({{"prop-4.25", Relation::Equality, "Sd(P2∘K(V)) = 2|V|-1"}, check_prop_4_25});
  out.push_back({{"cor-4.27", Relation::Inequality, "Sd(R_B) <= dim(G∘H) for relaxed lexicographic products"}, check_cor_4_27});
  out.push_back({{"ex-h5", Relation::SetEquality,
                  "B1/B2 catalogs of H5, {P5}, {C5} and zeta = 1 on every nonempty subfamily"}, check_ex_h5});
  out.push_back({{"ex-hex", Relation::Equality,
                  "H_ex^(n): Sd_A = floor((2n+2)/5)+2, basis forms, zeta = 1 on every nonempty subfamily"}, check_ex_hex});
}

}  // namespace simdim::detail
