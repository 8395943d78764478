// Checks for single-universe statements: bounds, twins, complements, the
// stabilizer families and the two figure fixtures.
#include <algorithm>

#include "verifier_internal.hpp"

namespace simdim::detail {
namespace {

const Truncation kAdj = Truncation::adjacency();
const Truncation kMetric = Truncation::geodesic();

bool twin_cover(const GraphFamily& fam) {
  const std::size_t n = fam.order();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool found = false;
      for (const auto& g : fam)
        if (are_twins(g, u, v)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
  sort_lexicographic(v);
  return v;
}

// Figure 2 permutations on v1..v8; B = {v1, v3, v7} is fixed pointwise.
StabilizerPermutation figure2_permutation(const UniversePtr& u, int which) {
  std::vector<std::size_t> m(8);
  for (std::size_t i = 0; i < 8; ++i) m[i] = i;
  auto set = [&](int from, int to) { m[from - 1] = static_cast<std::size_t>(to - 1); };
  if (which == 1) {
    set(2, 6), set(4, 8), set(5, 2), set(6, 4), set(8, 5);
  } else {
    set(2, 5), set(4, 8), set(5, 6), set(6, 4), set(8, 2);
  }
  return StabilizerPermutation(u, m, u->subset({"v1", "v3", "v7"}));
}

void check_fig1(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "paper instance (Figure 1 fixture)";
  const auto fam = ctx.fixture("figure1").family;
  const auto& u = *fam.universe();
  const auto a = solve(fam, kAdj, ctx.solve());
  const auto basis_a = u.subset({"v1", "v3", "v5", "v8"});
  const bool gen_a = is_generator(fam, basis_a, kAdj);
  rec.record({{"side", "Sd_A"}, {"family", describe(fam)}}, a.value == 4 && gen_a, a.value, 4,
             {{"witness", labels(u, a.witness)}, {"claimed_basis", labels(u, basis_a)},
              {"claimed_basis_generates", gen_a}, {"nodes", a.stats.nodes}});
  const auto m = solve(fam, kMetric, ctx.solve());
  const auto basis_m = u.subset({"v1", "v5", "v8"});
  const bool gen_m = is_generator(fam, basis_m, kMetric);
  rec.record({{"side", "Sd"}, {"family", describe(fam)}}, m.value == 3 && gen_m, m.value, 3,
             {{"witness", labels(u, m.witness)}, {"claimed_basis", labels(u, basis_m)},
              {"claimed_basis_generates", gen_m}, {"nodes", m.stats.nodes}});
}

void check_fig2(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "paper instance (Figure 2 fixture)";
  const auto fam = ctx.fixture("figure2").family;
  const auto u = fam.universe();
  const auto base = cycle_graph(u, "C8");
  const auto b = u->subset({"v1", "v3", "v7"});
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const int which = i < 4 ? 1 : 2;
    const auto f = figure2_permutation(u, which);
    const bool member = in_perm_family(fam[i], base, b, f);
    const auto d = dim_a(fam[i], ctx.solve());
    rec.record({{"graph", fam[i].name()}, {"permutation", "f" + std::to_string(which)}},
               member && d == 3, d, 3, {{"in_G_B_f", member}});
  }
  const auto s = solve(fam, kAdj, ctx.solve());
  const bool gen = is_generator(fam, b, kAdj);
  rec.record({{"family", describe(fam)}, {"claim", "Sd_A and B generates"}}, s.value == 3 && gen,
             s.value, 3, {{"B_generates", gen}, {"witness", labels(*u, s.witness)}});
}

void check_rem_2_1(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 250 : 60);
  check.scope = "seeded random families of connected graphs, n in 4..7, 1..3 members";
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const auto fam = random_family(rng, pick(rng, 4, 7), pick(rng, 1, 3), true);
    const Json inst = {{"sample", i}, {"family", describe(fam)}};
    rec.attempt(inst, [&] {
      const auto a = sd_a(fam, ctx.solve());
      std::size_t max_dim = 0;
      for (const auto& g : fam) max_dim = std::max(max_dim, dim_a(g, ctx.solve()));
      const auto m = sd(fam, ctx.solve());
      const bool ok = max_dim <= a && m <= a && a + 1 <= fam.order();
      rec.record(inst, ok, a, Json{{"max_dim_A", max_dim}, {"Sd", m}, {"n_minus_1", fam.order() - 1}});
    });
  }
}

void check_cor_2_2(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 100 : 30);
  check.scope = "seeded random families with K_n or N_n inserted, n in 3..7";
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const std::size_t n = pick(rng, 3, 7);
    auto fam = random_family(rng, n, pick(rng, 0, 2), false);
    const bool use_complete = coin(rng, 1, 2);
    const auto extreme = use_complete ? complete_graph(fam.universe(), "K" + std::to_string(n))
                                      : empty_graph(fam.universe(), "N" + std::to_string(n));
    fam = fam.with_member(extreme);
    const Json inst = {{"sample", i}, {"family", describe(fam)}};
    rec.attempt(inst, [&] { rec.equal(inst, sd_a(fam, ctx.solve()), n - 1); });
  }
}

void check_thm_2_3(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 250 : 60);
  check.scope =
      "star families n=4..6 plus seeded random connected families (n in 3..6, 1..5 members, "
      "dense and sparse)";
  std::vector<GraphFamily> cases;
  for (std::size_t n = 4; n <= 6; ++n) cases.push_back(star_family(n));
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const std::size_t n = pick(rng, 3, 6);
    const bool dense = coin(rng, 1, 2);
    auto fam = random_family(rng, n, pick(rng, 1, 5), true, dense ? 4 : 1, 5);
    if (i % 4 == 0 && n >= 4) fam = fam.united_with(star_family(fam.universe()));
    cases.push_back(fam);
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& fam = cases[i];
    const Json inst = {{"case", i}, {"family", describe(fam)}};
    rec.attempt(inst, [&] {
      const bool lhs = sd(fam, ctx.solve()) + 1 == fam.order();
      const bool rhs = twin_cover(fam);
      rec.record(inst, lhs == rhs, Json{{"Sd_is_n_minus_1", lhs}}, Json{{"twin_cover", rhs}});
    });
  }
}

void check_rem_2_4(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 250 : 60);
  std::vector<GraphFamily> cases;
  for (std::size_t n = 4; n <= 6; ++n) cases.push_back(star_family(n));
  long drawn = 0;
  while (static_cast<long>(cases.size()) < count + 3 && drawn < 200 * count) {
    ++drawn;
    auto& rng = ctx.rng();
    auto fam = random_family(rng, pick(rng, 3, 5), pick(rng, 3, 8), false);
    if (twin_cover(fam)) cases.push_back(fam);
  }
  check.scope = "star families n=4..6 plus rejection-sampled random families meeting the "
                "twin-cover hypothesis (" + std::to_string(cases.size() - 3) + " kept of " +
                std::to_string(drawn) + " drawn)";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& fam = cases[i];
    const Json inst = {{"case", i}, {"family", describe(fam)}};
    if (!twin_cover(fam)) {
      rec.hypothesis_not_met(inst, "some pair is not twins in any member");
      continue;
    }
    rec.attempt(inst, [&] { rec.equal(inst, sd_a(fam, ctx.solve()), fam.order() - 1); });
  }
}

void check_cor_2_6(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "star families K(V)";
  for (long n : ctx.get_ints("n", ctx.full() ? std::vector<long>{4, 5, 6, 7} : std::vector<long>{4, 5, 6})) {
    const Json inst = {{"n", n}};
    if (n < 4) {
      rec.hypothesis_not_met(inst, "|V| >= 4 required");
      continue;
    }
    rec.attempt(inst, [&] {
      const auto fam = star_family(static_cast<std::size_t>(n));
      rec.equal(inst, sd_a(fam, ctx.solve()), static_cast<std::size_t>(n - 1));
    });
  }
}

void check_rem_2_7(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "exhaustive: every nonempty family on a 2-set and on a 3-set";
  {
    auto u = make_indexed_universe(2);
    GraphFamily all(u, {LabeledGraph(u, {{0, 1}}, "P2"), LabeledGraph(u, std::vector<Edge>{}, "N2")});
    for (const auto& sub : nonempty_subfamilies(all)) {
      const Json inst = {{"family", describe(sub)}};
      rec.attempt(inst, [&] {
        const auto v = sd_a(sub, ctx.solve());
        rec.record(inst, v == 1, Json{{"Sd_A_is_1", v == 1}}, Json{{"in_listed_family", true}});
      });
    }
  }
  auto u = make_indexed_universe(3);
  // P3^(i) has centre v_i; its complement is the single edge between the leaves.
  std::vector<LabeledGraph> graphs;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<Edge> e;
    for (std::size_t x = 0; x < 3; ++x)
      if (x != c) e.emplace_back(c, x);
    graphs.emplace_back(u, e, "P3^" + std::to_string(c + 1));
  }
  for (std::size_t c = 0; c < 3; ++c) graphs.push_back(complement(graphs[c]).renamed("coP3^" + std::to_string(c + 1)));
  graphs.push_back(complete_graph(u, "K3"));
  graphs.push_back(empty_graph(u, "N3"));
  const GraphFamily all(u, graphs, "graphs on {v1,v2,v3}");
  // Allowed families: index masks over the first six graphs for the pairs {i,j}.
  auto allowed_mask = [](std::size_t i, std::size_t j) {
    return (1U << i) | (1U << j) | (1U << (3 + i)) | (1U << (3 + j));
  };
  const unsigned masks[3] = {allowed_mask(0, 1), allowed_mask(0, 2), allowed_mask(1, 2)};
  for (unsigned mask = 1; mask < (1U << graphs.size()); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      if ((mask >> i) & 1U) idx.push_back(i);
    const auto sub = all.subfamily(idx);
    const bool listed = std::any_of(std::begin(masks), std::end(masks),
                                    [&](unsigned m) { return (mask & ~m) == 0; });
    const Json inst = {{"mask", mask}, {"family", describe(sub)}};
    rec.attempt(inst, [&] {
      const bool one = sd_a(sub, ctx.solve()) == 1;
      rec.record(inst, one == listed, Json{{"Sd_A_is_1", one}}, Json{{"in_listed_family", listed}});
    });
  }
  const auto six = all.subfamily({0, 1, 2, 3, 4, 5}, "P3 variants and complements");
  const Json inst = {{"part", "ii"}, {"family", describe(six)}};
  rec.attempt(inst, [&] { rec.equal(inst, sd_a(six, ctx.solve()), 2); });
}

void check_rem_2_8(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 200 : 40);
  check.scope = "seeded random families (any graphs), n in 3..7, 1..3 members";
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const auto fam = random_family(rng, pick(rng, 3, 7), pick(rng, 1, 3), false);
    const auto co = complement_family(fam);
    std::vector<std::size_t> pick_idx;
    for (std::size_t j = 0; j < co.size(); ++j)
      if (coin(rng, 1, 2)) pick_idx.push_back(j);
    if (pick_idx.empty()) pick_idx.push_back(0);
    const auto partial = fam.united_with(co.subfamily(pick_idx));
    const Json inst = {{"sample", i}, {"family", describe(fam)}};
    rec.attempt(inst, [&] {
      const auto a = sd_a(fam, ctx.solve());
      const auto b = sd_a(co, ctx.solve());
      const auto c = sd_a(fam.united_with(co), ctx.solve());
      const auto d = sd_a(partial, ctx.solve());
      const auto bases = sorted(enumerate_bases(fam, kAdj, ctx.solve()));
      const auto co_bases = sorted(enumerate_bases(co, kAdj, ctx.solve()));
      rec.record(inst, a == b && b == c && c == d && bases == co_bases, a,
                 Json{{"complement", b}, {"union", c}, {"with_partial_complement", d},
                      {"bases_coincide", bases == co_bases}, {"basis_count", bases.size()}});
    });
  }
}

void check_rem_2_9(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 200 : 40);
  check.scope = "C8 with B={v1,v3,v7} and seeded random graphs (n in 4..9) with random B, "
                "random f in S(B) and random free edges";
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    LabeledGraph g = i == 0 ? cycle_graph(8) : random_graph(rng, make_indexed_universe(pick(rng, 4, 9)), 1, 2);
    const std::size_t n = g.order();
    VertexSet b(n);
    if (i == 0) {
      b = g.universe()->subset({"v1", "v3", "v7"});
    } else {
      for (std::size_t v = 0; v < n; ++v)
        if (coin(rng, 1, 3)) b.set(v);
      if (b.none()) b.set(bounded_draw(rng, n));
      if (b.count() == n) b.reset(bounded_draw(rng, n));
    }
    const auto outside = (VertexSet::full(n) - b).members();
    const auto perm = random_permutation(rng, outside.size());
    std::vector<std::size_t> mapping(n);
    for (std::size_t v = 0; v < n; ++v) mapping[v] = v;
    for (std::size_t k = 0; k < outside.size(); ++k) mapping[outside[k]] = outside[perm[k]];
    const StabilizerPermutation f(g.universe(), mapping, b);
    std::vector<Edge> free_edges;
    for (std::size_t x = 0; x < outside.size(); ++x)
      for (std::size_t y = x + 1; y < outside.size(); ++y)
        if (coin(rng, 1, 2)) free_edges.emplace_back(outside[x], outside[y]);
    const auto gp = perm_family_member(g, b, f, free_edges, "G'");
    const auto w = weakly_induced_subgraph(g, b);
    const auto wp = weakly_induced_subgraph(gp, b);
    std::vector<std::size_t> iso(w.order());
    bool mapped = w.order() == wp.order();
    for (std::size_t k = 0; mapped && k < w.order(); ++k) {
      const auto img = wp.universe()->find(g.label(f(g.universe()->index_of(w.label(k)))));
      if (!img) mapped = false;
      else iso[k] = *img;
    }
    const bool ok = mapped && is_isomorphism(w, wp, iso);
    rec.record({{"sample", i}, {"graph", describe(g)}, {"B", labels(*g.universe(), b)}}, ok,
               Json{{"order", w.order()}, {"edges", w.edge_count()}},
               Json{{"order", wp.order()}, {"edges", wp.edge_count()}},
               {{"f_restricts_to_isomorphism", ok}});
  }
}

void check_thm_2_10(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 40 : 8);
  check.scope = "C8 with B={v1,v3,v7} (20-member seeded sample, Figure 2 fixture) and seeded "
                "random connected graphs n in 5..8 with a solver basis";
  struct Case {
    GraphFamily family;
    LabeledGraph base;
    VertexSet b;
  };
  std::vector<Case> cases;
  auto c8 = cycle_graph(8);
  const auto b8 = c8.universe()->subset({"v1", "v3", "v7"});
  auto sample = perm_family_sample(c8, b8, 17, ctx.seed());
  const auto u = c8.universe();
  const auto side = [&](int which, const std::vector<Edge>& free_edges, const char* name) {
    return perm_family_member(c8, b8, figure2_permutation(u, which), free_edges, name);
  };
  sample = sample.with_member(side(1, {}, "f1(C8)")).with_member(side(2, {}, "f2(C8)"));
  cases.push_back({sample, c8, b8});
  cases.push_back({ctx.fixture("figure2").family, c8, b8});
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    auto g = random_connected_graph(rng, make_indexed_universe(pick(rng, 5, 8)), 1, 3, "R");
    const auto basis = solve(singleton_family(g), kAdj, ctx.solve()).witness;
    PermSampleOptions po;
    po.include_base = i % 2 == 0;
    cases.push_back({perm_family_sample(g, basis, pick(rng, 2, 6), rng(), po), g, basis});
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    const Json inst = {{"case", i}, {"family", describe(c.family)},
                       {"B", labels(*c.base.universe(), c.b)}};
    const bool generates = is_generator(c.family, c.b, kAdj);
    const bool contains_base =
        std::any_of(c.family.begin(), c.family.end(), [&](const auto& h) { return h == c.base; });
    if (!contains_base) {
      rec.record(inst, generates, Json{{"B_generates", generates}}, Json{{"B_generates", true}});
      continue;
    }
    rec.attempt(inst, [&] {
      const auto lhs = sd_a(c.family, ctx.solve());
      const auto rhs = dim_a(c.base, ctx.solve());
      rec.record(inst, generates && lhs == rhs, lhs, rhs, {{"B_generates", generates}});
    });
  }
  check.inputs["perm_family_count_C8"] = perm_family_count(c8, b8).str();
}

std::vector<LabeledGraph> named_paths_cycles(const std::vector<long>& orders) {
  std::vector<LabeledGraph> out;
  for (long n : orders) {
    out.push_back(path_graph(static_cast<std::size_t>(n)));
    out.push_back(cycle_graph(static_cast<std::size_t>(n)));
  }
  return out;
}

// Samples subfamilies of G_B(G) without G itself, for every basis B.
void check_fixed_dimension(Context& ctx, Recorder& rec, const std::vector<LabeledGraph>& graphs,
                           std::size_t target, std::size_t min_order, std::size_t per_basis,
                           std::size_t max_bases) {
  for (const auto& g : graphs) {
    const Json inst = {{"graph", describe(g)}};
    if (g.order() < min_order) {
      rec.hypothesis_not_met(inst, "order below " + std::to_string(min_order));
      continue;
    }
    rec.attempt(inst, [&] {
      const auto d = dim_a(g, ctx.solve());
      if (d != target) {
        rec.hypothesis_not_met(inst, "dim_A(G) = " + std::to_string(d) + ", not " + std::to_string(target));
        return;
      }
      auto bases = sorted(enumerate_bases(singleton_family(g), kAdj, ctx.solve()));
      if (bases.size() > max_bases) bases.resize(max_bases);
      PermSampleOptions po;
      po.include_base = false;
      for (const auto& b : bases) {
        const auto fam = perm_family_sample(g, b, per_basis, ctx.rng()(), po);
        Json sub = inst;
        sub["B"] = labels(*g.universe(), b);
        rec.attempt(sub, [&] { rec.equal(sub, sd_a(fam, ctx.solve()), target); });
      }
    });
  }
}

void check_cor_2_11(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "P_n and C_n, n=4..6, plus seeded random connected graphs; every basis, "
                "seeded subfamilies of G_B(G) not containing G";
  auto graphs = named_paths_cycles({4, 5, 6});
  const long count = ctx.get_int("count", ctx.full() ? 30 : 6);
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    graphs.push_back(random_connected_graph(rng, make_indexed_universe(pick(rng, 4, 7)), 1, 4,
                                            "R" + std::to_string(i + 1)));
  }
  check_fixed_dimension(ctx, rec, graphs, 2, 4, 4, ctx.full() ? 64 : 6);
}

void check_rem_2_12(Context& ctx, Recorder& rec, TheoremCheck& check) {
  const long count = ctx.get_int("count", ctx.full() ? 250 : 60);
  check.scope = "seeded random graphs (any density, connected or not) with n in 7..10";
  for (long i = 0; i < count; ++i) {
    auto& rng = ctx.rng();
    const auto n = pick(rng, 7, 10);
    const auto num = pick(rng, 1, 9);
    const auto g = random_graph(rng, make_indexed_universe(n), num, 10, "R" + std::to_string(i + 1));
    const Json inst = {{"sample", i}, {"graph", describe(g)}};
    rec.attempt(inst, [&] {
      const auto d = dim_a(g, ctx.solve());
      rec.record(inst, d >= 3, d, Json(">= 3"));
    });
  }
}

void check_thm_2_13(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "P_n and C_n for the requested orders, seeded subfamilies of G_B(G) without G";
  const auto graphs = named_paths_cycles(ctx.get_ints("n", ctx.full() ? std::vector<long>{7, 8, 9} : std::vector<long>{7, 8}));
  check_fixed_dimension(ctx, rec, graphs, 3, 7, 3, ctx.full() ? 16 : 4);
}

}  // namespace

void register_single_checks(std::vector<Registration>& out) {
  out.push_back({{"fig-1", Relation::Equality, "Sd_A = 4 > 3 = Sd for the Figure 1 family"}, check_fig1});
  out.push_back({{"fig-2", Relation::Equality,
                  "H1..H8 lie in G_{B,f1}(C8) / G_{B,f2}(C8), dim_A(H_i) = 3 and Sd_A = 3"}, check_fig2});
  out.push_back({{"rem-2.1", Relation::Inequality, "max dim_A(G_i) <= Sd_A, Sd <= Sd_A <= |V|-1"}, check_rem_2_1});
  out.push_back({{"cor-2.2", Relation::Equality, "K_n or N_n in the family gives Sd_A = |V|-1"}, check_cor_2_2});
  out.push_back({{"thm-2.3", Relation::Equality,
                  "Sd = |V|-1 iff every pair is twins in some member (connected members)"}, check_thm_2_3});
  out.push_back({{"rem-2.4", Relation::Equality, "every pair twins in some member gives Sd_A = |V|-1"}, check_rem_2_4});
  out.push_back({{"cor-2.6", Relation::Equality, "Sd_A(K(V)) = |V|-1 for |V| >= 4"}, check_cor_2_6});
  out.push_back({{"rem-2.7", Relation::Equality,
                  "Sd_A = 1 iff the family lies in one of the listed 2- and 3-vertex sets; the six "
                  "P3 variants have Sd_A = 2"}, check_rem_2_7});
  out.push_back({{"rem-2.8", Relation::SetEquality,
                  "Sd_A(G) = Sd_A(coG) = Sd_A(G u coG) = Sd_A(G u G') with identical bases"}, check_rem_2_8});
  out.push_back({{"rem-2.9", Relation::Existence,
                  "f restricts to an isomorphism of the weakly induced subgraphs"}, check_rem_2_9});
  out.push_back({{"thm-2.10", Relation::Equality,
                  "B generates every H in G_B(G); Sd_A(H) = dim_A(G) when G is in H"}, check_thm_2_10});
  out.push_back({{"cor-2.11", Relation::Equality, "n >= 4, dim_A(G) = 2 gives Sd_A(H) = 2 on G_B(G)"}, check_cor_2_11});
  out.push_back({{"rem-2.12", Relation::Inequality, "dim_A(G) >= 3 for n >= 7"}, check_rem_2_12});
  out.push_back({{"thm-2.13", Relation::Equality, "n >= 7, dim_A(G) = 3 gives Sd_A(H) = 3 on G_B(G)"}, check_thm_2_13});
}

}  // namespace simdim::detail
