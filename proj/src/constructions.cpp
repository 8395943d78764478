#include "simdim/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "simdim/analysis.hpp"
#include "simdim/error.hpp"
#include "simdim/resolvability.hpp"
#include "simdim/solver.hpp"

namespace simdim {

namespace {

std::string member_name(const LabeledGraph& g, const char* fallback) {
  return g.name().empty() ? fallback : g.name();
}

void check_factor_labels(const VertexUniverse& u) {
  for (const auto& l : u.labels())
    if (l.find(kProductSeparator) != std::string::npos)
      throw Error(ErrorKind::InvalidInput,
                  "factor label '" + l + "' contains the reserved separator '.'");
}

bool is_adjacency_basis(const LabeledGraph& g, const VertexSet& b) {
  return is_generator(g, b, Truncation::adjacency()) && b.count() == dim_a(g);
}

std::set<Edge> edge_set(const std::vector<Edge>& edges) {
  std::set<Edge> out;
  for (auto [u, v] : edges) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

GraphFamily remove_edge_sets(const LabeledGraph& base, const std::vector<Edge>& relaxable,
                             const std::vector<std::vector<Edge>>& removals, std::string name) {
  const auto allowed = edge_set(relaxable);
  std::vector<LabeledGraph> members;
  for (std::size_t i = 0; i < removals.size(); ++i) {
    const auto drop = edge_set(removals[i]);
    for (const auto& e : drop)
      if (!allowed.count(e))
        throw Error(ErrorKind::EdgeOutsideEPrime,
                    "edge " + base.label(e.first) + base.label(e.second) +
                        " is not a relaxable edge");
    std::vector<Edge> kept;
    for (const auto& e : base.edges())
      if (!drop.count(e)) kept.push_back(e);
    members.emplace_back(base.universe(), kept, "R" + std::to_string(i + 1));
  }
  return GraphFamily(base.universe(), std::move(members), std::move(name));
}

}  // namespace

LabeledGraph rebind(const LabeledGraph& g, UniversePtr universe, std::string name) {
  if (universe->size() != g.order())
    throw Error(ErrorKind::InvalidInput, "rebind needs a universe of the same size");
  return LabeledGraph(std::move(universe), g.edges(), name.empty() ? g.name() : std::move(name));
}

LabeledGraph permuted(const LabeledGraph& g, const std::vector<std::size_t>& mapping,
                      std::string name) {
  if (mapping.size() != g.order())
    throw Error(ErrorKind::InvalidInput, "mapping size does not match graph order");
  std::vector<bool> seen(g.order(), false);
  for (auto v : mapping) {
    if (v >= g.order() || seen[v]) throw Error(ErrorKind::InvalidInput, "mapping is not a bijection");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(mapping[u], mapping[v]);
  return LabeledGraph(g.universe(), edges, name.empty() ? g.name() : std::move(name));
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const VertexSet& s, std::string name) {
  const auto idx = s.members();
  std::vector<std::string> labels;
  for (auto v : idx) labels.push_back(g.label(v));
  auto u = make_universe(std::move(labels));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (g.adjacent(idx[i], idx[j])) edges.emplace_back(i, j);
  return LabeledGraph(std::move(u), edges, std::move(name));
}

LabeledGraph join(const LabeledGraph& g, const LabeledGraph& h) {
  std::vector<std::string> labels = g.universe()->labels();
  for (const auto& l : h.universe()->labels()) {
    if (g.universe()->find(l))
      throw Error(ErrorKind::LabelCollision, "label '" + l + "' appears in both join factors");
    labels.push_back(l);
  }
  const std::size_t n1 = g.order();
  const std::size_t n2 = h.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(n1 + u, n1 + v);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return LabeledGraph(make_universe(std::move(labels)), edges,
                      member_name(g, "G") + "+" + member_name(h, "H"));
}

GraphFamily join_families(const GraphFamily& fam1, const GraphFamily& fam2) {
  std::vector<LabeledGraph> members;
  for (const auto& g : fam1)
    for (const auto& h : fam2) members.push_back(join(g, h));
  auto u = members.front().universe();
  return GraphFamily(u, std::move(members), fam1.name() + "+" + fam2.name());
}

std::string product_label(const std::string& g_label, const std::string& h_label) {
  return g_label + kProductSeparator + h_label;
}

LabeledGraph lex_product(const LabeledGraph& g, const std::vector<LabeledGraph>& hs) {
  if (hs.size() != g.order())
    throw Error(ErrorKind::ArityMismatch, "lexicographic product needs " +
                                              std::to_string(g.order()) + " second factors, got " +
                                              std::to_string(hs.size()));
  if (hs.empty()) throw Error(ErrorKind::ArityMismatch, "first factor has no vertices");
  for (const auto& h : hs)
    if (!same_universe(h.universe(), hs.front().universe()))
      throw Error(ErrorKind::InvalidInput, "second factors must share one vertex set");
  check_factor_labels(*g.universe());
  check_factor_labels(*hs.front().universe());

  const std::size_t n1 = g.order();
  const std::size_t n2 = hs.front().order();
  std::vector<std::string> labels;
  labels.reserve(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t r = 0; r < n2; ++r)
      labels.push_back(product_label(g.label(i), hs.front().label(r)));

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n1; ++i)
    for (auto [r, s] : hs[i].edges()) edges.emplace_back(i * n2 + r, i * n2 + s);
  for (auto [i, j] : g.edges())
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t s = 0; s < n2; ++s) edges.emplace_back(i * n2 + r, j * n2 + s);

  std::string name = member_name(g, "G") + "o";
  if (std::all_of(hs.begin(), hs.end(), [&](const LabeledGraph& h) { return h == hs.front(); }))
    name += member_name(hs.front(), "H");
  else
    name += "[H1..H" + std::to_string(n1) + "]";
  return LabeledGraph(make_universe(std::move(labels)), edges, std::move(name));
}

LabeledGraph lex_product(const LabeledGraph& g, const LabeledGraph& h) {
  return lex_product(g, std::vector<LabeledGraph>(g.order(), h));
}

GraphFamily lex_product_families(const GraphFamily& fam1, const GraphFamily& fam2) {
  for (const auto& g : fam1)
    if (!is_connected(g))
      throw Error(ErrorKind::DisconnectedGraph,
                  "first factor '" + g.name() + "' of a lexicographic product must be connected");
  std::vector<LabeledGraph> members;
  for (const auto& g : fam1)
    for (const auto& h : fam2) members.push_back(lex_product(g, h));
  auto u = members.front().universe();
  return GraphFamily(u, std::move(members), fam1.name() + "o" + fam2.name());
}

GraphFamily star_family(UniversePtr universe) {
  const std::size_t n = universe->size();
  if (n < 4)
    throw Error(ErrorKind::UniverseTooSmall,
                "star family needs at least 4 vertices, got " + std::to_string(n));
  std::vector<LabeledGraph> members;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
      if (v != c) edges.emplace_back(c, v);
    members.emplace_back(universe, edges, "K1," + std::to_string(n - 1) + "^" + universe->label(c));
  }
  return GraphFamily(universe, std::move(members), "K(V)");
}

GraphFamily star_family(std::size_t n) { return star_family(make_indexed_universe(n)); }

StabilizerPermutation::StabilizerPermutation(UniversePtr universe, std::vector<std::size_t> mapping,
                                             VertexSet fixed)
    : universe_(std::move(universe)), mapping_(std::move(mapping)), fixed_(std::move(fixed)) {
  const std::size_t n = universe_->size();
  if (mapping_.size() != n || fixed_.universe_size() != n)
    throw Error(ErrorKind::NotInStabilizer, "permutation size does not match the universe");
  inverse_.assign(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (mapping_[v] >= n || inverse_[mapping_[v]] != n)
      throw Error(ErrorKind::NotInStabilizer, "mapping is not a bijection");
    inverse_[mapping_[v]] = v;
  }
  fixed_.for_each([&](std::size_t x) {
    if (mapping_[x] != x)
      throw Error(ErrorKind::NotInStabilizer,
                  "permutation moves fixed vertex " + universe_->label(x));
  });
}

StabilizerPermutation StabilizerPermutation::identity(UniversePtr universe, VertexSet fixed) {
  std::vector<std::size_t> m(universe->size());
  std::iota(m.begin(), m.end(), std::size_t{0});
  return StabilizerPermutation(std::move(universe), std::move(m), std::move(fixed));
}

VertexSet StabilizerPermutation::operator()(const VertexSet& s) const {
  VertexSet out(s.universe_size());
  s.for_each([&](std::size_t v) { out.set(mapping_[v]); });
  return out;
}

bool in_perm_family(const LabeledGraph& candidate, const LabeledGraph& g, const VertexSet& b,
                    const StabilizerPermutation& f) {
  bool ok = true;
  b.for_each([&](std::size_t x) {
    if (candidate.neighbors(x) != f(g.neighbors(x))) ok = false;
  });
  return ok;
}

LabeledGraph perm_family_member(const LabeledGraph& g, const VertexSet& b,
                                const StabilizerPermutation& f,
                                const std::vector<Edge>& free_edges, std::string name) {
  const std::size_t n = g.order();
  if (f.universe()->size() != n || !b.is_subset_of(f.fixed()))
    throw Error(ErrorKind::NotInStabilizer, "permutation does not fix B pointwise");
  std::vector<Edge> edges;
  for (auto [u, v] : free_edges) {
    if (u >= n || v >= n || u == v || b.test(u) || b.test(v))
      throw Error(ErrorKind::FreeEdgeOutsideComplement,
                  "free edge must join two distinct vertices outside B");
    edges.emplace_back(u, v);
  }
  b.for_each([&](std::size_t x) {
    f(g.neighbors(x)).for_each([&](std::size_t y) { edges.emplace_back(x, y); });
  });
  LabeledGraph out(g.universe(), edges, std::move(name));
  if (!in_perm_family(out, g, b, f))
    throw Error(ErrorKind::ValidationFailed, "constructed graph is not in the permutation family");
  return out;
}

boost::multiprecision::cpp_int perm_family_count(const LabeledGraph& g, const VertexSet& b) {
  const std::size_t m = g.order() - b.count();
  boost::multiprecision::cpp_int count = 1;
  count <<= static_cast<unsigned>(m * (m == 0 ? 0 : m - 1) / 2);
  for (std::size_t i = 2; i <= m; ++i) count *= i;
  return count;
}

GraphFamily perm_family_sample(const LabeledGraph& g, const VertexSet& b, std::size_t count,
                               std::uint64_t seed, const PermSampleOptions& opts) {
  if (opts.validate_basis && !is_adjacency_basis(g, b))
    throw Error(ErrorKind::NotAnAdjacencyBasis,
                g.universe()->format(b) + " is not an adjacency basis of " + g.name());
  const std::size_t n = g.order();
  const auto outside = (VertexSet::full(n) - b).members();
  Rng eng(seed);

  std::vector<LabeledGraph> members;
  if (opts.include_base) members.push_back(g.renamed(member_name(g, "G")));
  for (std::size_t k = 0; k < count; ++k) {
    auto image = outside;
    for (std::size_t i = image.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(bounded_draw(eng, i));
      std::swap(image[i - 1], image[j]);
    }
    std::vector<std::size_t> mapping(n);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    for (std::size_t i = 0; i < outside.size(); ++i) mapping[outside[i]] = image[i];
    StabilizerPermutation f(g.universe(), std::move(mapping), b);

    std::vector<Edge> free_edges;
    for (std::size_t i = 0; i < outside.size(); ++i)
      for (std::size_t j = i + 1; j < outside.size(); ++j)
        if (eng() >> 63) free_edges.emplace_back(outside[i], outside[j]);
    members.push_back(perm_family_member(g, b, f, free_edges, "S" + std::to_string(k + 1)));
  }
  if (members.empty())
    throw Error(ErrorKind::InvalidInput, "sample with no members and no base graph");
  return GraphFamily(g.universe(), std::move(members),
                     "G_B(" + member_name(g, "G") + ")/seed=" + std::to_string(seed));
}

std::vector<Edge> join_relaxable_edges(const LabeledGraph& joined, std::size_t g_order,
                                       const VertexSet& b) {
  std::vector<Edge> out;
  for (auto [u, v] : joined.edges())
    if (u < g_order && v >= g_order && !b.test(u) && !b.test(v)) out.emplace_back(u, v);
  return out;
}

GraphFamily relaxed_join_family(const LabeledGraph& g, const LabeledGraph& h, const VertexSet& b,
                                const std::vector<std::vector<Edge>>& removals) {
  const auto joined = join(g, h);
  if (b.universe_size() != joined.order() || !is_adjacency_basis(joined, b))
    throw Error(ErrorKind::NotAnAdjacencyBasis, "B is not an adjacency basis of the join");
  return remove_edge_sets(joined, join_relaxable_edges(joined, g.order(), b), removals,
                          "R_B(" + joined.name() + ")");
}

std::vector<Edge> lex_relaxable_edges(const LabeledGraph& product, std::size_t h_order,
                                      const VertexSet& b) {
  std::vector<Edge> out;
  for (auto [u, v] : product.edges())
    if (u / h_order != v / h_order && !b.test(u) && !b.test(v)) out.emplace_back(u, v);
  return out;
}

GraphFamily relaxed_lex_family(const LabeledGraph& g, const LabeledGraph& h, const VertexSet& b,
                               const std::vector<std::vector<Edge>>& removals) {
  if (!is_connected(g))
    throw Error(ErrorKind::DisconnectedGraph, "first factor must be connected");
  const auto product = lex_product(g, h);
  if (b.universe_size() != product.order() || !is_adjacency_basis(product, b))
    throw Error(ErrorKind::NotAnAdjacencyBasis, "B is not an adjacency basis of the product");
  return remove_edge_sets(product, lex_relaxable_edges(product, h.order(), b), removals,
                          "R_B(" + product.name() + ")");
}

GraphFamily h5_family() {
  auto u = make_indexed_universe(5);
  std::vector<LabeledGraph> members{path_graph(u, "P5"), cycle_graph(u, "C5")};
  return GraphFamily(u, std::move(members), "H5");
}

GraphFamily h_ex_family(std::size_t n, bool validate) {
  if (n < 7 || (n % 5 != 0 && n % 5 != 2 && n % 5 != 4))
    throw Error(ErrorKind::BadOrder,
                "H_ex needs n >= 7 with n mod 5 in {0,2,4}, got " + std::to_string(n));
  auto u = make_indexed_universe(n + 6);
  // 0-based: v_k has index k-1.
  const std::size_t c = n;  // v_{n+1}
  const std::size_t a2 = n + 1, a3 = n + 2, a4 = n + 3, a5 = n + 4, a6 = n + 5;
  std::vector<Edge> base;
  for (std::size_t i = 0; i + 1 < n; ++i) base.emplace_back(i, i + 1);
  for (std::size_t i = 0; i < n; ++i) base.emplace_back(i, c);
  base.insert(base.end(), {{c, a2}, {c, a4}, {a5, a2}, {a2, a3}, {a3, a4}, {a4, a6}});

  std::vector<LabeledGraph> members;
  for (int mask = 0; mask < 4; ++mask) {
    auto edges = base;
    if (mask & 1) edges.emplace_back(0, n - 1);
    if (mask & 2) edges.emplace_back(a2, a4);
    members.emplace_back(u, edges, "H" + std::to_string(mask + 1));
  }
  GraphFamily fam(u, std::move(members), "H_ex^(" + std::to_string(n) + ")");
  if (validate) {
    const auto failure = check_h_ex_properties(fam, n);
    if (!failure.empty())
      throw Error(ErrorKind::ValidationFailed, "H_ex^(" + std::to_string(n) + "): " + failure);
  }
  return fam;
}

std::string check_h_ex_properties(const GraphFamily& fam, std::size_t n) {
  const std::size_t expected = (2 * n + 2) / 5 + 2;
  const auto cat = basis_catalog(fam);
  if (cat.value != expected)
    return "Sd_A is " + std::to_string(cat.value) + ", expected " + std::to_string(expected);

  VertexSet v1(fam.order());
  for (std::size_t i = 0; i < n; ++i) v1.set(i);
  std::vector<LabeledGraph> restricted;
  for (const auto& h : fam) restricted.push_back(induced_subgraph(h, v1, h.name() + "[V1]"));
  const GraphFamily inner(restricted.front().universe(), restricted, "H'");
  const auto inner_cat = basis_catalog(inner);

  auto lift = [&](const VertexSet& small) {
    VertexSet out(fam.order());
    small.for_each([&](std::size_t i) { out.set(i); });
    return out;
  };
  for (const auto& bset : cat.all_bases) {
    VertexSet head(n);
    (bset & v1).for_each([&](std::size_t i) { head.set(i); });
    if (head.count() != inner_cat.value || !is_generator(inner, head, Truncation::adjacency()))
      return "basis " + fam.universe()->format(bset) + " does not restrict to a basis of H'";
  }

  const std::vector<std::vector<std::size_t>> xs{
      {n + 1, n + 2}, {n + 2, n + 3}, {n + 2, n + 4}, {n + 2, n + 5}, {n + 4, n + 5}};
  std::vector<VertexSet> want_b1;
  std::vector<VertexSet> want_b2;
  for (const auto& bp : inner_cat.b2) {
    for (const auto& x : xs) want_b1.push_back(lift(bp) | VertexSet::from_indices(fam.order(), x));
    want_b2.push_back(lift(bp) | VertexSet::from_indices(fam.order(), {n + 1, n + 3}));
  }
  sort_lexicographic(want_b1);
  sort_lexicographic(want_b2);
  if (cat.b1 != want_b1) return "B1 does not have the form B' u X";
  if (cat.b2 != want_b2) return "B2 does not have the form B' u {v_{n+2}, v_{n+4}}";
  for (const auto& b : cat.b2)
    for (const auto& h : fam)
      if (!b.is_subset_of(h.neighbors(n)))
        return "B2 basis not inside N(v_{n+1}) of " + h.name();
  if (zeta(fam, cat).value != 1) return "zeta is not 1";
  return {};
}

}  // namespace simdim
