#include "simdim/analysis.hpp"

#include <algorithm>

#include "simdim/error.hpp"
#include "simdim/resolvability.hpp"

namespace simdim {

FamilyTwinProfile twin_profile(const GraphFamily& fam) {
  FamilyTwinProfile profile;
  VertexSet any_true(fam.order());
  VertexSet any_false(fam.order());
  for (const auto& g : fam) {
    profile.partitions.push_back(twin_partition(g));
    any_true |= profile.partitions.back().true_twin_vertices();
    any_false |= profile.partitions.back().false_twin_vertices();
  }
  // G and G' may coincide only if a vertex were both kinds in one graph,
  // which twin_partition rules out.
  profile.v_m = any_true & any_false;
  return profile;
}

VertexSet v_m(const GraphFamily& fam) { return twin_profile(fam).v_m; }

bool in_b1(const GraphFamily& fam, const VertexSet& b) {
  for (const auto& g : fam)
    if (contained_in_some_neighborhood(g, b)) return false;
  return true;
}

bool in_b2(const GraphFamily& fam, const VertexSet& b) { return is_dominating(fam, b); }

BasisCatalog basis_catalog(const GraphFamily& fam, const SolveOptions& opts) {
  BasisCatalog c;
  c.all_bases = enumerate_bases(fam, Truncation::adjacency(), opts);
  c.value = c.all_bases.empty() ? 0 : c.all_bases.front().count();
  for (const auto& b : c.all_bases) {
    if (in_b1(fam, b)) c.b1.push_back(b);
    if (in_b2(fam, b)) c.b2.push_back(b);
  }
  return c;
}

VertexSet p_set(const GraphFamily& fam, const VertexSet& b) {
  VertexSet out(fam.order());
  for (const auto& g : fam)
    for (std::size_t v = 0; v < fam.order(); ++v)
      if (b.is_subset_of(g.neighbors(v))) out.set(v);
  return out;
}

VertexSet q_set(const GraphFamily& fam, const VertexSet& b) {
  VertexSet out(fam.order());
  for (const auto& g : fam)
    for (std::size_t v = 0; v < fam.order(); ++v)
      if (!b.intersects(g.neighbors(v))) out.set(v);
  return out;
}

ParamValue zeta(const GraphFamily& fam, const BasisCatalog& catalog) {
  if (catalog.b1.empty() || catalog.b2.empty())
    throw Error(ErrorKind::EmptyCatalog,
                std::string("zeta needs nonempty B1 and B2; ") +
                    (catalog.b1.empty() ? "B1" : "B2") + " is empty");
  ParamValue best;
  best.value = fam.size();
  for (const auto& b1 : catalog.b1) {
    for (const auto& b2 : catalog.b2) {
      const auto d = (b2 - b1).count();
      if (d < best.value) {
        best.value = d;
        best.first = b1;
        best.second = b2;
      }
    }
  }
  return best;
}

ParamValue zeta(const GraphFamily& fam, const SolveOptions& opts) {
  return zeta(fam, basis_catalog(fam, opts));
}

ParamValue psi(const GraphFamily& g, const BasisCatalog& gc, const GraphFamily& h,
               const BasisCatalog& hc) {
  ParamValue best;
  bool have = false;
  for (const auto& b : gc.all_bases) {
    const auto p = p_set(g, b).count();
    if (!have || p < best.value) {
      best = {p, b, std::nullopt};
      have = true;
    }
  }
  for (const auto& b : hc.all_bases) {
    const auto q = p_set(h, b).count();
    if (!have || q < best.value) {
      best = {q, std::nullopt, b};
      have = true;
    }
  }
  return best;
}

ParamValue psi(const GraphFamily& g, const GraphFamily& h, const SolveOptions& opts) {
  return psi(g, basis_catalog(g, opts), h, basis_catalog(h, opts));
}

ParamValue xi(const LabeledGraph& g, const GraphFamily& fam, const BasisCatalog& catalog) {
  const auto tp = twin_partition(g);
  const std::size_t true_coeff = tp.true_twin_vertices().count() - tp.true_class_count();
  const std::size_t false_coeff = tp.false_twin_vertices().count() - tp.false_class_count();
  ParamValue best;
  bool have = false;
  for (const auto& b : catalog.all_bases) {
    std::size_t v = 0;
    if (true_coeff != 0) v += p_set(fam, b).count() * true_coeff;
    if (false_coeff != 0) v += q_set(fam, b).count() * false_coeff;
    if (!have || v < best.value) {
      best = {v, b, std::nullopt};
      have = true;
    }
  }
  return best;
}

ParamValue xi(const LabeledGraph& g, const GraphFamily& fam, const SolveOptions& opts) {
  return xi(g, fam, basis_catalog(fam, opts));
}

}  // namespace simdim
