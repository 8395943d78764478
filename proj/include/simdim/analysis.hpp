#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simdim/family.hpp"
#include "simdim/solver.hpp"

namespace simdim {

struct FamilyTwinProfile {
  std::vector<TwinPartition> partitions;
  VertexSet v_m;
};

FamilyTwinProfile twin_profile(const GraphFamily& fam);

/// Vertices that are true twins in one member and false twins in another.
VertexSet v_m(const GraphFamily& fam);

/// All simultaneous adjacency bases, split by the two predicates.
struct BasisCatalog {
  std::size_t value = 0;
  std::vector<VertexSet> all_bases;
  std::vector<VertexSet> b1;  // not inside any open neighborhood of any member
  std::vector<VertexSet> b2;  // dominating in every member
};

BasisCatalog basis_catalog(const GraphFamily& fam, const SolveOptions& opts = {});

bool in_b1(const GraphFamily& fam, const VertexSet& b);
bool in_b2(const GraphFamily& fam, const VertexSet& b);

/// {v : B ⊆ N_H(v) for some member H}
VertexSet p_set(const GraphFamily& fam, const VertexSet& b);
/// {v : B ∩ N_H(v) = ∅ for some member H}
VertexSet q_set(const GraphFamily& fam, const VertexSet& b);

/// A parameter value with the basis (or pair of bases) that attains it.
/// `first` is empty when the value comes from a term that needs no basis.
struct ParamValue {
  std::size_t value = 0;
  std::optional<VertexSet> first;
  std::optional<VertexSet> second;
};

/// min{ |fam|, min over B1 ∈ ℬ₁, B2 ∈ ℬ₂ of |B2 − B1| }. Throws EmptyCatalog
/// when either sublist is empty.
ParamValue zeta(const GraphFamily& fam, const SolveOptions& opts = {});
ParamValue zeta(const GraphFamily& fam, const BasisCatalog& catalog);

/// min over B ∈ ℬ(g), B' ∈ ℬ(h) of min{|P_g(B)|, |P_h(B')|}. Both sides use
/// the containment set: for the join the "Q" of the second factor is P taken
/// in that factor. `first` is the attaining basis of g or `second` of h.
ParamValue psi(const GraphFamily& g, const GraphFamily& h, const SolveOptions& opts = {});
ParamValue psi(const GraphFamily& g, const BasisCatalog& gc, const GraphFamily& h,
               const BasisCatalog& hc);

/// min over B ∈ ℬ(fam) of |P(B)|(|V_T(g)|−|T(g)|) + |Q(B)|(|V_F(g)|−|F(g)|).
ParamValue xi(const LabeledGraph& g, const GraphFamily& fam, const SolveOptions& opts = {});
ParamValue xi(const LabeledGraph& g, const GraphFamily& fam, const BasisCatalog& catalog);

}  // namespace simdim
