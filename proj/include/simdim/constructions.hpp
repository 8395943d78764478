#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simdim/family.hpp"
#include "simdim/random.hpp"

namespace simdim {

/// Same structure moved onto another universe of equal size (index-wise).
LabeledGraph rebind(const LabeledGraph& g, UniversePtr universe, std::string name = {});

/// Image of g under the vertex map v -> mapping[v] on the same universe.
LabeledGraph permuted(const LabeledGraph& g, const std::vector<std::size_t>& mapping,
                      std::string name = {});

/// Subgraph induced by `s`, on a fresh universe holding the labels of s.
LabeledGraph induced_subgraph(const LabeledGraph& g, const VertexSet& s, std::string name = {});

/// g + h on g's labels followed by h's. Throws LabelCollision on shared labels.
LabeledGraph join(const LabeledGraph& g, const LabeledGraph& h);

/// {G_i + H_j}, i outer.
GraphFamily join_families(const GraphFamily& fam1, const GraphFamily& fam2);

/// Separator between factor labels in product vertex labels.
inline constexpr char kProductSeparator = '.';

std::string product_label(const std::string& g_label, const std::string& h_label);

/// General lexicographic product G[H_1, ..., H_n]; every H_i shares one
/// universe. Vertex (u_i, v_r) has index i * |V2| + r.
LabeledGraph lex_product(const LabeledGraph& g, const std::vector<LabeledGraph>& hs);

/// Standard form G ∘ H.
LabeledGraph lex_product(const LabeledGraph& g, const LabeledGraph& h);

/// {G_i ∘ H_j}, i outer. Members of fam1 must be connected.
GraphFamily lex_product_families(const GraphFamily& fam1, const GraphFamily& fam2);

/// 𝒦(V): member i is the star centered at the i-th vertex.
GraphFamily star_family(UniversePtr universe);
GraphFamily star_family(std::size_t n);

/// Permutation of the universe fixing every vertex of B.
class StabilizerPermutation {
 public:
  /// Throws NotInStabilizer unless `mapping` is a bijection fixing `fixed`.
  StabilizerPermutation(UniversePtr universe, std::vector<std::size_t> mapping, VertexSet fixed);

  static StabilizerPermutation identity(UniversePtr universe, VertexSet fixed);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }
  const VertexSet& fixed() const noexcept { return fixed_; }

  std::size_t operator()(std::size_t v) const { return mapping_[v]; }
  VertexSet operator()(const VertexSet& s) const;
  std::size_t inverse(std::size_t v) const { return inverse_[v]; }

 private:
  UniversePtr universe_;
  std::vector<std::size_t> mapping_;
  std::vector<std::size_t> inverse_;
  VertexSet fixed_;
};

/// The member G' of 𝒢_{B,f}(G) with N_{G'}(x) = f(N_G(x)) for x in B and
/// the given edges inside V − B.
LabeledGraph perm_family_member(const LabeledGraph& g, const VertexSet& b,
                                const StabilizerPermutation& f,
                                const std::vector<Edge>& free_edges, std::string name = {});

bool in_perm_family(const LabeledGraph& candidate, const LabeledGraph& g, const VertexSet& b,
                    const StabilizerPermutation& f);

/// 2^{m(m-1)/2} · m! with m = |V − B|.
boost::multiprecision::cpp_int perm_family_count(const LabeledGraph& g, const VertexSet& b);

struct PermSampleOptions {
  bool include_base = true;
  /// Check first that B is an adjacency basis of g.
  bool validate_basis = false;
};

/// `count` members drawn uniformly over (f, free edges) pairs.
GraphFamily perm_family_sample(const LabeledGraph& g, const VertexSet& b, std::size_t count,
                               std::uint64_t seed, const PermSampleOptions& opts = {});

/// E' for the join: edges of G+H between V(G) − B and V(H) − B.
std::vector<Edge> join_relaxable_edges(const LabeledGraph& joined, std::size_t g_order,
                                       const VertexSet& b);

/// ℛ_B on V(G+H): member i is G+H minus removals[i]. B must be an adjacency
/// basis of G+H and every removal a subset of E'.
GraphFamily relaxed_join_family(const LabeledGraph& g, const LabeledGraph& h, const VertexSet& b,
                                const std::vector<std::vector<Edge>>& removals);

/// E' for G∘H: edges joining different G-copies with both ends outside B.
std::vector<Edge> lex_relaxable_edges(const LabeledGraph& product, std::size_t h_order,
                                      const VertexSet& b);

GraphFamily relaxed_lex_family(const LabeledGraph& g, const LabeledGraph& h, const VertexSet& b,
                               const std::vector<std::vector<Edge>>& removals);

/// ℋ₅ = {P₅, C₅} on v1..v5.
GraphFamily h5_family();

/// ℋ_ex^{(n)} on v1..v_{n+6}; members toggle v1vn and v_{n+2}v_{n+4}.
/// Validated against its basis-catalog properties unless `validate` is off.
GraphFamily h_ex_family(std::size_t n, bool validate = true);

/// Checks the stated properties of ℋ_ex^{(n)} (or a nonempty subfamily of
/// it); returns an empty string on success, else the first failure.
std::string check_h_ex_properties(const GraphFamily& fam, std::size_t n);

}  // namespace simdim
