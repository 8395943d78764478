#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "simdim/graph.hpp"

namespace simdim {

/// Ordered collection of graphs over one shared universe. Simultaneous
/// invariants are always computed on one of these.
class GraphFamily {
 public:
  GraphFamily(UniversePtr universe, std::vector<LabeledGraph> members,
              std::string name = {});
  /// Convenience: universe taken from the first member (must be nonempty).
  explicit GraphFamily(std::vector<LabeledGraph> members, std::string name = {});

  const UniversePtr& universe() const noexcept { return universe_; }
  std::size_t order() const noexcept { return universe_->size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<LabeledGraph>& members() const noexcept { return members_; }
  const LabeledGraph& operator[](std::size_t i) const { return members_.at(i); }
  const std::string& name() const noexcept { return name_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Members picked by index, in the order given.
  GraphFamily subfamily(const std::vector<std::size_t>& indices, std::string name = {}) const;
  /// This family followed by the members of `other` (same universe).
  GraphFamily united_with(const GraphFamily& other, std::string name = {}) const;
  GraphFamily with_member(const LabeledGraph& g) const;

  bool all_connected() const;

 private:
  UniversePtr universe_;
  std::vector<LabeledGraph> members_;
  std::string name_;
};

GraphFamily singleton_family(const LabeledGraph& g);

/// Each member replaced by its complement.
GraphFamily complement_family(const GraphFamily& fam);

}  // namespace simdim
