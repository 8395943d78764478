#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simdim/vertex_set.hpp"

namespace simdim {

/// Ordered set of distinct vertex labels. Every bitset in the library indexes
/// against one of these, so the order is fixed at construction.
class VertexUniverse {
 public:
  explicit VertexUniverse(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws InvalidInput for unknown labels.
  std::size_t index_of(std::string_view label) const;

  VertexSet subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const VertexSet& set) const;
  /// "{a, b, c}" in universe order.
  std::string format(const VertexSet& set) const;

  friend bool operator==(const VertexUniverse& a, const VertexUniverse& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const VertexUniverse>;

UniversePtr make_universe(std::vector<std::string> labels);
/// Labels prefix1..prefixN.
UniversePtr make_indexed_universe(std::size_t n, std::string_view prefix = "v");

bool same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace simdim
