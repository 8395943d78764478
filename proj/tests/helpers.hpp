#pragma once

#include <string>
#include <vector>

#include "simdim/family.hpp"

namespace testing {

inline simdim::VertexSet set_of(const simdim::UniversePtr& u, std::vector<std::string> labels) {
  return u->subset(labels);
}

inline std::vector<std::string> names(const simdim::UniversePtr& u, const simdim::VertexSet& s) {
  return u->labels_of(s);
}

inline std::vector<std::vector<std::string>> names(const simdim::UniversePtr& u,
                                                   const std::vector<simdim::VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(u->labels_of(s));
  return out;
}

inline std::vector<std::size_t> indices(const simdim::VertexSet& s) { return s.members(); }

}  // namespace testing
