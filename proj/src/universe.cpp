#include "simdim/universe.hpp"

#include "simdim/error.hpp"

namespace simdim {

VertexUniverse::VertexUniverse(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      throw Error(ErrorKind::InvalidInput, "empty vertex label");
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorKind::LabelCollision, "duplicate vertex label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> VertexUniverse::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t VertexUniverse::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::InvalidInput, "unknown vertex label '" + std::string(label) + "'");
}

VertexSet VertexUniverse::subset(const std::vector<std::string>& labels) const {
  VertexSet s(size());
  for (const auto& l : labels) s.set(index_of(l));
  return s;
}

std::vector<std::string> VertexUniverse::labels_of(const VertexSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
  return out;
}

std::string VertexUniverse::format(const VertexSet& set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += labels_[i];
    first = false;
  });
  return out + "}";
}

UniversePtr make_universe(std::vector<std::string> labels) {
  return std::make_shared<const VertexUniverse>(std::move(labels));
}

UniversePtr make_indexed_universe(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return make_universe(std::move(labels));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace simdim
