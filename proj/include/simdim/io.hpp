#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "simdim/family.hpp"

namespace simdim {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct FamilyDocument {
  GraphFamily family;
  Json metadata = Json::object();
};

/// Accepts a family document, a single-graph document ({"vertices","edges"})
/// or the plain edge-list text format. Detection is by the first
/// non-blank character.
FamilyDocument parse_family_document(std::string_view text);
FamilyDocument load_family_document(const std::filesystem::path& path);

/// Canonical form: labels as declared, edges sorted by (min, max) index,
/// one member per line. parse followed by serialize is a fixed point.
std::string serialize_family(const GraphFamily& fam, const Json& metadata = Json::object());
std::string serialize_family(const FamilyDocument& doc);

/// path:n, cycle:n, complete:n, empty:n, star:n (n vertices).
bool is_graph_shortcut(std::string_view spec);
LabeledGraph graph_from_shortcut(std::string_view spec);

/// Shortcut or file path.
GraphFamily resolve_family(std::string_view spec);
LabeledGraph resolve_graph(std::string_view spec);

Json set_to_json(const VertexUniverse& universe, const VertexSet& s);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace simdim
