#include "simdim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "simdim/error.hpp"

namespace simdim {
namespace {

std::vector<Edge> edges_from_json(const Json& list, const VertexUniverse& universe,
                                  const std::string& member) {
  if (!list.is_array()) throw Error(ErrorKind::ParseError, member + ": edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error(ErrorKind::ParseError, member + ": edge must be a pair of labels");
    edges.emplace_back(universe.index_of(e[0].get<std::string>()),
                       universe.index_of(e[1].get<std::string>()));
  }
  return edges;
}

UniversePtr universe_from_json(const Json& doc) {
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorKind::ParseError, "document needs a \"vertices\" array");
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorKind::ParseError, "vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  return make_universe(std::move(labels));
}

FamilyDocument from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
  if (doc.contains("schema") && doc["schema"] != kSchemaVersion)
    throw Error(ErrorKind::ParseError, "unsupported schema version " + doc["schema"].dump());
  auto universe = universe_from_json(doc);
  const std::string name = doc.value("name", std::string{});
  std::vector<LabeledGraph> members;
  if (doc.contains("members")) {
    if (!doc["members"].is_array()) throw Error(ErrorKind::ParseError, "members must be an array");
    for (const auto& m : doc["members"]) {
      const std::string mname = m.value("name", std::string{});
      members.emplace_back(universe, edges_from_json(m.at("edges"), *universe, mname), mname);
    }
  } else if (doc.contains("edges")) {
    members.emplace_back(universe, edges_from_json(doc["edges"], *universe, name), name);
  } else {
    throw Error(ErrorKind::ParseError, "document needs \"members\" or \"edges\"");
  }
  FamilyDocument out{GraphFamily(universe, std::move(members), name), Json::object()};
  if (doc.contains("metadata")) out.metadata = doc["metadata"];
  return out;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Edge-list text: "vertices: a b c" (optional), "graph NAME" starts a member,
// "u v" adds an edge, a lone label declares a vertex, '#' starts a comment.
FamilyDocument from_edge_list(std::string_view text) {
  struct Member {
    std::string name;
    std::vector<std::pair<std::string, std::string>> edges;
  };
  std::vector<std::string> labels;
  bool declared = false;
  std::vector<Member> members;
  auto note = [&](const std::string& l) {
    if (!declared && std::find(labels.begin(), labels.end(), l) == labels.end())
      labels.push_back(l);
  };
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.rfind("vertices:", 0) == 0) {
      if (declared || !labels.empty())
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) +
                                               ": vertices header must come first");
      labels = split_words(std::string_view(line).substr(9));
      declared = true;
      continue;
    }
    auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "graph") {
      members.push_back({words.size() > 1 ? words[1] : std::string{}, {}});
      continue;
    }
    if (members.empty()) members.push_back({});
    if (words.size() == 1) {
      note(words[0]);
    } else if (words.size() == 2) {
      note(words[0]);
      note(words[1]);
      members.back().edges.emplace_back(words[0], words[1]);
    } else {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected \"u v\"");
    }
  }
  auto universe = make_universe(labels);
  std::vector<LabeledGraph> graphs;
  for (const auto& m : members) {
    std::vector<Edge> edges;
    for (const auto& [a, b] : m.edges) edges.emplace_back(universe->index_of(a), universe->index_of(b));
    graphs.emplace_back(universe, edges, m.name);
  }
  if (graphs.empty()) graphs.emplace_back(universe, std::vector<Edge>{});
  return {GraphFamily(universe, std::move(graphs)), Json::object()};
}

std::size_t parse_order(std::string_view digits, std::string_view spec) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0)
    throw Error(ErrorKind::InvalidInput, "bad graph order in \"" + std::string(spec) + "\"");
  return n;
}

}  // namespace

FamilyDocument parse_family_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    try {
      return from_json(doc);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  return from_edge_list(text);
}

FamilyDocument load_family_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family_document(buf.str());
}

std::string serialize_family(const GraphFamily& fam, const Json& metadata) {
  const auto& u = *fam.universe();
  std::string out = "{\n";
  out += "  \"schema\": " + std::to_string(kSchemaVersion) + ",\n";
  out += "  \"name\": " + Json(fam.name()).dump() + ",\n";
  out += "  \"vertices\": " + Json(u.labels()).dump() + ",\n";
  out += "  \"members\": [";
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& g = fam[i];
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({u.label(a), u.label(b)}));
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"name\": " + Json(g.name()).dump() + ", \"edges\": " + edges.dump() + "}";
  }
  out += fam.empty() ? "],\n" : "\n  ],\n";
  out += "  \"metadata\": " + (metadata.is_null() ? Json::object() : metadata).dump() + "\n}\n";
  return out;
}

std::string serialize_family(const FamilyDocument& doc) {
  return serialize_family(doc.family, doc.metadata);
}

bool is_graph_shortcut(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return false;
  const auto kind = spec.substr(0, colon);
  return kind == "path" || kind == "cycle" || kind == "complete" || kind == "empty" ||
         kind == "star";
}

LabeledGraph graph_from_shortcut(std::string_view spec) {
  if (!is_graph_shortcut(spec))
    throw Error(ErrorKind::InvalidInput, "unknown graph shortcut \"" + std::string(spec) + "\"");
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const std::size_t n = parse_order(spec.substr(colon + 1), spec);
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") {
    if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle needs at least 3 vertices");
    return cycle_graph(n);
  }
  if (kind == "complete") return complete_graph(n);
  if (kind == "empty") return empty_graph(n);
  return star_graph(n);
}

GraphFamily resolve_family(std::string_view spec) {
  if (is_graph_shortcut(spec)) return singleton_family(graph_from_shortcut(spec));
  return load_family_document(std::filesystem::path(std::string(spec))).family;
}

LabeledGraph resolve_graph(std::string_view spec) {
  auto fam = resolve_family(spec);
  if (fam.size() != 1)
    throw Error(ErrorKind::InvalidInput,
                "expected a single graph, got a family of " + std::to_string(fam.size()));
  return fam[0];
}

Json set_to_json(const VertexUniverse& universe, const VertexSet& s) {
  return Json(universe.labels_of(s));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) s[static_cast<std::size_t>(i)] = kDigits[value & 15];
  return s;
}

}  // namespace simdim
