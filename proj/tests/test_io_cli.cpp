#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "simdim/cli.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/io.hpp"
#include "simdim/verifier.hpp"

using namespace simdim;

namespace {

const std::filesystem::path kFixtures = SIMDIM_TEST_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "simdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("figure1 fixture holds the transcribed edge lists") {
  const auto fam = load_family_document(kFixtures / "figure1.json").family;
  REQUIRE(fam.size() == 3);
  auto edges = [&](const std::string& list) {
    std::vector<Edge> es;
    std::istringstream in(list);
    for (std::string e; in >> e;) {
      const auto cut = e.find('v', 1);
      es.emplace_back(fam.universe()->index_of(e.substr(0, cut)), fam.universe()->index_of(e.substr(cut)));
    }
    return LabeledGraph(fam.universe(), es);
  };
  CHECK(fam[0] == edges("v4v8 v8v2 v2v7 v7v4 v4v2 v4v5 v5v6 v6v3 v6v1"));
  CHECK(fam[1] == edges("v7v3 v3v6 v6v4 v4v8 v8v6 v6v7 v7v1 v1v5 v1v2"));
  CHECK(fam[2] == edges("v7v5 v5v3 v3v2 v2v1 v1v6 v6v4 v4v8 v8v3 v4v2 v8v1"));
}

TEST_CASE("pinned fixtures match their checksums and are canonical") {
  for (const auto& pin : pinned_fixtures()) {
    CAPTURE(pin.file);
    const auto bytes = read(kFixtures / pin.file);
    CHECK(fnv1a64(bytes) == pin.checksum);
    CHECK(serialize_family(parse_family_document(bytes)) == bytes);
  }
}

TEST_CASE("serialization is a fixed point") {
  for (const auto& fam : {h5_family(), star_family(5), h_ex_family(7),
                          lex_product_families(singleton_family(path_graph(2)), star_family(4))}) {
    const auto once = serialize_family(fam, {{"seed", 3}});
    const auto doc = parse_family_document(once);
    CHECK(serialize_family(doc) == once);
    CHECK(doc.metadata["seed"] == 3);
    REQUIRE(doc.family.size() == fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(doc.family[i] == fam[i]);
  }
}

TEST_CASE("edge-list text input") {
  const auto doc = parse_family_document("# two members\nvertices: a b c\ngraph G\na b\nb c\ngraph H\na c\n");
  REQUIRE(doc.family.size() == 2);
  CHECK(doc.family[0].name() == "G");
  CHECK(doc.family[0].edge_count() == 2);
  CHECK(doc.family[1].adjacent(0, 2));
  const auto implicit = parse_family_document("x y\ny z\nw\n");
  CHECK(implicit.family.order() == 4);
  const auto single = parse_family_document(R"({"vertices": ["a","b"], "edges": [["a","b"]]})");
  CHECK(single.family.size() == 1);
}

TEST_CASE("malformed documents are parse errors") {
  for (const char* bad : {"{", R"({"members": []})", R"({"vertices": ["a"], "members": [{"edges": [["a","z"]]}]})",
                          R"({"schema": 9, "vertices": ["a"], "edges": []})", "a b c\n",
                          R"({"vertices": ["a","a"], "edges": []})"})
    CHECK_THROWS_AS(parse_family_document(bad), Error);
}

TEST_CASE("graph shortcuts") {
  CHECK(graph_from_shortcut("path:5") == path_graph(5));
  CHECK(graph_from_shortcut("cycle:6") == cycle_graph(6));
  CHECK(graph_from_shortcut("complete:4") == complete_graph(4));
  CHECK(graph_from_shortcut("empty:3") == empty_graph(3));
  CHECK(graph_from_shortcut("star:5") == star_graph(5));
  CHECK_THROWS_AS(graph_from_shortcut("cycle:2"), Error);
  CHECK_THROWS_AS(graph_from_shortcut("wheel:5"), Error);
  CHECK_THROWS_AS(graph_from_shortcut("path:x"), Error);
}

TEST_CASE("cli: documented examples") {
  const auto a = run_json({"sadim", (kFixtures / "figure1.json").string()});
  CHECK(a["value"] == 4);
  const auto all = run_json({"bases", "--all", (kFixtures / "figure1.json").string()});
  CHECK(std::find(all["bases"].begin(), all["bases"].end(), Json::array({"v1", "v3", "v5", "v8"})) !=
        all["bases"].end());
  const auto m = run_json({"sdim", (kFixtures / "figure1.json").string()});
  CHECK(m["value"] == 3);
  CHECK(m["witness"] == Json::array({"v1", "v5", "v8"}));
  CHECK(run_json({"adim", "--graph", "path:8"})["value"] == 3);
  CHECK(run_json({"dim", "--graph", "path:8"})["value"] == 1);
  CHECK(run_json({"--oracle", "dim", "path:8"})["value"] == 1);
  const auto p8 = oracle::from(singleton_family(path_graph(8)));
  CHECK(run_json({"tdim", "--t", "3", "path:8"})["value"] == oracle::min_generator(p8, 3));
}

TEST_CASE("cli: exit codes") {
  CHECK(run({"adim", "--graph", "wheel:4"}).code == kExitInputError);
  CHECK(run({"adim", "/no/such/file.json"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"verify", "no-such-id"}).code == kExitInputError);
  CHECK(run({"--budget-nodes", "3", "sadim", "cycle:14"}).code == kExitBudget);
  CHECK(run({"verify", "rem-3.6", "--param", "n=9"}).code == kExitOk);
  CHECK(run({"verify", "prop-4.25"}).code == kExitVerifyFail);
  const auto r = run({"adim", "--graph", "wheel:4"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("cli: output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "perm-sample", "cycle:8", "--basis", "v1,v3,v7", "--count", "12"},
           {"construct", "relaxed", "path:3", "path:3", "--product", "lex", "--count", "4"},
           {"--seed", "5", "verify", "rem-2.1"},
           {"params", "catalog", (kFixtures / "h5.json").string()},
           {"--format", "table", "twins", "complete:4"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: construct output round-trips") {
  const auto edge = std::filesystem::temp_directory_path() / "simdim-cli-u.txt";
  std::ofstream(edge) << "u1 u2\n";
  // colliding labels in the second factor are primed
  const auto primed = run_json({"construct", "join", "path:2", (kFixtures / "h5.json").string()});
  CHECK(primed["vertices"] == Json::parse(R"(["v1","v2","v1'","v2'","v3'","v4'","v5'"])"));
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "h5"},
           {"construct", "hex", "--n", "7"},
           {"construct", "star", "--n", "5"},
           {"construct", "complement", "cycle:5"},
           {"construct", "join", edge.string(), (kFixtures / "h5.json").string()},
           {"construct", "lex", "path:2", "cycle:5"},
           {"construct", "relaxed", "path:7", "cycle:5"}}) {
    CAPTURE(args[1]);
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(serialize_family(parse_family_document(r.out)) == r.out);
  }
  CHECK(parse_family_document(run({"construct", "h5"}).out).family[1] == h5_family()[1]);
}

TEST_CASE("cli: params and twins") {
  const auto h5 = (kFixtures / "h5.json").string();
  CHECK(run_json({"params", "zeta", h5})["value"] == 1);
  CHECK(run_json({"params", "vm", h5})["value"] == 0);
  const auto cat = run_json({"params", "catalog", h5});
  CHECK(cat["b2"] == Json::parse(R"([["v2","v4"]])"));
  CHECK(run_json({"params", "xi", (kFixtures / "stars4.json").string(), "--other", "path:2"})["value"] == 1);
  const auto tw = run_json({"twins", "star:5"});
  CHECK(tw["members"][0]["false_classes"] == 1);
  CHECK(run({"params", "psi", h5}).code == kExitInputError);
}

TEST_CASE("cli: environment budget override") {
  ::setenv("SIMDIM_BUDGET_NODES", "3", 1);
  const auto r = run({"sadim", "cycle:14"});
  ::unsetenv("SIMDIM_BUDGET_NODES");
  CHECK(r.code == kExitBudget);
}
