#include "simdim/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "simdim/analysis.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/io.hpp"
#include "simdim/random.hpp"
#include "simdim/solver.hpp"
#include "simdim/verifier.hpp"

namespace simdim {
namespace {

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 20240501;
  std::uint64_t budget_nodes = kDefaultNodeBudget;
  bool oracle = false;
  unsigned threads = 1;
  bool timing = false;
  std::string fixtures;
};

SolveOptions solve_options(const Globals& g) {
  SolveOptions opts;
  opts.node_budget = g.budget_nodes;
  opts.threads = g.threads;
  return opts;
}

Truncation parse_truncation(const std::string& s) {
  if (s == "inf" || s == "geodesic") return Truncation::geodesic();
  int t = 0;
  try {
    std::size_t used = 0;
    t = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "bad truncation \"" + s + "\" (integer >= 1 or inf)");
  }
  return Truncation::finite(t);
}

VertexSet parse_label_set(const VertexUniverse& u, const std::string& csv) {
  std::vector<std::string> labels;
  std::stringstream in(csv);
  for (std::string l; std::getline(in, l, ',');)
    if (!l.empty()) labels.push_back(l);
  return u.subset(labels);
}

Json set_json(const UniversePtr& u, const VertexSet& s) { return set_to_json(*u, s); }

Json sets_json(const UniversePtr& u, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(set_json(u, s));
  return out;
}

std::string table_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); })) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get<std::string>();
    return s + "}";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + table_value(v[i]);
    return s;
  }
  return v.dump();
}

void emit(std::ostream& out, const Globals& g, const Json& result) {
  if (g.format == "json") {
    out << result.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : result.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : result.items())
    out << k << std::string(width - k.size() + 2, ' ') << table_value(v) << '\n';
}

Json report_json(const char* command, const GraphFamily& fam, const SolveReport& r,
                 const Globals& g) {
  Json j;
  j["command"] = command;
  j["input"] = fam.name();
  j["kind"] = to_string(r.kind);
  j["truncation"] = r.truncation.to_string();
  j["value"] = r.value;
  j["witness"] = set_json(fam.universe(), r.witness);
  if (r.all_bases) j["bases"] = sets_json(fam.universe(), *r.all_bases);
  if (g.timing) j["stats"] = {{"nodes", r.stats.nodes}, {"wall_ms", r.stats.wall_ms},
                              {"strategy", r.stats.strategy}};
  return j;
}

SolveReport run_solver(const GraphFamily& fam, Truncation t, const Globals& g) {
  if (g.oracle) return brute_force(fam, t);
  return solve(fam, t, solve_options(g));
}

GraphFamily named_family(std::string_view spec) {
  auto fam = resolve_family(spec);
  if (!fam.name().empty()) return fam;
  return GraphFamily(fam.universe(), fam.members(), std::string(spec));
}

Json twins_json(const GraphFamily& fam) {
  const auto profile = twin_profile(fam);
  const auto& u = fam.universe();
  Json members = Json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Json classes = Json::array();
    for (const auto& c : profile.partitions[i].classes()) {
      if (c.kind == TwinKind::Singleton) continue;
      classes.push_back({{"kind", c.kind == TwinKind::TrueTwin ? "true" : "false"},
                         {"members", set_json(u, c.members)}});
    }
    members.push_back({{"graph", fam[i].name()},
                       {"true_classes", profile.partitions[i].true_class_count()},
                       {"false_classes", profile.partitions[i].false_class_count()},
                       {"classes", classes}});
  }
  return {{"command", "twins"}, {"input", fam.name()}, {"members", members},
          {"v_m", set_json(u, profile.v_m)}};
}

Json param_json(const UniversePtr& u, const ParamValue& p) {
  Json j = {{"value", p.value}};
  if (p.first) j["first"] = set_json(u, *p.first);
  if (p.second) j["second"] = set_json(u, *p.second);
  return j;
}

std::vector<std::vector<Edge>> random_removals(const std::vector<Edge>& relaxable,
                                               std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Edge>> out{{}};
  for (std::size_t i = 1; i < count; ++i) {
    std::vector<Edge> r;
    for (const auto& e : relaxable)
      if (coin(rng, 1, 2)) r.push_back(e);
    out.push_back(std::move(r));
  }
  return out;
}

// Join factors must have disjoint labels. Shortcuts all use v1..vn, so on a
// collision the second factor's labels get a prime: v1 becomes v1'.
UniversePtr primed_if_shared(const UniversePtr& first, const UniversePtr& second) {
  bool shared = false;
  for (const auto& l : second->labels()) shared = shared || first->find(l).has_value();
  if (!shared) return second;
  std::vector<std::string> labels;
  for (const auto& l : second->labels()) labels.push_back(l + "'");
  return make_universe(labels);
}

GraphFamily disjoint_from(const GraphFamily& first, const GraphFamily& second) {
  const auto u = primed_if_shared(first.universe(), second.universe());
  if (u == second.universe()) return second;
  std::vector<LabeledGraph> gs;
  for (const auto& g : second) gs.push_back(rebind(g, u, g.name()));
  return GraphFamily(u, gs, second.name());
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> inputs;
  std::size_t n = 0;
  std::size_t count = 20;
  std::string basis;
  std::string product = "join";
};

GraphFamily construct(const ConstructArgs& a, const Globals& g, Json& meta) {
  auto need = [&](std::size_t k) {
    if (a.inputs.size() != k)
      throw Error(ErrorKind::InvalidInput, "construct " + a.kind + " takes " + std::to_string(k) +
                                               " input(s), got " + std::to_string(a.inputs.size()));
  };
  meta["construct"] = a.kind;
  if (a.kind == "join" || a.kind == "lex") {
    need(2);
    const auto f1 = resolve_family(a.inputs[0]);
    auto f2 = resolve_family(a.inputs[1]);
    meta["inputs"] = a.inputs;
    if (a.kind == "lex") return lex_product_families(f1, f2);
    return join_families(f1, disjoint_from(f1, f2));
  }
  if (a.kind == "complement") {
    need(1);
    meta["inputs"] = a.inputs;
    return complement_family(resolve_family(a.inputs[0]));
  }
  if (a.kind == "star") {
    need(0);
    if (a.n < 2) throw Error(ErrorKind::InvalidInput, "construct star needs --n >= 2");
    meta["n"] = a.n;
    return star_family(a.n);
  }
  if (a.kind == "h5") {
    need(0);
    return h5_family();
  }
  if (a.kind == "hex") {
    need(0);
    meta["n"] = a.n;
    return h_ex_family(a.n);
  }
  if (a.kind == "perm-sample") {
    need(1);
    const auto base = resolve_graph(a.inputs[0]);
    const auto b = parse_label_set(*base.universe(), a.basis);
    meta["inputs"] = a.inputs;
    meta["basis"] = set_json(base.universe(), b);
    meta["count"] = a.count;
    meta["seed"] = g.seed;
    return perm_family_sample(base, b, a.count, g.seed, {.include_base = true, .validate_basis = true});
  }
  if (a.kind == "relaxed") {
    need(2);
    const auto g1 = resolve_graph(a.inputs[0]);
    const bool lex = a.product == "lex";
    auto g2 = resolve_graph(a.inputs[1]);
    if (!lex) g2 = disjoint_from(singleton_family(g1), singleton_family(g2))[0];
    if (!lex && a.product != "join")
      throw Error(ErrorKind::InvalidInput, "--product must be join or lex");
    const auto base = lex ? lex_product(g1, g2) : join(g1, g2);
    const auto b = a.basis.empty()
                       ? solve(singleton_family(base), Truncation::adjacency(), solve_options(g)).witness
                       : parse_label_set(*base.universe(), a.basis);
    const auto relaxable = lex ? lex_relaxable_edges(base, g2.order(), b)
                               : join_relaxable_edges(base, g1.order(), b);
    const auto removals = random_removals(relaxable, std::max<std::size_t>(a.count, 1), g.seed);
    meta["inputs"] = a.inputs;
    meta["product"] = a.product;
    meta["basis"] = set_json(base.universe(), b);
    meta["seed"] = g.seed;
    return lex ? relaxed_lex_family(g1, g2, b, removals) : relaxed_join_family(g1, g2, b, removals);
  }
  throw Error(ErrorKind::InvalidInput, "unknown construction \"" + a.kind + "\"");
}

void emit_checks(std::ostream& out, const Globals& g, const std::vector<TheoremCheck>& checks) {
  if (g.format == "json") {
    for (const auto& c : checks) out << to_json(c, g.timing).dump() << '\n';
    return;
  }
  std::size_t w = 2;
  for (const auto& c : checks) w = std::max(w, c.id.size());
  for (const auto& c : checks) {
    const auto verdict = to_string(c.verdict);
    out << c.id << std::string(w - c.id.size() + 2, ' ') << verdict
        << std::string(verdict.size() < 18 ? 18 - verdict.size() : 2, ' ');
    out << to_string(c.relation) << "  " << c.evidence.size() << " instance(s)";
    if (g.timing) out << "  " << static_cast<long long>(c.wall_ms) << " ms";
    out << '\n';
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  if (const char* env = std::getenv("SIMDIM_BUDGET_NODES"); env != nullptr && *env != '\0') {
    try {
      g.budget_nodes = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: SIMDIM_BUDGET_NODES is not a number: " << env << '\n';
      return kExitInputError;
    }
  }

  CLI::App app{"Exact simultaneous metric and adjacency dimensions of graph families", "simdim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled constructions and checks")->capture_default_str();
  app.add_option("--budget-nodes", g.budget_nodes, "Search node cap (env SIMDIM_BUDGET_NODES)")
      ->capture_default_str();
  app.add_flag("--oracle", g.oracle, "Use the brute-force oracle instead of the solver");
  app.add_option("--threads", g.threads, "Solver worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", g.timing, "Include node counts and wall time");
  app.add_option("--fixtures", g.fixtures, "Fixture directory for verify");

  std::string input;
  std::string tstr = "2";
  bool all = false;

  auto add_input = [&](CLI::App* sub) {
    auto* pos = sub->add_option("input", input, "File path or shortcut (path:n, cycle:n, ...)");
    auto* opt = sub->add_option("--graph,--family", input, "Same as the positional input");
    pos->excludes(opt);
  };

  auto* dim_cmd = app.add_subcommand("dim", "Metric dimension of one graph");
  auto* adim_cmd = app.add_subcommand("adim", "Adjacency dimension of one graph");
  auto* sdim_cmd = app.add_subcommand("sdim", "Simultaneous metric dimension of a family");
  auto* sadim_cmd = app.add_subcommand("sadim", "Simultaneous adjacency dimension of a family");
  auto* tdim_cmd = app.add_subcommand("tdim", "Simultaneous dimension under distance truncated at t");
  tdim_cmd->add_option("--t", tstr, "Truncation (integer >= 1 or inf)")->required();
  auto* bases_cmd = app.add_subcommand("bases", "Minimum generators of a family");
  bases_cmd->add_flag("--all", all, "List every minimum generator");
  bases_cmd->add_option("--t", tstr, "Truncation (integer >= 1 or inf)")->capture_default_str();
  auto* twins_cmd = app.add_subcommand("twins", "Twin classes per member and V_M");
  for (auto* sub : {dim_cmd, adim_cmd, sdim_cmd, sadim_cmd, tdim_cmd, bases_cmd, twins_cmd}) {
    add_input(sub);
  }

  std::string param_kind;
  std::string other;
  auto* params_cmd = app.add_subcommand("params", "Family parameters zeta, psi, xi, V_M, catalog");
  params_cmd->add_option("kind", param_kind, "zeta | psi | xi | vm | catalog")
      ->required()
      ->check(CLI::IsMember({"zeta", "psi", "xi", "vm", "catalog"}));
  params_cmd->add_option("input", input, "Family (the second factor H)")->required();
  params_cmd->add_option("--other", other, "psi: G family; xi: the outer graph G");

  ConstructArgs cargs;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a constructed family as JSON");
  construct_cmd->add_option("kind", cargs.kind, "join | lex | complement | star | perm-sample | h5 | hex | relaxed")
      ->required()
      ->check(CLI::IsMember({"join", "lex", "complement", "star", "perm-sample", "h5", "hex", "relaxed"}));
  construct_cmd->add_option("inputs", cargs.inputs, "Input graphs or families");
  construct_cmd->add_option("--n", cargs.n, "Order for star / hex");
  construct_cmd->add_option("--count", cargs.count, "Members for perm-sample / relaxed")->capture_default_str();
  construct_cmd->add_option("--basis", cargs.basis, "Comma-separated labels of B");
  construct_cmd->add_option("--product", cargs.product, "relaxed: join or lex")->capture_default_str();

  std::string theorem;
  std::string suite;
  std::vector<std::string> raw_params;
  auto* verify_cmd = app.add_subcommand("verify", "Run a registered theorem check or a suite");
  auto* id_opt = verify_cmd->add_option("id", theorem, "Theorem id");
  auto* suite_opt = verify_cmd->add_option("--suite", suite, "smoke | full-desk")
                        ->check(CLI::IsMember({"smoke", "full-desk"}));
  id_opt->excludes(suite_opt);
  verify_cmd->add_option("--param", raw_params, "Instance parameter key=value");
  auto* list_cmd = app.add_subcommand("list", "List registered theorem ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    const auto need_input = [&](CLI::App* sub) {
      if (input.empty()) throw Error(ErrorKind::InvalidInput, sub->get_name() + " needs an input");
    };
    if (dim_cmd->parsed() || adim_cmd->parsed()) {
      const bool metric = dim_cmd->parsed();
      need_input(metric ? dim_cmd : adim_cmd);
      const auto graph = resolve_graph(input);
      const GraphFamily fam(graph.universe(), {graph}, input);
      const auto r = run_solver(fam, metric ? Truncation::geodesic() : Truncation::adjacency(), g);
      emit(out, g, report_json(metric ? "dim" : "adim", fam, r, g));
    } else if (sdim_cmd->parsed() || sadim_cmd->parsed() || tdim_cmd->parsed()) {
      auto* sub = sdim_cmd->parsed() ? sdim_cmd : sadim_cmd->parsed() ? sadim_cmd : tdim_cmd;
      need_input(sub);
      const auto fam = named_family(input);
      const auto t = sub == sdim_cmd    ? Truncation::geodesic()
                     : sub == sadim_cmd ? Truncation::adjacency()
                                        : parse_truncation(tstr);
      const auto r = run_solver(fam, t, g);
      emit(out, g, report_json(sub->get_name().c_str(), fam, r, g));
    } else if (bases_cmd->parsed()) {
      need_input(bases_cmd);
      const auto fam = named_family(input);
      const auto t = parse_truncation(tstr);
      auto r = run_solver(fam, t, g);
      if (all) r.all_bases = enumerate_bases(fam, t, solve_options(g));
      emit(out, g, report_json("bases", fam, r, g));
    } else if (twins_cmd->parsed()) {
      need_input(twins_cmd);
      emit(out, g, twins_json(named_family(input)));
    } else if (params_cmd->parsed()) {
      const auto fam = named_family(input);
      const auto& u = fam.universe();
      Json j = {{"command", "params"}, {"param", param_kind}, {"input", fam.name()}};
      if (param_kind == "vm") {
        j["v_m"] = set_json(u, v_m(fam));
        j["value"] = v_m(fam).count();
      } else if (param_kind == "catalog") {
        const auto c = basis_catalog(fam, solve_options(g));
        j["value"] = c.value;
        j["bases"] = sets_json(u, c.all_bases);
        j["b1"] = sets_json(u, c.b1);
        j["b2"] = sets_json(u, c.b2);
      } else if (param_kind == "zeta") {
        j.update(param_json(u, zeta(fam, solve_options(g))));
      } else {
        if (other.empty()) throw Error(ErrorKind::InvalidInput, param_kind + " needs --other");
        if (param_kind == "psi") {
          const auto gf = named_family(other);
          const auto p = psi(gf, fam, solve_options(g));
          j["other"] = gf.name();
          j["value"] = p.value;
          if (p.first) j["first"] = set_json(gf.universe(), *p.first);
          if (p.second) j["second"] = set_json(u, *p.second);
        } else {
          const auto outer = resolve_graph(other);
          j["other"] = other;
          j.update(param_json(u, xi(outer, fam, solve_options(g))));
        }
      }
      emit(out, g, j);
    } else if (construct_cmd->parsed()) {
      Json meta = Json::object();
      const auto fam = construct(cargs, g, meta);
      out << serialize_family(fam, meta);
    } else if (list_cmd->parsed()) {
      for (const auto& info : registered_theorems()) {
        if (g.format == "json")
          out << Json{{"id", info.id}, {"relation", to_string(info.relation)},
                      {"statement", info.statement}}.dump() << '\n';
        else
          out << info.id << "  " << info.statement << '\n';
      }
    } else if (verify_cmd->parsed()) {
      VerifyOptions vo;
      vo.solve = solve_options(g);
      vo.seed = g.seed;
      if (!g.fixtures.empty()) vo.fixture_dir = g.fixtures;
      std::vector<TheoremCheck> checks;
      if (!suite.empty()) {
        vo.full = suite == "full-desk";
        checks = verify_suite(suite, vo);
      } else {
        if (theorem.empty()) throw Error(ErrorKind::InvalidInput, "verify needs an id or --suite");
        Params params;
        for (const auto& kv : raw_params) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::InvalidInput, "--param expects key=value, got \"" + kv + "\"");
          params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        checks.push_back(verify(theorem, params, vo));
      }
      emit_checks(out, g, checks);
      const bool failed = std::any_of(checks.begin(), checks.end(),
                                      [](const TheoremCheck& c) { return c.verdict == Verdict::Fail; });
      return failed ? kExitVerifyFail : kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace simdim
