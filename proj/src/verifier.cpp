#include "simdim/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "verifier_internal.hpp"

#ifndef SIMDIM_DEFAULT_FIXTURE_DIR
#define SIMDIM_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace simdim {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equality: return "equality";
    case Relation::Inequality: return "inequality";
    case Relation::SetEquality: return "set-equality";
    case Relation::Existence: return "existence";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

Json to_json(const TheoremCheck& check, bool timing) {
  Json j;
  j["id"] = check.id;
  j["inputs"] = check.inputs;
  j["relation"] = to_string(check.relation);
  j["lhs"] = check.lhs;
  j["rhs"] = check.rhs;
  j["verdict"] = to_string(check.verdict);
  j["scope"] = check.scope;
  j["evidence"] = check.evidence;
  if (timing) j["wall_ms"] = check.wall_ms;
  return j;
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("SIMDIM_FIXTURES"); env != nullptr && *env != '\0')
    return env;
  return SIMDIM_DEFAULT_FIXTURE_DIR;
}

const std::vector<FixturePin>& pinned_fixtures() {
  static const std::vector<FixturePin> pins = {
      {"figure1.json", 0x96fa243c854e9834ULL},
      {"figure2.json", 0xc6b37a4d60972b2bULL},
      {"h5.json", 0x18db17b879ba9e92ULL},
      {"hex10.json", 0xd0f478ba6c0da31bULL},
      {"stars4.json", 0xf6a9e1d7c765c0a6ULL},
  };
  return pins;
}

namespace detail {

Context::Context(const Params& params, const VerifyOptions& opts)
    : params_(params), opts_(opts), seed_(opts.seed) {
  if (has("seed")) seed_ = static_cast<std::uint64_t>(get_int("seed", 0));
  rng_.seed(seed_);
}

long Context::get_int(const std::string& key, long fallback) const {
  auto it = params_.find(key);
  if (it == params_.end()) return fallback;
  try {
    std::size_t pos = 0;
    const long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "parameter " + key + " expects an integer, got \"" +
                                             it->second + "\"");
  }
}

std::string Context::get(const std::string& key, const std::string& fallback) const {
  auto it = params_.find(key);
  return it == params_.end() ? fallback : it->second;
}

std::vector<long> Context::get_ints(const std::string& key, std::vector<long> fallback) const {
  auto it = params_.find(key);
  if (it == params_.end()) return fallback;
  std::vector<long> out;
  std::istringstream in(it->second);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      if (auto dots = item.find(".."); dots != std::string::npos) {
        const long a = std::stol(item.substr(0, dots));
        const long b = std::stol(item.substr(dots + 2));
        for (long v = a; v <= b; ++v) out.push_back(v);
      } else {
        out.push_back(std::stol(item));
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "parameter " + key + " expects integers or ranges");
    }
  }
  return out;
}

std::filesystem::path Context::fixture_dir() const {
  return opts_.fixture_dir.empty() ? default_fixture_dir() : opts_.fixture_dir;
}

FamilyDocument Context::fixture(const std::string& stem) const {
  return load_family_document(fixture_dir() / (stem + ".json"));
}

void Recorder::record(Json instance, bool holds, Json lhs, Json rhs, Json detail) {
  entries_.push_back({std::move(instance), holds ? Outcome::Holds : Outcome::Fails,
                      std::move(lhs), std::move(rhs), std::move(detail)});
}

void Recorder::hypothesis_not_met(Json instance, std::string reason, Json detail) {
  detail["reason"] = std::move(reason);
  entries_.push_back({std::move(instance), Outcome::HypothesisNotMet, nullptr, nullptr,
                      std::move(detail)});
}

void Recorder::skipped(Json instance, std::string reason) {
  entries_.push_back({std::move(instance), Outcome::Skipped, nullptr, nullptr,
                      Json{{"reason", std::move(reason)}}});
}

void Recorder::attempt(const Json& instance, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceeded& e) {
    skipped(instance, e.what());
  }
}

void Recorder::finish(TheoremCheck& check) const {
  std::size_t holds = 0, fails = 0, hnm = 0, skipped = 0;
  Json lhs = Json::array(), rhs = Json::array();
  for (const auto& e : entries_) {
    Json item;
    item["instance"] = e.instance;
    switch (e.outcome) {
      case Outcome::Holds: ++holds; item["outcome"] = "holds"; break;
      case Outcome::Fails: ++fails; item["outcome"] = "fails"; break;
      case Outcome::HypothesisNotMet: ++hnm; item["outcome"] = "hypothesis-not-met"; break;
      case Outcome::Skipped: ++skipped; item["outcome"] = "skipped"; break;
    }
    if (!e.lhs.is_null()) item["lhs"] = e.lhs;
    if (!e.rhs.is_null()) item["rhs"] = e.rhs;
    if (!e.detail.empty()) item["detail"] = e.detail;
    if (e.outcome == Outcome::Holds || e.outcome == Outcome::Fails) {
      lhs.push_back(e.lhs);
      rhs.push_back(e.rhs);
    }
    check.evidence.push_back(std::move(item));
  }
  if (lhs.size() == 1) {
    check.lhs = lhs[0];
    check.rhs = rhs[0];
  } else {
    check.lhs = std::move(lhs);
    check.rhs = std::move(rhs);
  }
  if (fails > 0) check.verdict = Verdict::Fail;
  else if (holds > 0) check.verdict = Verdict::Pass;
  else if (hnm > 0) check.verdict = Verdict::HypothesisNotMet;
  else check.verdict = Verdict::Skipped;
  check.inputs["instances"] = entries_.size();
  check.inputs["outcomes"] = {{"holds", holds}, {"fails", fails},
                              {"hypothesis_not_met", hnm}, {"skipped", skipped}};
}

Json describe(const GraphFamily& fam) {
  Json members = Json::array();
  for (const auto& g : fam) members.push_back(g.name());
  Json j;
  if (!fam.name().empty()) j["family"] = fam.name();
  j["order"] = fam.order();
  j["members"] = std::move(members);
  return j;
}

Json describe(const LabeledGraph& g) {
  return Json{{"graph", g.name()}, {"order", g.order()}, {"edges", g.edge_count()}};
}

Json labels(const VertexUniverse& u, const VertexSet& s) { return set_to_json(u, s); }

Json labels(const VertexUniverse& u, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(set_to_json(u, s));
  return out;
}

std::size_t floor_formula(std::size_t n) { return (2 * n + 2) / 5; }

std::vector<GraphFamily> nonempty_subfamilies(const GraphFamily& fam) {
  std::vector<GraphFamily> out;
  const std::size_t k = fam.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    std::string name = "{";
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) {
        if (!idx.empty()) name += ",";
        name += fam[i].name();
        idx.push_back(i);
      }
    out.push_back(fam.subfamily(idx, name + "}"));
  }
  return out;
}

GraphFamily random_family(Rng& rng, std::size_t n, std::size_t members, bool connected,
                          std::uint64_t num, std::uint64_t den) {
  auto u = make_indexed_universe(n);
  std::vector<LabeledGraph> gs;
  for (std::size_t i = 0; i < members; ++i) {
    const std::string name = "R" + std::to_string(i + 1);
    gs.push_back(connected ? random_connected_graph(rng, u, num, den, name)
                           : random_graph(rng, u, num, den, name));
  }
  return GraphFamily(u, std::move(gs), "random(n=" + std::to_string(n) + ",k=" +
                                           std::to_string(members) + ")");
}

std::vector<LabeledGraph> all_graphs(std::size_t n, bool connected_only) {
  if (n > 7) throw Error(ErrorKind::InvalidInput, "exhaustive corpus limited to n <= 7");
  auto u = make_indexed_universe(n);
  std::vector<Edge> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<LabeledGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    LabeledGraph g(u, edges, "g" + std::to_string(mask));
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

LabeledGraph random_relabel(Rng& rng, const LabeledGraph& g, std::string name) {
  return permuted(g, random_permutation(rng, g.order()), std::move(name));
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(bounded_draw(rng, hi - lo + 1));
}

GraphFamily on_prefix(const GraphFamily& fam, const std::string& prefix) {
  auto u = make_indexed_universe(fam.order(), prefix);
  std::vector<LabeledGraph> gs;
  for (const auto& g : fam) gs.push_back(rebind(g, u, g.name()));
  return GraphFamily(u, std::move(gs), fam.name());
}

GraphFamily named(const LabeledGraph& g) { return GraphFamily(g.universe(), {g}, g.name()); }

GraphFamily family_of(std::vector<LabeledGraph> gs, std::string name) {
  auto u = gs.front().universe();
  return GraphFamily(u, std::move(gs), std::move(name));
}

GraphFamily complete_family(std::size_t t, const std::string& prefix) {
  return singleton_family(complete_graph(make_indexed_universe(t, prefix), "K" + std::to_string(t)));
}

std::string lemma_hypothesis(const LabeledGraph& g) {
  const auto inv = basic_invariants(g);
  if (!inv.connected) return {};
  if (inv.diameter != kInfinite && inv.diameter >= 6) return "diameter >= 6";
  if (g.order() >= 7 && inv.max_degree <= 2 && inv.min_degree >= 1) return "path or cycle, n >= 7";
  if (inv.girth != kInfinite && inv.girth >= 5 && inv.min_degree >= 3) return "girth >= 5, min degree >= 3";
  return {};
}

std::string family_lemma_hypothesis(const GraphFamily& fam) {
  std::string why;
  for (const auto& g : fam) {
    why = lemma_hypothesis(g);
    if (why.empty()) return {};
  }
  return fam.order() >= 7 ? "every member: " + why : std::string{};
}

const std::vector<Registration>& registry() {
  static const std::vector<Registration> regs = [] {
    std::vector<Registration> out;
    register_single_checks(out);
    register_join_checks(out);
    register_lex_checks(out);
    register_misc_checks(out);
    return out;
  }();
  return regs;
}

}  // namespace detail

const std::vector<TheoremInfo>& registered_theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& r : detail::registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

bool is_registered(const std::string& id) {
  const auto& regs = detail::registry();
  return std::any_of(regs.begin(), regs.end(), [&](const auto& r) { return r.info.id == id; });
}

TheoremCheck verify(const std::string& id, const Params& params, const VerifyOptions& opts) {
  const auto& regs = detail::registry();
  auto it = std::find_if(regs.begin(), regs.end(), [&](const auto& r) { return r.info.id == id; });
  if (it == regs.end()) throw Error(ErrorKind::UnknownTheorem, "unknown theorem id \"" + id + "\"");
  const auto start = std::chrono::steady_clock::now();
  detail::Context ctx(params, opts);
  detail::Recorder rec;
  TheoremCheck check;
  check.id = id;
  check.relation = it->info.relation;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  check.inputs["params"] = std::move(p);
  check.inputs["seed"] = ctx.seed();
  it->fn(ctx, rec, check);
  rec.finish(check);
  check.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return check;
}

namespace {

struct SuiteItem {
  std::string id;
  Params params;
};

std::vector<SuiteItem> suite_items(const std::string& suite) {
  if (suite == "smoke") {
    return {
        {"fixtures", {}},
        {"fig-1", {}},
        {"fig-2", {}},
        {"rem-2.1", {{"count", "40"}}},
        {"cor-2.2", {{"count", "20"}}},
        {"thm-2.3", {{"count", "40"}}},
        {"rem-2.4", {{"count", "40"}}},
        {"cor-2.6", {}},
        {"rem-2.7", {}},
        {"rem-2.8", {{"count", "20"}}},
        {"rem-2.9", {{"count", "10"}}},
        {"thm-2.10", {}},
        {"cor-2.11", {}},
        {"rem-2.12", {{"count", "30"}}},
        {"thm-2.13", {{"n", "8"}}},
        {"thm-3.1", {{"count", "20"}}},
        {"cor-3.2", {{"count", "10"}}},
        {"thm-3.3", {}},
        {"rem-3.6", {{"n", "4..12"}}},
        {"lem-3.7", {}},
        {"prop-k1-lemma37", {}},
        {"prop-k1-perm-lemma37", {}},
        {"prop-3.8", {}},
        {"thm-3.9", {}},
        {"cor-join-lemma37", {}},
        {"thm-join-perm", {}},
        {"thm-3.13", {}},
        {"cor-3.14", {}},
        {"cor-3.15", {}},
        {"cor-3.16", {}},
        {"claim-4.1", {}},
        {"thm-4.2", {}},
        {"cor-4.3", {}},
        {"thm-4.4", {}},
        {"thm-4.5", {}},
        {"thm-4.6", {}},
        {"rem-4.7", {{"count", "30"}}},
        {"rem-4.8", {{"count", "10"}}},
        {"rem-4.9", {}},
        {"rem-4.10", {}},
        {"lem-4.11", {}},
        {"rem-4.12", {}},
        {"prop-4.13", {}},
        {"rem-4.18", {}},
        {"prop-lex-join", {}},
        {"rem-4.15", {}},
        {"cor-4.14", {}},
        {"rem-4.16", {}},
        {"cor-4.17", {}},
        {"prop-4.19", {}},
        {"prop-4.20", {}},
        {"thm-4.23", {}},
        {"prop-4.24", {}},
        {"prop-4.25", {}},
        {"cor-4.27", {}},
        {"ex-h5", {}},
        {"ex-hex", {}},
    };
  }
  if (suite == "full-desk") {
    std::vector<SuiteItem> out;
    for (const auto& info : registered_theorems()) out.push_back({info.id, {}});
    return out;
  }
  throw Error(ErrorKind::InvalidInput, "unknown suite \"" + suite + "\" (smoke | full-desk)");
}

// Inside a suite, a check that cannot run (unreadable fixture, malformed
// input) counts as failed instead of aborting the remaining checks.
TheoremCheck verify_item(const SuiteItem& item, const VerifyOptions& opts) {
  try {
    return verify(item.id, item.params, opts);
  } catch (const Error& e) {
    TheoremCheck check;
    check.id = item.id;
    for (const auto& info : registered_theorems())
      if (info.id == item.id) check.relation = info.relation;
    check.verdict = Verdict::Fail;
    check.evidence.push_back({{"outcome", "error"}, {"error", e.what()}});
    return check;
  }
}

}  // namespace

std::vector<TheoremCheck> verify_suite(const std::string& suite, const VerifyOptions& opts) {
  const auto items = suite_items(suite);
  VerifyOptions local = opts;
  local.full = suite == "full-desk";
  const unsigned workers = std::max(1U, opts.solve.threads);
  // Checks run concurrently; each solver call is single threaded so the
  // thread budget is not multiplied.
  local.solve.threads = 1;
  std::vector<TheoremCheck> results(items.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      results[i] = verify_item(items[i], local);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
        results[i] = verify_item(items[i], local);
    }));
  for (auto& f : pool) f.get();
  return results;
}

}  // namespace simdim
