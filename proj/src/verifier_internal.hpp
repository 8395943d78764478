#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "simdim/analysis.hpp"
#include "simdim/constructions.hpp"
#include "simdim/error.hpp"
#include "simdim/random.hpp"
#include "simdim/verifier.hpp"

namespace simdim::detail {

class Context {
 public:
  Context(const Params& params, const VerifyOptions& opts);

  const SolveOptions& solve() const noexcept { return opts_.solve; }
  bool full() const noexcept { return opts_.full; }
  std::uint64_t seed() const noexcept { return seed_; }
  Rng& rng() noexcept { return rng_; }
  const Params& params() const noexcept { return params_; }
  bool has(const std::string& key) const { return params_.count(key) != 0; }
  long get_int(const std::string& key, long fallback) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  /// Comma separated integers, "a..b" ranges allowed.
  std::vector<long> get_ints(const std::string& key, std::vector<long> fallback) const;

  FamilyDocument fixture(const std::string& stem) const;
  std::filesystem::path fixture_dir() const;

 private:
  Params params_;
  VerifyOptions opts_;
  std::uint64_t seed_;
  Rng rng_;
};

enum class Outcome { Holds, Fails, HypothesisNotMet, Skipped };

class Recorder {
 public:
  /// Records an instance whose claim is the boolean `holds`.
  void record(Json instance, bool holds, Json lhs, Json rhs, Json detail = Json::object());
  void equal(Json instance, std::size_t lhs, std::size_t rhs, Json detail = Json::object()) {
    record(std::move(instance), lhs == rhs, lhs, rhs, std::move(detail));
  }
  void leq(Json instance, std::size_t lhs, std::size_t rhs, Json detail = Json::object()) {
    record(std::move(instance), lhs <= rhs, lhs, rhs, std::move(detail));
  }
  void hypothesis_not_met(Json instance, std::string reason, Json detail = Json::object());
  void skipped(Json instance, std::string reason);

  /// Runs body; a BudgetExceeded inside marks the instance skipped.
  void attempt(const Json& instance, const std::function<void()>& body);

  void finish(TheoremCheck& check) const;

 private:
  struct Entry {
    Json instance;
    Outcome outcome;
    Json lhs, rhs, detail;
  };
  std::vector<Entry> entries_;
};

// Descriptors and small helpers shared by the check files.
Json describe(const GraphFamily& fam);
Json describe(const LabeledGraph& g);
Json labels(const VertexUniverse& u, const VertexSet& s);
Json labels(const VertexUniverse& u, const std::vector<VertexSet>& sets);
std::size_t floor_formula(std::size_t n);  // floor((2n+2)/5)

/// Nonempty subfamilies by bitmask, in increasing mask order.
std::vector<GraphFamily> nonempty_subfamilies(const GraphFamily& fam);

GraphFamily random_family(Rng& rng, std::size_t n, std::size_t members, bool connected,
                          std::uint64_t num = 1, std::uint64_t den = 2);

/// All labeled graphs on v1..vn (n <= 7), optionally only connected ones.
std::vector<LabeledGraph> all_graphs(std::size_t n, bool connected_only);

/// Adjacency relabeling of g by a uniformly random permutation.
LabeledGraph random_relabel(Rng& rng, const LabeledGraph& g, std::string name);

/// Uniform integer in [lo, hi].
std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi);

/// The same family on a fresh universe prefix1..prefixn.
GraphFamily on_prefix(const GraphFamily& fam, const std::string& prefix);
GraphFamily named(const LabeledGraph& g);
/// Members must share one universe.
GraphFamily family_of(std::vector<LabeledGraph> gs, std::string name);
GraphFamily complete_family(std::size_t t, const std::string& prefix);

/// Which hypothesis of the containment lemma g meets (connected, D >= 6, a
/// path or cycle of order >= 7, or girth >= 5 with min degree >= 3); empty
/// when none applies.
std::string lemma_hypothesis(const LabeledGraph& g);
/// Same for every member, |V| >= 7; empty when some member fails.
std::string family_lemma_hypothesis(const GraphFamily& fam);

using CheckFn = std::function<void(Context&, Recorder&, TheoremCheck&)>;

struct Registration {
  TheoremInfo info;
  CheckFn fn;
};

void register_single_checks(std::vector<Registration>& out);
void register_join_checks(std::vector<Registration>& out);
void register_lex_checks(std::vector<Registration>& out);
void register_misc_checks(std::vector<Registration>& out);

}  // namespace simdim::detail
