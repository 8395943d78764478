#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "simdim/io.hpp"
#include "simdim/solver.hpp"

namespace simdim {

enum class Relation { Equality, Inequality, SetEquality, Existence };
enum class Verdict { Pass, Fail, HypothesisNotMet, Skipped };

std::string to_string(Relation r);
std::string to_string(Verdict v);

/// Result of one registered check. A check may run several instances; lhs and
/// rhs are then arrays in instance order and each instance is listed in the
/// evidence with its own outcome.
struct TheoremCheck {
  std::string id;
  Json inputs = Json::object();
  Relation relation = Relation::Equality;
  Json lhs;
  Json rhs;
  Verdict verdict = Verdict::Skipped;
  Json evidence = Json::array();
  std::string scope;
  double wall_ms = 0.0;
};

Json to_json(const TheoremCheck& check, bool timing = false);

using Params = std::map<std::string, std::string>;

struct VerifyOptions {
  SolveOptions solve;
  std::uint64_t seed = 20240501;
  std::filesystem::path fixture_dir;  // empty: default_fixture_dir()
  bool full = false;                  // larger instance lists (full-desk)
};

struct TheoremInfo {
  std::string id;
  Relation relation;
  std::string statement;
};

const std::vector<TheoremInfo>& registered_theorems();
bool is_registered(const std::string& id);

/// Throws UnknownTheorem for ids outside the registry.
TheoremCheck verify(const std::string& id, const Params& params = {},
                    const VerifyOptions& opts = {});

/// "smoke" or "full-desk". Checks run concurrently when opts.solve.threads > 1;
/// results are returned in suite order either way.
std::vector<TheoremCheck> verify_suite(const std::string& suite, const VerifyOptions& opts = {});

/// SIMDIM_FIXTURES when set, otherwise the in-repo fixtures directory.
std::filesystem::path default_fixture_dir();

struct FixturePin {
  const char* file;
  std::uint64_t checksum;  // FNV-1a 64 of the file bytes
};
const std::vector<FixturePin>& pinned_fixtures();

}  // namespace simdim
