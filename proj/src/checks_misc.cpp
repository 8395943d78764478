// Fixture integrity: pinned checksums, canonical round trips and agreement
// with the constructions that generate the synthetic fixtures.
#include <fstream>
#include <sstream>

#include "verifier_internal.hpp"

namespace simdim::detail {
namespace {

bool same_members(const GraphFamily& a, const GraphFamily& b) {
  if (a.size() != b.size() || !(*a.universe() == *b.universe())) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == rebind(b[i], a.universe()))) return false;
  return true;
}

void check_fixtures(Context& ctx, Recorder& rec, TheoremCheck& check) {
  check.scope = "every pinned fixture file";
  const auto dir = ctx.fixture_dir();
  for (const auto& pin : pinned_fixtures()) {
    const Json inst = {{"file", pin.file}};
    std::ifstream in(dir / pin.file, std::ios::binary);
    if (!in) {
      rec.record(inst, false, "missing", hex64(pin.checksum), {{"path", (dir / pin.file).string()}});
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    const auto sum = fnv1a64(bytes);
    Json detail = {{"bytes", bytes.size()}};
    bool canonical = false;
    try {
      const auto doc = parse_family_document(bytes);
      canonical = serialize_family(doc) == bytes;
      detail["members"] = doc.family.size();
    } catch (const Error& e) {
      detail["parse_error"] = e.what();
    }
    detail["canonical_round_trip"] = canonical;
    rec.record(inst, sum == pin.checksum && canonical, hex64(sum), hex64(pin.checksum), detail);
  }
  const std::vector<std::pair<std::string, GraphFamily>> generated = {
      {"h5", h5_family()}, {"hex10", h_ex_family(10, false)}, {"stars4", star_family(4)}};
  for (const auto& [stem, fam] : generated) {
    const Json inst = {{"fixture", stem}, {"matches_construction", true}};
    try {
      const auto doc = ctx.fixture(stem);
      rec.record(inst, same_members(doc.family, fam), doc.family.size(), fam.size());
    } catch (const Error& e) {
      rec.record(inst, false, e.what(), fam.size());
    }
  }
}

}  // namespace

void register_misc_checks(std::vector<Registration>& out) {
  out.push_back({{"fixtures", Relation::Equality,
                  "fixture files match their pinned checksums, are canonical, and generated "
                  "fixtures equal their constructions"}, check_fixtures});
}

}  // namespace simdim::detail
