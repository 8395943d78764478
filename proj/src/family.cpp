#include "simdim/family.hpp"

#include <set>

#include "simdim/error.hpp"

namespace simdim {

GraphFamily::GraphFamily(UniversePtr universe, std::vector<LabeledGraph> members,
                         std::string name)
    : universe_(std::move(universe)), name_(std::move(name)) {
  if (!universe_) throw Error(ErrorKind::InvalidInput, "family without a universe");
  std::set<std::string> names;
  members_.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto& g = members[i];
    if (!same_universe(g.universe(), universe_))
      throw Error(ErrorKind::InvalidInput,
                  "member '" + g.name() + "' is not defined on the family universe");
    std::string member_name = g.name().empty() ? "G" + std::to_string(i + 1) : g.name();
    if (!names.insert(member_name).second)
      throw Error(ErrorKind::InvalidInput, "duplicate member name '" + member_name + "'");
    // Rebind to the family's universe pointer so identity checks stay cheap.
    members_.emplace_back(universe_, g.rows(), std::move(member_name));
  }
}

namespace {

UniversePtr first_universe(const std::vector<LabeledGraph>& members) {
  if (members.empty()) throw Error(ErrorKind::InvalidInput, "empty family");
  return members.front().universe();
}

}  // namespace

GraphFamily::GraphFamily(std::vector<LabeledGraph> members, std::string name)
    : GraphFamily(first_universe(members), std::vector<LabeledGraph>(members), std::move(name)) {}

GraphFamily GraphFamily::subfamily(const std::vector<std::size_t>& indices,
                                   std::string name) const {
  std::vector<LabeledGraph> picked;
  for (auto i : indices) picked.push_back(members_.at(i));
  return GraphFamily(universe_, std::move(picked), name.empty() ? name_ : std::move(name));
}

GraphFamily GraphFamily::united_with(const GraphFamily& other, std::string name) const {
  std::vector<LabeledGraph> all = members_;
  all.insert(all.end(), other.members_.begin(), other.members_.end());
  return GraphFamily(universe_, std::move(all), std::move(name));
}

GraphFamily GraphFamily::with_member(const LabeledGraph& g) const {
  std::vector<LabeledGraph> all = members_;
  all.push_back(g);
  return GraphFamily(universe_, std::move(all), name_);
}

bool GraphFamily::all_connected() const {
  for (const auto& g : members_)
    if (!is_connected(g)) return false;
  return true;
}

GraphFamily singleton_family(const LabeledGraph& g) {
  return GraphFamily(g.universe(), {g}, g.name());
}

GraphFamily complement_family(const GraphFamily& fam) {
  std::vector<LabeledGraph> out;
  for (const auto& g : fam) out.push_back(complement(g).renamed("co-" + g.name()));
  return GraphFamily(fam.universe(), std::move(out), "co-" + fam.name());
}

}  // namespace simdim
