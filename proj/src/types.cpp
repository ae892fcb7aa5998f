#include "infosel/types.hpp"

#include <algorithm>
#include <iterator>

namespace infosel {

VarSet make_set(std::vector<VarId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool contains(const VarSet& set, VarId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet set_difference(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet set_intersection(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet with(const VarSet& set, VarId id) {
  VarSet out = set;
  auto it = std::lower_bound(out.begin(), out.end(), id);
  if (it == out.end() || *it != id) out.insert(it, id);
  return out;
}

bool is_subset(const VarSet& sub, const VarSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string format_set(std::span<const VarId> ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out + "}";
}

}  // namespace infosel
