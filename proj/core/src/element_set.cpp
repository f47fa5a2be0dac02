#include "cocycle_forge/element_set.hpp"

#include <algorithm>

namespace cocycle_forge {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace cocycle_forge
