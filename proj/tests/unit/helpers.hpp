#pragma once

#include <vector>

#include "oracle.hpp"
#include "suff/alloc.hpp"
#include "suff/relation.hpp"

namespace testing {

inline oracle::Table table(const suff::ExtensionalRelation& r) {
  return [&r](std::size_t x, std::size_t y) {
    return r.geq(static_cast<suff::ProfileIndex>(x), static_cast<suff::ProfileIndex>(y));
  };
}

inline oracle::Grid grid(const suff::Domain& d) { return {d.space().size(), d.agents()}; }

inline std::vector<std::vector<bool>> leq_matrix(const suff::Space& s) {
  std::vector<std::vector<bool>> out(s.size(), std::vector<bool>(s.size()));
  for (suff::Element a = 0; a < s.size(); ++a)
    for (suff::Element b = 0; b < s.size(); ++b) out[a][b] = s.leq(a, b);
  return out;
}

inline bool equals(const suff::ExtensionalRelation& r, const std::vector<std::vector<bool>>& t) {
  for (suff::ProfileIndex x = 0; x < r.size(); ++x)
    for (suff::ProfileIndex y = 0; y < r.size(); ++y)
      if (r.geq(x, y) != t[x][y]) return false;
  return true;
}

inline suff::ProfileIndex at(const suff::Domain& d, std::vector<suff::Element> coords) {
  return d.profiles().encode(coords);
}

inline suff::ProfileIndex at_ids(const suff::Domain& d, std::initializer_list<const char*> ids) {
  std::vector<suff::Element> coords;
  for (const char* id : ids) coords.push_back(d.space().index_of(id));
  return d.profiles().encode(coords);
}

}  // namespace testing
