#include "suff/relation.hpp"

#include "suff/error.hpp"

namespace suff {

std::optional<std::pair<ProfileIndex, ProfileIndex>> first_difference(const ExtensionalRelation& lhs,
                                                                       const ExtensionalRelation& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorCode::LengthMismatch, "relations over different profile spaces");
  }
  for (ProfileIndex x = 0; x < lhs.size(); ++x) {
    for (ProfileIndex y = 0; y < lhs.size(); ++y) {
      if (lhs.geq(x, y) != rhs.geq(x, y)) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

Comparison leximin_compare(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::LengthMismatch, "leximin needs vectors of equal length");
  }
  std::vector<Rational> su(u.begin(), u.end());
  std::vector<Rational> sv(v.begin(), v.end());
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  for (std::size_t k = 0; k < su.size(); ++k) {
    if (su[k] > sv[k]) return Comparison::better;
    if (su[k] < sv[k]) return Comparison::worse;
  }
  return Comparison::equal;
}

}  // namespace suff
