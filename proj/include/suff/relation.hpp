#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "suff/alloc.hpp"
#include "suff/rational.hpp"

namespace suff {

/// Complete boolean comparison table over A^N: geq(x, y) means x is weakly
/// preferred to y. Nothing about the table is assumed; the axiom checkers
/// decide whether it is complete, transitive and so on.
class ExtensionalRelation {
 public:
  ExtensionalRelation() = default;
  explicit ExtensionalRelation(ProfileIndex size, bool fill = false)
      : size_(size), cells_(static_cast<std::size_t>(size) * size, fill ? 1 : 0) {}

  /// x >= y iff level[x] >= level[y]; higher level is better.
  template <class Level>
  static ExtensionalRelation from_levels(std::span<const Level> levels) {
    ExtensionalRelation r;
    r.assign_levels(levels);
    return r;
  }

  /// Refills the table in place, reusing storage.
  template <class Level>
  void assign_levels(std::span<const Level> levels) {
    const auto size = static_cast<ProfileIndex>(levels.size());
    if (size != size_) {
      size_ = size;
      cells_.assign(static_cast<std::size_t>(size) * size, 0);
    }
    std::uint8_t* row = cells_.data();
    for (ProfileIndex x = 0; x < size; ++x, row += size) {
      const Level lx = levels[x];
      for (ProfileIndex y = 0; y < size; ++y) row[y] = lx >= levels[y] ? 1 : 0;
    }
  }

  ProfileIndex size() const { return size_; }

  bool geq(ProfileIndex x, ProfileIndex y) const {
    return cells_[static_cast<std::size_t>(x) * size_ + y] != 0;
  }
  bool strict(ProfileIndex x, ProfileIndex y) const { return geq(x, y) && !geq(y, x); }
  bool indiff(ProfileIndex x, ProfileIndex y) const { return geq(x, y) && geq(y, x); }

  void set(ProfileIndex x, ProfileIndex y, bool value) {
    cells_[static_cast<std::size_t>(x) * size_ + y] = value ? 1 : 0;
  }

  friend bool operator==(const ExtensionalRelation&, const ExtensionalRelation&) = default;

 private:
  ProfileIndex size_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// First cell (row-major) where the two tables differ.
std::optional<std::pair<ProfileIndex, ProfileIndex>> first_difference(const ExtensionalRelation& lhs,
                                                                       const ExtensionalRelation& rhs);

/// Dense ranks 0..L-1 of arbitrary ordered keys (higher key, higher rank).
template <class Key>
std::vector<std::int32_t> dense_ranks(std::span<const Key> keys);

enum class Comparison { worse = -1, equal = 0, better = 1 };

/// Leximin: compares the ascending rearrangements lexicographically.
/// Throws Error(LengthMismatch).
Comparison leximin_compare(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace suff

#include <algorithm>

namespace suff {

template <class Key>
std::vector<std::int32_t> dense_ranks(std::span<const Key> keys) {
  std::vector<Key> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int32_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = static_cast<std::int32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                       sorted.begin());
  }
  return out;
}

}  // namespace suff
