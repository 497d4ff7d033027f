#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "suff/alloc.hpp"
#include "suff/axioms.hpp"
#include "suff/relation.hpp"

namespace suff {

/// Order on A read off single-coordinate substitutions: a >=* b iff
/// a_i y >= b_i y. Levels are dense, higher is better.
struct StarOrder {
  std::vector<int> levels;
  bool well_defined = false;
  /// "not_weak_order" (elements a, b[, c]) or "context_disagreement"
  /// (profiles a_i y, b_i y; agent i; elements a, b).
  std::optional<Witness> witness;

  int level_count() const;
};

/// Candidate from agent 0 against the constant context of element 0, then
/// validated for every agent and every context.
StarOrder derive_star_order(const ExtensionalRelation& r, const Domain& domain);

struct SufficientSet {
  bool sufficientarian = false;
  ElementSet set;  // top star level; empty for total indifference
  StarOrder star;
  /// Empty when sufficientarian, else "star_order_undefined",
  /// "too_many_levels" or "table_mismatch".
  std::string reason;
  std::optional<std::pair<ProfileIndex, ProfileIndex>> mismatch;
};

/// Certification is by table equality with the sufficientarian relation of
/// the extracted set.
SufficientSet extract_sufficient_set(const ExtensionalRelation& r, const Domain& domain);

struct Classification {
  bool total_indifference = false;
  SufficientSet sufficient;
  bool monotone_sufficientarian = false;
  bool generalized_threshold = false;
  std::optional<ElementSet> filter;
  bool threshold = false;
  std::optional<Element> beta;
  bool endogenous_leximin = false;
  /// First cell where the leximin rebuild from >=* differs from the relation.
  std::optional<std::pair<ProfileIndex, ProfileIndex>> leximin_mismatch;

  bool is_sufficientarian() const { return sufficient.sufficientarian; }
};

/// Flags that need structure (monotone, filters, thresholds) stay false on
/// spaces without it.
Classification classify(const ExtensionalRelation& r, const Domain& domain);

}  // namespace suff
