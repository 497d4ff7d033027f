#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "suff/alloc.hpp"
#include "suff/relation.hpp"

namespace suff {

// Intensional descriptions of every ranking rule the toolkit knows about.
// Ranks over A are integer levels, higher is better.
namespace rules {

/// x >= y iff #{i : x_i in S} >= #{i : y_i in S}.
struct Sufficientarian {
  ElementSet sufficient;
};

/// Agent-weighted count; weights strictly positive, one per agent.
struct WeightedSufficientarian {
  ElementSet sufficient;
  std::vector<Rational> weights;
};

/// x >= y iff x_i >= y_i for the fixed dictator i under a weak order on A.
struct Dictatorship {
  std::size_t dictator = 0;
  std::vector<int> rank;
};

/// Sufficient set is the up-set of beta.
struct ThresholdSufficientarian {
  Element beta = 0;
};

/// Sufficient set is a filter of a meet-semilattice.
struct GeneralizedThresholdSufficientarian {
  ElementSet filter;
};

/// Leximin over the agents' levels under a weak order on A.
struct EndogenousLeximin {
  std::vector<int> rank;
};

/// Sum of per-element utilities.
struct Utilitarian {
  std::vector<Rational> utility;
};

/// Compare the minimum value (numeric spaces).
struct MinRule {};

/// x >= y iff y is a coordinate permutation of x.
struct PermEquiv {};

/// U(x) = min_i alpha_i d(x)_i with d(x) the non-increasing rearrangement.
struct Example1 {
  std::vector<Rational> alpha;
};

/// Threshold count at tau unless every coordinate of both profiles is >= tau,
/// in which case compare products of (1 - x_i), smaller is better.
struct Example2 {
  Rational tau;
};

/// The fixed 3-agent, 3-element chain that satisfies the leximin axioms
/// without being endogenous leximin.
struct Example3 {};

/// A relation given as data.
struct Explicit {
  ExtensionalRelation relation;
};

}  // namespace rules

using RankingRule =
    std::variant<rules::Sufficientarian, rules::WeightedSufficientarian, rules::Dictatorship,
                 rules::ThresholdSufficientarian, rules::GeneralizedThresholdSufficientarian,
                 rules::EndogenousLeximin, rules::Utilitarian, rules::MinRule, rules::PermEquiv,
                 rules::Example1, rules::Example2, rules::Example3, rules::Explicit>;

std::string_view rule_type(const RankingRule& rule);

/// Builds the full comparison table. Errors: IncompatibleSpace,
/// NonIncreasingAlpha, TauOutOfRange, NotAFilter, InvalidInput.
ExtensionalRelation materialize(const RankingRule& rule, const Domain& domain);

/// Leximin over per-element levels. Throws Error(InvalidInput) when the rank
/// map does not cover A.
ExtensionalRelation endogenous_leximin_materialize(std::span<const int> rank, const ProfileSpace& profiles);

/// Per-agent count of members of S; the score behind every sufficientarian rule.
std::vector<int> sufficient_counts(ElementSet sufficient, const ProfileSpace& profiles);

/// Utility of the example1 rule, exposed for tests and reports.
Rational example1_utility(std::span<const Rational> alpha, std::span<const Rational> values);

/// Levels listed best to worst; every orbit of A^N must appear exactly once
/// (any member may stand for its orbit). Errors: IncompleteTable, InvalidInput.
ExtensionalRelation relation_from_level_chain(const std::vector<std::vector<Profile>>& levels,
                                              const Domain& domain);

/// The example3 chain over element indices a=0, b=1, c=2, best to worst.
std::vector<std::vector<Profile>> example3_levels();

}  // namespace suff
