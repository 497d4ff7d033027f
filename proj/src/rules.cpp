#include "suff/rules.hpp"

#include <algorithm>
#include <string>

#include "suff/error.hpp"

namespace suff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

void require_values(const Space& space, std::string_view rule) {
  require(space.has_values(), ErrorCode::IncompatibleSpace,
          std::string(rule) + " needs numeric values on space " + space.name());
}

void require_rank(std::span<const int> rank, std::size_t m, std::string_view rule) {
  require(rank.size() == m, ErrorCode::InvalidInput,
          std::string(rule) + " needs a rank for each of the " + std::to_string(m) + " elements");
}

template <class Score>
std::vector<Score> profile_scores(const ProfileSpace& profiles, auto&& score_of) {
  std::vector<Score> scores(profiles.size());
  Profile coords;
  for (ProfileIndex x = 0; x < profiles.size(); ++x) {
    coords = profiles.decode(x);
    scores[x] = score_of(coords);
  }
  return scores;
}

template <class Score>
ExtensionalRelation from_scores(const std::vector<Score>& scores) {
  const auto ranks = dense_ranks(std::span<const Score>(scores));
  return ExtensionalRelation::from_levels(std::span<const std::int32_t>(ranks));
}

ExtensionalRelation sufficientarian_relation(ElementSet s, const ProfileSpace& profiles) {
  const auto counts = sufficient_counts(s, profiles);
  return ExtensionalRelation::from_levels(std::span<const int>(counts));
}

ExtensionalRelation example2_relation(const Rational& tau, const Domain& domain) {
  const auto& space = domain.space();
  const auto& profiles = domain.profiles();
  const ProfileIndex size = profiles.size();
  std::vector<Rational> minimum(size);
  std::vector<int> count(size);
  std::vector<Rational> product(size);
  for (ProfileIndex x = 0; x < size; ++x) {
    Rational lo = space.value(profiles.coord(x, 0));
    Rational prod(1);
    int above = 0;
    for (std::size_t i = 0; i < profiles.agents(); ++i) {
      const Rational& v = space.value(profiles.coord(x, i));
      lo = std::min(lo, v);
      prod *= Rational(1) - v;
      if (v >= tau) ++above;
    }
    minimum[x] = lo;
    count[x] = above;
    product[x] = prod;
  }
  ExtensionalRelation r(size);
  for (ProfileIndex x = 0; x < size; ++x) {
    for (ProfileIndex y = 0; y < size; ++y) {
      const bool count_branch = std::min(minimum[x], minimum[y]) < tau;
      r.set(x, y, count_branch ? count[x] >= count[y] : product[x] <= product[y]);
    }
  }
  return r;
}

}  // namespace

std::string_view rule_type(const RankingRule& rule) {
  return std::visit(
      overloaded{
          [](const rules::Sufficientarian&) { return "sufficientarian"; },
          [](const rules::WeightedSufficientarian&) { return "weighted_sufficientarian"; },
          [](const rules::Dictatorship&) { return "dictatorship"; },
          [](const rules::ThresholdSufficientarian&) { return "threshold"; },
          [](const rules::GeneralizedThresholdSufficientarian&) { return "generalized_threshold"; },
          [](const rules::EndogenousLeximin&) { return "endogenous_leximin"; },
          [](const rules::Utilitarian&) { return "utilitarian"; },
          [](const rules::MinRule&) { return "min"; },
          [](const rules::PermEquiv&) { return "perm_equiv"; },
          [](const rules::Example1&) { return "example1"; },
          [](const rules::Example2&) { return "example2"; },
          [](const rules::Example3&) { return "example3"; },
          [](const rules::Explicit&) { return "explicit"; },
      },
      rule);
}

std::vector<int> sufficient_counts(ElementSet sufficient, const ProfileSpace& profiles) {
  std::vector<int> counts(profiles.size(), 0);
  for (ProfileIndex x = 0; x < profiles.size(); ++x) {
    for (std::size_t i = 0; i < profiles.agents(); ++i) {
      if (sufficient.contains(profiles.coord(x, i))) ++counts[x];
    }
  }
  return counts;
}

Rational example1_utility(std::span<const Rational> alpha, std::span<const Rational> values) {
  std::vector<Rational> d(values.begin(), values.end());
  std::sort(d.begin(), d.end(), std::greater<>{});
  Rational u = alpha[0] * d[0];
  for (std::size_t i = 1; i < d.size(); ++i) u = std::min(u, alpha[i] * d[i]);
  return u;
}

ExtensionalRelation endogenous_leximin_materialize(std::span<const int> rank, const ProfileSpace& profiles) {
  require_rank(rank, profiles.elements(), "endogenous leximin");
  // Ascending level vectors packed most-significant-first compare like leximin.
  const auto levels = dense_ranks(rank);
  const std::uint64_t base = static_cast<std::uint64_t>(profiles.elements());
  auto key = [&](const Profile& x) {
    std::vector<std::int32_t> sorted(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) sorted[i] = levels[x[i]];
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t k = 0;
    for (auto level : sorted) k = k * base + static_cast<std::uint64_t>(level);
    return k;
  };
  return from_scores(profile_scores<std::uint64_t>(profiles, key));
}

std::vector<std::vector<Profile>> example3_levels() {
  constexpr Element a = 0, b = 1, c = 2;
  return {
      {{c, c, c}}, {{b, c, c}}, {{b, b, c}}, {{a, c, c}}, {{b, b, b}},
      {{a, b, c}}, {{a, b, b}}, {{a, a, c}}, {{a, a, b}}, {{a, a, a}},
  };
}

ExtensionalRelation relation_from_level_chain(const std::vector<std::vector<Profile>>& levels,
                                              const Domain& domain) {
  const auto& profiles = domain.profiles();
  const auto& orbit_table = domain.orbit_table();
  std::vector<int> orbit_level(orbit_table.count(), -1);
  const int top = static_cast<int>(levels.size()) - 1;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (const auto& p : levels[k]) {
      const auto orbit = orbit_table.orbit_of(profiles.encode(p));
      require(orbit_level[orbit] < 0 || orbit_level[orbit] == top - static_cast<int>(k),
              ErrorCode::InvalidInput, "an orbit is listed on two different levels");
      orbit_level[orbit] = top - static_cast<int>(k);
    }
  }
  for (std::size_t o = 0; o < orbit_level.size(); ++o) {
    require(orbit_level[o] >= 0, ErrorCode::IncompleteTable,
            "level chain misses the orbit of profile index " +
                std::to_string(orbit_table.representative(static_cast<std::uint32_t>(o))));
  }
  std::vector<int> level(profiles.size());
  for (ProfileIndex x = 0; x < profiles.size(); ++x) level[x] = orbit_level[orbit_table.orbit_of(x)];
  return ExtensionalRelation::from_levels(std::span<const int>(level));
}

ExtensionalRelation materialize(const RankingRule& rule, const Domain& domain) {
  const auto& space = domain.space();
  const auto& profiles = domain.profiles();
  const std::size_t n = profiles.agents();
  const std::size_t m = space.size();

  return std::visit(
      overloaded{
          [&](const rules::Sufficientarian& r) {
            require(r.sufficient.subset_of(space.all()), ErrorCode::InvalidInput,
                    "sufficient set is not a subset of A");
            return sufficientarian_relation(r.sufficient, profiles);
          },
          [&](const rules::WeightedSufficientarian& r) {
            require(r.weights.size() == n, ErrorCode::IncompatibleSpace,
                    "weighted sufficientarian needs one weight per agent");
            for (const auto& w : r.weights) {
              require(w > 0, ErrorCode::InvalidInput, "weights must be strictly positive");
            }
            return from_scores(profile_scores<Rational>(profiles, [&](const Profile& x) {
              Rational total(0);
              for (std::size_t i = 0; i < n; ++i) {
                if (r.sufficient.contains(x[i])) total += r.weights[i];
              }
              return total;
            }));
          },
          [&](const rules::Dictatorship& r) {
            require(r.dictator < n, ErrorCode::InvalidInput, "dictator is not an agent");
            require_rank(r.rank, m, "dictatorship");
            return from_scores(
                profile_scores<int>(profiles, [&](const Profile& x) { return r.rank[x[r.dictator]]; }));
          },
          [&](const rules::ThresholdSufficientarian& r) {
            require(space.is_ordered(), ErrorCode::IncompatibleSpace,
                    "threshold rules need an ordered space");
            require(r.beta < m, ErrorCode::InvalidInput, "threshold is not an element");
            return sufficientarian_relation(space.up_set(r.beta), profiles);
          },
          [&](const rules::GeneralizedThresholdSufficientarian& r) {
            require(space.has_meets(), ErrorCode::IncompatibleSpace,
                    "generalized threshold rules need a meet-semilattice");
            require(is_filter(space, r.filter), ErrorCode::NotAFilter,
                    "generalized threshold set is not a filter");
            return sufficientarian_relation(r.filter, profiles);
          },
          [&](const rules::EndogenousLeximin& r) {
            return endogenous_leximin_materialize(r.rank, profiles);
          },
          [&](const rules::Utilitarian& r) {
            require(r.utility.size() == m, ErrorCode::InvalidInput,
                    "utilitarian needs a utility for every element");
            return from_scores(profile_scores<Rational>(profiles, [&](const Profile& x) {
              Rational total(0);
              for (Element e : x) total += r.utility[e];
              return total;
            }));
          },
          [&](const rules::MinRule&) {
            require_values(space, "min rule");
            return from_scores(profile_scores<Rational>(profiles, [&](const Profile& x) {
              Rational lo = space.value(x[0]);
              for (Element e : x) lo = std::min(lo, space.value(e));
              return lo;
            }));
          },
          [&](const rules::PermEquiv&) {
            const auto& orbit_table = domain.orbit_table();
            ExtensionalRelation out(profiles.size());
            for (ProfileIndex x = 0; x < profiles.size(); ++x) {
              for (ProfileIndex y : orbit_table.members(orbit_table.orbit_of(x))) out.set(x, y, true);
            }
            return out;
          },
          [&](const rules::Example1& r) {
            require_values(space, "example1");
            require(r.alpha.size() == n, ErrorCode::IncompatibleSpace,
                    "example1 needs one alpha per agent");
            for (std::size_t i = 0; i < n; ++i) {
              require(r.alpha[i] > 0, ErrorCode::InvalidInput, "alpha must be positive");
              require(i == 0 || r.alpha[i - 1] < r.alpha[i], ErrorCode::NonIncreasingAlpha,
                      "alpha must be strictly increasing");
            }
            return from_scores(profile_scores<Rational>(profiles, [&](const Profile& x) {
              std::vector<Rational> values;
              for (Element e : x) values.push_back(space.value(e));
              return example1_utility(r.alpha, values);
            }));
          },
          [&](const rules::Example2& r) {
            require_values(space, "example2");
            require(r.tau > 0 && r.tau < 1, ErrorCode::TauOutOfRange,
                    "tau must lie strictly between 0 and 1");
            return example2_relation(r.tau, domain);
          },
          [&](const rules::Example3&) {
            require(m == 3 && n == 3, ErrorCode::IncompatibleSpace,
                    "example3 is defined for three elements and three agents");
            return relation_from_level_chain(example3_levels(), domain);
          },
          [&](const rules::Explicit& r) {
            require(r.relation.size() == profiles.size(), ErrorCode::IncompatibleSpace,
                    "explicit relation has the wrong number of profiles");
            return r.relation;
          },
      },
      rule);
}

}  // namespace suff
