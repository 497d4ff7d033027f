#include "suff/characterize.hpp"

#include <algorithm>

#include "suff/rules.hpp"

namespace suff {

int StarOrder::level_count() const {
  if (levels.empty()) return 0;
  return *std::max_element(levels.begin(), levels.end()) + 1;
}

StarOrder derive_star_order(const ExtensionalRelation& r, const Domain& domain) {
  const auto& p = domain.profiles();
  const std::size_t m = p.elements();
  const ProfileIndex base = p.constant(0);
  auto geq_star = [&](Element a, Element b) { return r.geq(p.substitute(base, 0, a), p.substitute(base, 0, b)); };

  StarOrder out;
  for (Element a = 0; a < m; ++a) {
    for (Element b = a; b < m; ++b) {
      if (!geq_star(a, b) && !geq_star(b, a)) {
        out.witness = Witness{"not_weak_order", {}, {0}, {a, b}, {}};
        return out;
      }
    }
  }
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (!geq_star(a, b)) continue;
      for (Element c = 0; c < m; ++c) {
        if (geq_star(b, c) && !geq_star(a, c)) {
          out.witness = Witness{"not_weak_order", {}, {0}, {a, b, c}, {}};
          return out;
        }
      }
    }
  }

  std::vector<int> lower(m, 0);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) lower[a] += geq_star(a, b) ? 1 : 0;
  }
  const auto dense = dense_ranks(std::span<const int>(lower));
  out.levels.assign(dense.begin(), dense.end());

  for (std::size_t i = 0; i < p.agents(); ++i) {
    for (ProfileIndex y = 0; y < p.size(); ++y) {
      if (p.coord(y, i) != 0) continue;  // the context ignores coordinate i
      for (Element a = 0; a < m; ++a) {
        const ProfileIndex ay = p.substitute(y, i, a);
        for (Element b = 0; b < m; ++b) {
          const ProfileIndex by = p.substitute(y, i, b);
          if (r.geq(ay, by) != (out.levels[a] >= out.levels[b])) {
            out.witness = Witness{"context_disagreement", {ay, by}, {i}, {a, b}, {}};
            return out;
          }
        }
      }
    }
  }
  out.well_defined = true;
  return out;
}

SufficientSet extract_sufficient_set(const ExtensionalRelation& r, const Domain& domain) {
  SufficientSet out;
  out.star = derive_star_order(r, domain);
  if (!out.star.well_defined) {
    out.reason = "star_order_undefined";
    return out;
  }
  const int levels = out.star.level_count();
  if (levels > 2) {
    out.reason = "too_many_levels";
    return out;
  }
  if (levels == 2) {
    for (Element a = 0; a < domain.space().size(); ++a) {
      if (out.star.levels[a] == 1) out.set.insert(a);
    }
  }
  const auto rebuilt = materialize(rules::Sufficientarian{out.set}, domain);
  out.mismatch = first_difference(rebuilt, r);
  if (out.mismatch) {
    out.reason = "table_mismatch";
    return out;
  }
  out.sufficientarian = true;
  return out;
}

Classification classify(const ExtensionalRelation& r, const Domain& domain) {
  const Space& space = domain.space();
  Classification out;
  out.sufficient = extract_sufficient_set(r, domain);
  const SufficientSet& s = out.sufficient;
  out.total_indifference = s.sufficientarian && s.star.level_count() == 1;

  if (s.sufficientarian) {
    // Total indifference is induced by S = {} and by S = A alike.
    std::vector<ElementSet> candidates{s.set};
    if (out.total_indifference) candidates.push_back(space.all());

    if (space.is_ordered()) {
      out.monotone_sufficientarian = space.is_upward_closed(s.set);
    }
    if (space.has_meets()) {
      for (ElementSet c : candidates) {
        if (is_filter(space, c)) {
          out.generalized_threshold = true;
          out.filter = c;
          break;
        }
      }
    }
    if (space.is_ordered()) {
      for (ElementSet c : candidates) {
        for (Element b = 0; b < space.size() && !out.beta; ++b) {
          if (space.up_set(b) == c) out.beta = b;
        }
        if (out.beta) break;
      }
      out.threshold = out.beta.has_value();
    }
  }

  if (s.star.well_defined) {
    const auto rebuilt = endogenous_leximin_materialize(s.star.levels, domain.profiles());
    out.leximin_mismatch = first_difference(rebuilt, r);
    out.endogenous_leximin = !out.leximin_mismatch;
  }
  return out;
}

}  // namespace suff
