// Witness replay. Deliberately rebuilds every profile from the witness'
// elements and agents instead of trusting the stored indices, so a replay
// failure points at the checker rather than at the relation.

#include <algorithm>

#include "suff/axioms.hpp"

namespace suff {

namespace {

bool is_permutation_of(const ProfileSpace& profiles, ProfileIndex x, ProfileIndex y) {
  Profile a = profiles.decode(x);
  Profile b = profiles.decode(y);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool agree_on(const ProfileSpace& profiles, ProfileIndex x, ProfileIndex y, AgentSet agents) {
  for (std::size_t i = 0; i < profiles.agents(); ++i) {
    if (((agents >> i) & 1U) && profiles.coord(x, i) != profiles.coord(y, i)) return false;
  }
  return true;
}

bool in_range(const Witness& w, std::size_t profiles, std::size_t agents, std::size_t elements) {
  return w.profiles.size() >= profiles && w.agents.size() >= agents && w.elements.size() >= elements;
}

bool replay_judgment(const Axiom axiom, const Witness& w, const ExtensionalRelation& r,
                     const ProfileSpace& p) {
  if (!in_range(w, 0, 2, 3)) return false;
  const auto [i, j] = std::pair{w.agents[0], w.agents[1]};
  if (i == j || i >= p.agents() || j >= p.agents()) return false;
  const Element a = w.elements[0], b = w.elements[1], c = w.elements[2];
  const ProfileIndex bb = p.constant(b);
  const ProfileIndex aib = p.substitute(bb, i, a);
  const ProfileIndex cj = p.substitute(aib, j, c);
  switch (axiom) {
    case Axiom::sufficientarian_judgment: return r.strict(bb, aib) && !r.geq(aib, cj);
    case Axiom::dual_sufficientarian_judgment: return r.strict(aib, bb) && !r.geq(cj, aib);
    case Axiom::weak_sufficientarian_judgment: return r.strict(bb, aib) && !r.strict(bb, cj);
    default: return false;
  }
}

}  // namespace

bool replay(const AxiomVerdict& verdict, const ExtensionalRelation& r, const Domain& domain) {
  if (verdict.holds || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  const auto& p = domain.profiles();
  const auto& space = domain.space();
  for (ProfileIndex x : w.profiles) {
    if (x >= r.size()) return false;
  }

  switch (verdict.axiom) {
    case Axiom::weak_order:
      if (w.clause == "completeness" && w.profiles.size() == 2) {
        return !r.geq(w.profiles[0], w.profiles[1]) && !r.geq(w.profiles[1], w.profiles[0]);
      }
      if (w.clause == "transitivity" && w.profiles.size() == 3) {
        const auto x = w.profiles[0], y = w.profiles[1], z = w.profiles[2];
        return r.geq(x, y) && r.geq(y, z) && !r.geq(x, z);
      }
      return false;

    case Axiom::symmetry:
      return in_range(w, 2, 0, 0) && is_permutation_of(p, w.profiles[0], w.profiles[1]) &&
             !r.indiff(w.profiles[0], w.profiles[1]);

    case Axiom::separability: {
      if (!in_range(w, 4, 0, 0) || !w.coalition) return false;
      const AgentSet in = *w.coalition;
      const AgentSet out = p.all_agents() & ~in;
      const auto p1 = w.profiles[0], p2 = w.profiles[1], p3 = w.profiles[2], p4 = w.profiles[3];
      const bool shape = agree_on(p, p1, p2, out) && agree_on(p, p3, p4, out) && agree_on(p, p1, p3, in) &&
                         agree_on(p, p2, p4, in);
      return shape && r.geq(p1, p2) != r.geq(p3, p4);
    }

    case Axiom::sufficientarian_judgment:
    case Axiom::dual_sufficientarian_judgment:
    case Axiom::weak_sufficientarian_judgment:
      return replay_judgment(verdict.axiom, w, r, p);

    case Axiom::monotonicity: {
      if (!in_range(w, 2, 0, 0)) return false;
      const auto x = w.profiles[0], y = w.profiles[1];
      for (std::size_t i = 0; i < p.agents(); ++i) {
        if (!space.leq(p.coord(y, i), p.coord(x, i))) return false;
      }
      return !r.geq(x, y);
    }

    case Axiom::geq_complements: {
      if (!in_range(w, 0, 1, 3) || !space.has_meets()) return false;
      const std::size_t i = w.agents[0];
      const Element a = w.elements[0], b = w.elements[1], c = w.elements[2];
      const ProfileIndex cc = p.constant(c);
      const ProfileIndex aic = p.substitute(cc, i, a);
      return r.strict(aic, p.substitute(cc, i, space.meet(a, b))) && !r.strict(aic, p.substitute(cc, i, b));
    }

    case Axiom::nondegeneracy:
      for (ProfileIndex x = 0; x < r.size(); ++x) {
        for (ProfileIndex y = 0; y < r.size(); ++y) {
          if (r.strict(x, y)) return false;
        }
      }
      return true;

    case Axiom::absolute_individual_improvement: {
      if (!in_range(w, 2, 1, 1)) return false;
      const auto x = w.profiles[0], y = w.profiles[1];
      const std::size_t i = w.agents[0];
      std::optional<Element> top;
      for (Element e = 0; e < space.size(); ++e) {
        if (space.value(e) == Rational(1)) top = e;
      }
      if (!top || !r.strict(x, y) || space.value(p.coord(x, i)) >= 1) return false;
      return !r.geq(p.substitute(x, i, *top), p.substitute(y, i, w.elements[0]));
    }

    case Axiom::prioritarian_threshold: {
      std::size_t interior = 0;
      for (Element e = 0; e < space.size(); ++e) {
        if (space.value(e) > 0 && space.value(e) < 1) ++interior;
      }
      if (verdict.per_beta.size() != interior) return false;
      for (const auto& status : verdict.per_beta) {
        if (status.holds || !status.witness || !in_range(*status.witness, 2, 1, 0)) return false;
        const ProfileIndex x = status.witness->profiles[1];
        const std::size_t i = status.witness->agents[0];
        if (status.witness->profiles[0] != p.constant(status.beta)) return false;
        if (space.value(p.coord(x, i)) >= space.value(status.beta)) return false;
        for (std::size_t j = 0; j < p.agents(); ++j) {
          for (std::size_t k = 0; k < p.agents(); ++k) {
            if (j != i && k != i && p.coord(x, j) != p.coord(x, k)) return false;
          }
        }
        if (r.strict(p.constant(status.beta), x)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace suff
