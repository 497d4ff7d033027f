#include "suff/axioms.hpp"

#include <algorithm>
#include <array>

#include "suff/error.hpp"

namespace suff {

namespace {

constexpr std::array kAxiomNames{
    std::pair{Axiom::weak_order, "weak_order"},
    std::pair{Axiom::symmetry, "symmetry"},
    std::pair{Axiom::separability, "separability"},
    std::pair{Axiom::sufficientarian_judgment, "sj"},
    std::pair{Axiom::dual_sufficientarian_judgment, "dual_sj"},
    std::pair{Axiom::weak_sufficientarian_judgment, "weak_sj"},
    std::pair{Axiom::monotonicity, "monotonicity"},
    std::pair{Axiom::geq_complements, "geq_complements"},
    std::pair{Axiom::nondegeneracy, "nondegeneracy"},
    std::pair{Axiom::absolute_individual_improvement, "aii"},
    std::pair{Axiom::prioritarian_threshold, "prioritarian_threshold"},
};

AxiomVerdict fail(AxiomVerdict v, Witness w) {
  v.holds = false;
  v.witness = std::move(w);
  return v;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

bool dominates(const Space& space, const ProfileSpace& profiles, ProfileIndex x, ProfileIndex y) {
  for (std::size_t i = 0; i < profiles.agents(); ++i) {
    if (!space.leq(profiles.coord(y, i), profiles.coord(x, i))) return false;
  }
  return true;
}

enum class JudgmentKind { strong, dual, weak };

// Shared scan for the three sufficientarian-judgment variants.
AxiomVerdict check_judgment(const ExtensionalRelation& r, const ProfileSpace& profiles, JudgmentKind kind,
                            Axiom axiom) {
  const std::size_t m = profiles.elements();
  const std::size_t n = profiles.agents();
  AxiomVerdict v{axiom};
  v.checked = ipow(m, 3) * n * (n - 1);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      const ProfileIndex bb = profiles.constant(b);
      for (std::size_t i = 0; i < n; ++i) {
        const ProfileIndex aib = profiles.substitute(bb, i, a);
        const bool antecedent = kind == JudgmentKind::dual ? r.strict(aib, bb) : r.strict(bb, aib);
        if (!antecedent) continue;
        for (Element c = 0; c < m; ++c) {
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const ProfileIndex cj = profiles.substitute(aib, j, c);
            bool ok = false;
            switch (kind) {
              case JudgmentKind::strong: ok = r.geq(aib, cj); break;
              case JudgmentKind::dual: ok = r.geq(cj, aib); break;
              case JudgmentKind::weak: ok = r.strict(bb, cj); break;
            }
            if (!ok) {
              return fail(v, Witness{"consequent", {bb, aib, cj}, {i, j}, {a, b, c}, std::nullopt});
            }
          }
        }
      }
    }
  }
  return v;
}

}  // namespace

std::string_view axiom_name(Axiom axiom) noexcept {
  for (const auto& [a, name] : kAxiomNames) {
    if (a == axiom) return name;
  }
  return "unknown";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
  for (const auto& [a, n] : kAxiomNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::vector<Axiom> all_axioms() {
  std::vector<Axiom> out;
  for (const auto& entry : kAxiomNames) out.push_back(entry.first);
  return out;
}

AxiomVerdict check_weak_order(const ExtensionalRelation& r) {
  const ProfileIndex size = r.size();
  AxiomVerdict v{Axiom::weak_order};
  v.checked = ipow(size, 2) + ipow(size, 3);
  for (ProfileIndex x = 0; x < size; ++x) {
    for (ProfileIndex y = x; y < size; ++y) {
      if (!r.geq(x, y) && !r.geq(y, x)) return fail(v, Witness{"completeness", {x, y}, {}, {}, {}});
    }
  }
  // A complete relation is transitive iff it is represented by the size of
  // its lower contour sets, which is an O(size^2) test.
  std::vector<ProfileIndex> lower(size, 0);
  for (ProfileIndex x = 0; x < size; ++x) {
    for (ProfileIndex y = 0; y < size; ++y) lower[x] += r.geq(x, y) ? 1 : 0;
  }
  bool represented = true;
  for (ProfileIndex x = 0; x < size && represented; ++x) {
    for (ProfileIndex y = 0; y < size; ++y) {
      if (r.geq(x, y) != (lower[x] >= lower[y])) {
        represented = false;
        break;
      }
    }
  }
  if (represented) return v;
  for (ProfileIndex x = 0; x < size; ++x) {
    for (ProfileIndex y = 0; y < size; ++y) {
      if (!r.geq(x, y)) continue;
      for (ProfileIndex z = 0; z < size; ++z) {
        if (r.geq(y, z) && !r.geq(x, z)) return fail(v, Witness{"transitivity", {x, y, z}, {}, {}, {}});
      }
    }
  }
  throw Error(ErrorCode::InvalidInput, "weak order check reached an inconsistent state");
}

AxiomVerdict check_symmetry(const ExtensionalRelation& r, const OrbitTable& orbits) {
  AxiomVerdict v{Axiom::symmetry};
  for (std::uint32_t o = 0; o < orbits.count(); ++o) v.checked += ipow(orbits.members(o).size(), 2);
  for (ProfileIndex x = 0; x < r.size(); ++x) {
    for (ProfileIndex y : orbits.members(orbits.orbit_of(x))) {
      if (!r.indiff(x, y)) return fail(v, Witness{"permutation", {x, y}, {}, {}, {}});
    }
  }
  return v;
}

AxiomVerdict check_separability(const ExtensionalRelation& r, const ProfileSpace& profiles) {
  const std::size_t n = profiles.agents();
  AxiomVerdict v{Axiom::separability};
  v.checked = (std::uint64_t{1} << n) * ipow(profiles.size(), 2);
  std::vector<ProfileIndex> inside;
  std::vector<ProfileIndex> outside;
  for (AgentSet coalition = 0; coalition <= profiles.all_agents(); ++coalition) {
    // Split A^N into the coalition part and the context part; both lists ascend.
    inside.clear();
    outside.clear();
    for (ProfileIndex x = 0; x < profiles.size(); ++x) {
      bool zero_in = true;
      bool zero_out = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (profiles.coord(x, i) == 0) continue;
        ((coalition >> i) & 1U ? zero_in : zero_out) = false;
      }
      if (zero_out) inside.push_back(x);
      if (zero_in) outside.push_back(x);
    }
    // The comparison must not depend on the context. Testing every context
    // against the first one finds the lexicographically first failing pair.
    const ProfileIndex first = outside.front();
    for (ProfileIndex xm : inside) {
      for (ProfileIndex xm2 : inside) {
        const bool reference = r.geq(xm + first, xm2 + first);
        for (std::size_t k = 1; k < outside.size(); ++k) {
          const ProfileIndex y = outside[k];
          if (r.geq(xm + y, xm2 + y) != reference) {
            return fail(v, Witness{"context", {xm + first, xm2 + first, xm + y, xm2 + y}, {}, {}, coalition});
          }
        }
      }
    }
  }
  return v;
}

AxiomVerdict check_sufficientarian_judgment(const ExtensionalRelation& r, const ProfileSpace& profiles) {
  return check_judgment(r, profiles, JudgmentKind::strong, Axiom::sufficientarian_judgment);
}

AxiomVerdict check_dual_sj(const ExtensionalRelation& r, const ProfileSpace& profiles) {
  return check_judgment(r, profiles, JudgmentKind::dual, Axiom::dual_sufficientarian_judgment);
}

AxiomVerdict check_weak_sj(const ExtensionalRelation& r, const ProfileSpace& profiles) {
  return check_judgment(r, profiles, JudgmentKind::weak, Axiom::weak_sufficientarian_judgment);
}

AxiomVerdict check_monotonicity(const ExtensionalRelation& r, const Space& space, const ProfileSpace& profiles) {
  if (!space.is_ordered()) {
    throw Error(ErrorCode::KindMismatch, "monotonicity needs an ordered space");
  }
  AxiomVerdict v{Axiom::monotonicity};
  std::uint64_t comparable = 0;
  for (Element a = 0; a < space.size(); ++a) {
    for (Element b = 0; b < space.size(); ++b) comparable += space.leq(b, a) ? 1 : 0;
  }
  v.checked = ipow(comparable, profiles.agents());
  for (ProfileIndex x = 0; x < r.size(); ++x) {
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      if (!r.geq(x, y) && dominates(space, profiles, x, y)) {
        return fail(v, Witness{"dominance", {x, y}, {}, {}, {}});
      }
    }
  }
  return v;
}

AxiomVerdict check_geq_complements(const ExtensionalRelation& r, const Space& space,
                                   const ProfileSpace& profiles) {
  if (!space.has_meets()) {
    throw Error(ErrorCode::KindMismatch, ">=-complements needs a meet-semilattice");
  }
  const std::size_t m = space.size();
  AxiomVerdict v{Axiom::geq_complements};
  v.checked = ipow(m, 3) * profiles.agents();
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      const Element ab = space.meet(a, b);
      for (Element c = 0; c < m; ++c) {
        const ProfileIndex cc = profiles.constant(c);
        for (std::size_t i = 0; i < profiles.agents(); ++i) {
          const ProfileIndex aic = profiles.substitute(cc, i, a);
          const ProfileIndex meet_ic = profiles.substitute(cc, i, ab);
          const ProfileIndex bic = profiles.substitute(cc, i, b);
          if (r.strict(aic, meet_ic) && !r.strict(aic, bic)) {
            return fail(v, Witness{"consequent", {aic, meet_ic, bic}, {i}, {a, b, c, ab}, {}});
          }
        }
      }
    }
  }
  return v;
}

AxiomVerdict check_nondegeneracy(const ExtensionalRelation& r) {
  AxiomVerdict v{Axiom::nondegeneracy};
  v.checked = ipow(r.size(), 2);
  for (ProfileIndex x = 0; x < r.size(); ++x) {
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      if (r.strict(x, y)) return v;
    }
  }
  return fail(v, Witness{"no_strict_pair", {}, {}, {}, {}});
}

namespace {

std::optional<Element> top_value_one(const Space& space) {
  if (!space.is_numeric_chain()) return std::nullopt;
  Element top = 0;
  for (Element e = 1; e < space.size(); ++e) {
    if (space.value(e) > space.value(top)) top = e;
  }
  if (space.value(top) != Rational(1)) return std::nullopt;
  return top;
}

std::vector<Element> interior_grid(const Space& space) {
  std::vector<Element> out;
  for (Element e = 0; e < space.size(); ++e) {
    if (space.value(e) > 0 && space.value(e) < 1) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&](Element a, Element b) { return space.value(a) < space.value(b); });
  return out;
}

}  // namespace

AxiomVerdict check_absolute_individual_improvement(const ExtensionalRelation& r, const Space& space,
                                                   const ProfileSpace& profiles) {
  const auto top = top_value_one(space);
  if (!top) {
    throw Error(ErrorCode::IncompatibleSpace,
                "absolute individual improvement needs a numeric chain with top value 1");
  }
  const std::size_t m = space.size();
  const std::size_t n = profiles.agents();
  AxiomVerdict v{Axiom::absolute_individual_improvement};
  v.checked = ipow(r.size(), 2) * n * m;
  for (ProfileIndex x = 0; x < r.size(); ++x) {
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      if (!r.strict(x, y)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (space.value(profiles.coord(x, i)) >= 1) continue;
        const ProfileIndex raised = profiles.substitute(x, i, *top);
        for (Element b = 0; b < m; ++b) {
          const ProfileIndex other = profiles.substitute(y, i, b);
          if (!r.geq(raised, other)) {
            return fail(v, Witness{"consequent", {x, y, raised, other}, {i}, {b}, {}});
          }
        }
      }
    }
  }
  return v;
}

AxiomVerdict check_prioritarian_threshold(const ExtensionalRelation& r, const Space& space,
                                          const ProfileSpace& profiles) {
  if (!space.is_numeric_chain()) {
    throw Error(ErrorCode::IncompatibleSpace, "prioritarian threshold needs a numeric chain");
  }
  const std::size_t n = profiles.agents();
  const auto betas = interior_grid(space);
  AxiomVerdict v{Axiom::prioritarian_threshold};
  v.checked = betas.size() * static_cast<std::uint64_t>(r.size());
  v.holds = false;
  for (Element beta : betas) {
    const ProfileIndex level = profiles.constant(beta);
    BetaStatus status{beta, true, std::nullopt};
    for (ProfileIndex x = 0; x < r.size() && status.holds; ++x) {
      for (std::size_t i = 0; i < n; ++i) {
        if (space.value(profiles.coord(x, i)) >= space.value(beta)) continue;
        // All agents other than i hold the same element.
        std::optional<Element> rest;
        bool equal_rest = true;
        for (std::size_t j = 0; j < n && equal_rest; ++j) {
          if (j == i) continue;
          if (rest && *rest != profiles.coord(x, j)) equal_rest = false;
          rest = profiles.coord(x, j);
        }
        if (!equal_rest) continue;
        if (!r.strict(level, x)) {
          status.holds = false;
          status.witness = Witness{"beta_not_strictly_better", {level, x}, {i}, {beta}, {}};
        }
        break;
      }
    }
    v.holds = v.holds || status.holds;
    v.per_beta.push_back(std::move(status));
  }
  if (!v.holds) v.witness = Witness{"every_beta_fails", {}, {}, betas, {}};
  return v;
}

bool applicable(Axiom axiom, const Domain& domain) {
  const Space& space = domain.space();
  switch (axiom) {
    case Axiom::monotonicity: return space.is_ordered();
    case Axiom::geq_complements: return space.has_meets();
    case Axiom::absolute_individual_improvement: return top_value_one(space).has_value();
    case Axiom::prioritarian_threshold: return space.is_numeric_chain() && !interior_grid(space).empty();
    default: return true;
  }
}

std::vector<Axiom> applicable_axioms(const Domain& domain) {
  std::vector<Axiom> out;
  for (Axiom a : all_axioms()) {
    if (applicable(a, domain)) out.push_back(a);
  }
  return out;
}

AxiomVerdict check(Axiom axiom, const ExtensionalRelation& r, const Domain& domain) {
  const auto& profiles = domain.profiles();
  switch (axiom) {
    case Axiom::weak_order: return check_weak_order(r);
    case Axiom::symmetry: return check_symmetry(r, domain.orbit_table());
    case Axiom::separability: return check_separability(r, profiles);
    case Axiom::sufficientarian_judgment: return check_sufficientarian_judgment(r, profiles);
    case Axiom::dual_sufficientarian_judgment: return check_dual_sj(r, profiles);
    case Axiom::weak_sufficientarian_judgment: return check_weak_sj(r, profiles);
    case Axiom::monotonicity: return check_monotonicity(r, domain.space(), profiles);
    case Axiom::geq_complements: return check_geq_complements(r, domain.space(), profiles);
    case Axiom::nondegeneracy: return check_nondegeneracy(r);
    case Axiom::absolute_individual_improvement:
      return check_absolute_individual_improvement(r, domain.space(), profiles);
    case Axiom::prioritarian_threshold: return check_prioritarian_threshold(r, domain.space(), profiles);
  }
  throw Error(ErrorCode::InvalidInput, "unknown axiom");
}

}  // namespace suff
