#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suff/alloc.hpp"
#include "suff/relation.hpp"

namespace suff {

enum class Axiom {
  weak_order,
  symmetry,
  separability,
  sufficientarian_judgment,
  dual_sufficientarian_judgment,
  weak_sufficientarian_judgment,
  monotonicity,
  geq_complements,
  nondegeneracy,
  absolute_individual_improvement,
  prioritarian_threshold,
};

/// Short names used on the command line and in reports ("weak_order",
/// "sj", "dual_sj", "weak_sj", "aii", ...).
std::string_view axiom_name(Axiom axiom) noexcept;
std::optional<Axiom> axiom_from_name(std::string_view name);
std::vector<Axiom> all_axioms();

/// Enough of a violation to replay it with table lookups only. Which fields
/// are populated depends on the axiom; `clause` names the failing condition.
struct Witness {
  std::string clause;
  std::vector<ProfileIndex> profiles;
  std::vector<std::size_t> agents;
  std::vector<Element> elements;
  std::optional<AgentSet> coalition;
};

/// Prioritarian threshold is existential in beta; each grid value gets its
/// own status.
struct BetaStatus {
  Element beta;
  bool holds;
  std::optional<Witness> witness;
};

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  std::optional<Witness> witness;
  /// Size of the quantifier domain the axiom ranges over.
  std::uint64_t checked = 0;
  std::vector<BetaStatus> per_beta;
};

// Each checker scans its quantifiers in canonical order (ascending profile
// indices, agents, elements, coalitions by bitmask) and reports the first
// violation.

AxiomVerdict check_weak_order(const ExtensionalRelation& r);
AxiomVerdict check_symmetry(const ExtensionalRelation& r, const OrbitTable& orbits);
AxiomVerdict check_separability(const ExtensionalRelation& r, const ProfileSpace& profiles);
AxiomVerdict check_sufficientarian_judgment(const ExtensionalRelation& r, const ProfileSpace& profiles);
AxiomVerdict check_dual_sj(const ExtensionalRelation& r, const ProfileSpace& profiles);
AxiomVerdict check_weak_sj(const ExtensionalRelation& r, const ProfileSpace& profiles);
/// Needs an ordered space (KindMismatch otherwise).
AxiomVerdict check_monotonicity(const ExtensionalRelation& r, const Space& space, const ProfileSpace& profiles);
/// Needs meets (KindMismatch otherwise).
AxiomVerdict check_geq_complements(const ExtensionalRelation& r, const Space& space,
                                   const ProfileSpace& profiles);
AxiomVerdict check_nondegeneracy(const ExtensionalRelation& r);
/// Needs a numeric chain whose top value is exactly 1 (IncompatibleSpace otherwise).
AxiomVerdict check_absolute_individual_improvement(const ExtensionalRelation& r, const Space& space,
                                                   const ProfileSpace& profiles);
/// Scans every grid value strictly inside (0, 1); holds iff one of them works.
AxiomVerdict check_prioritarian_threshold(const ExtensionalRelation& r, const Space& space,
                                          const ProfileSpace& profiles);

/// Whether the axiom's structural preconditions hold on the domain.
bool applicable(Axiom axiom, const Domain& domain);
std::vector<Axiom> applicable_axioms(const Domain& domain);

AxiomVerdict check(Axiom axiom, const ExtensionalRelation& r, const Domain& domain);

/// Re-derives the violation from the witness using only relation lookups.
/// True iff the verdict is a failure and the witness reproduces it.
bool replay(const AxiomVerdict& verdict, const ExtensionalRelation& r, const Domain& domain);

}  // namespace suff
