#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suff/axioms.hpp"
#include "suff/characterize.hpp"
#include "suff/enumerate.hpp"
#include "suff/io.hpp"

namespace suff {

/// The four axioms of the sufficientarian characterization.
std::vector<Axiom> theorem1_axioms();
/// Same with weak SJ in place of SJ (the two-agent leximin characterization).
std::vector<Axiom> leximin_axioms();

struct ForwardReport {
  std::string space;
  std::size_t agents = 0;
  std::size_t subsets = 0;
  std::size_t distinct_relations = 0;
  std::size_t failures = 0;
  std::optional<ElementSet> first_failure;
  std::optional<AxiomVerdict> first_failure_verdict;

  bool ok() const { return failures == 0; }
};

/// Every S subset of A: the sufficientarian relation passes weak order,
/// symmetry, separability, SJ and dual SJ.
ForwardReport verify_theorem1_forward(const Domain& domain);

struct ConverseReport {
  std::string space;
  std::size_t agents = 0;
  EnumerationMode mode = EnumerationMode::quotient;
  std::uint64_t candidates = 0;
  std::uint64_t survivors = 0;
  std::uint64_t certified = 0;
  std::vector<ElementSet> survivor_sets;  // extracted S, enumeration order
  std::vector<std::uint64_t> survivor_indices;
  /// Survivor tables as dense profile levels, sorted; comparable across modes.
  std::vector<std::vector<int>> survivor_levels;
  std::optional<std::uint64_t> first_uncertified;

  bool ok() const { return survivors == certified; }
};

/// Scans every weak order (or symmetric weak order) for the four axioms and
/// certifies each survivor as sufficientarian.
ConverseReport verify_theorem1_converse(const Domain& domain, const ScanOptions& options);

struct Theorem2Report {
  std::string space;
  std::size_t subsets = 0;
  std::size_t filters = 0;
  std::size_t mismatches = 0;
  std::optional<ElementSet> first_mismatch;
  std::size_t principal_checked = 0;
  std::size_t principal_failures = 0;
  std::optional<ElementSet> first_principal_failure;

  bool ok() const { return mismatches == 0 && principal_failures == 0; }
};

/// For every S: monotonicity and geq-complements of the sufficientarian
/// relation hold iff S is a filter; each nonempty filter is up-set(beta).
/// Throws Error(KindMismatch) without meets.
Theorem2Report verify_theorem2(const Domain& domain);

struct Prop4Report {
  std::string space;
  std::size_t agents = 0;
  std::uint64_t candidates = 0;
  std::uint64_t survivors = 0;
  std::uint64_t certified = 0;
  std::uint64_t weak_orders_on_a = 0;
  std::uint64_t distinct_leximin = 0;
  std::optional<std::uint64_t> first_uncertified;

  bool ok() const { return survivors == certified && survivors == distinct_leximin; }
};

/// Two agents: every weak order passing the leximin axioms is endogenous
/// leximin. Throws Error(InvalidInput) unless the domain has two agents.
Prop4Report verify_prop4(const Domain& domain, const ScanOptions& options);

struct AxiomExpectation {
  Axiom axiom;
  bool expected;
  AxiomVerdict verdict;
  bool replayed = false;  // failing verdicts only

  bool ok() const { return verdict.holds == expected && (verdict.holds || replayed); }
};

struct BetaExpectation {
  Element beta;
  bool expected;
  bool actual;

  bool ok() const { return expected == actual; }
};

struct SignatureRow {
  std::string label;
  std::string space;
  std::size_t agents = 0;
  json rule;
  std::vector<AxiomExpectation> checks;
  std::vector<BetaExpectation> betas;

  bool ok() const;
};

/// Materializes the rule and compares each verdict with its expectation.
SignatureRow check_signature(std::string label, const Domain& domain, const json& rule,
                             const std::vector<std::pair<Axiom, bool>>& expected);

/// The independence table: each counterexample fails exactly its axiom.
std::vector<SignatureRow> verify_independence();

/// The example1 rule (alpha = (1, 2)) on a numeric grid with top value 1.
SignatureRow verify_example1(const Domain& domain);
/// The example2 rule (tau = 1/2) on a numeric grid containing 1/2.
SignatureRow verify_example2(const Domain& domain);
/// Both examples on U5 and U9.
std::vector<SignatureRow> verify_mariotti();

struct Example3Report {
  SignatureRow axioms;  // the four leximin axioms, all expected to hold
  Classification classification;
  std::vector<int> star_levels;
  bool star_is_chain_cba = false;
  bool fixture_prefers_bbb = false;  // (b,b,b) strictly above (a,c,c)
  bool leximin_prefers_bbb = false;

  bool ok() const {
    return axioms.ok() && !classification.endogenous_leximin && star_is_chain_cba && !fixture_prefers_bbb &&
           leximin_prefers_bbb;
  }
};

/// The shipped three-agent fixture. An empty path uses the built-in chain.
Example3Report verify_example3(const std::filesystem::path& fixture = {});

}  // namespace suff
