#include <algorithm>
#include <set>

#include "suff/error.hpp"
#include "suff/harness.hpp"
#include "suff/rules.hpp"

namespace suff {

namespace {

std::vector<int> dense_profile_levels(const Domain& domain, EnumerationMode mode, std::span<const int> levels) {
  std::vector<int> lifted(domain.profiles().size());
  for (ProfileIndex x = 0; x < lifted.size(); ++x) {
    lifted[x] = mode == EnumerationMode::direct ? levels[x] : levels[domain.orbit_table().orbit_of(x)];
  }
  const auto dense = dense_ranks(std::span<const int>(lifted));
  return {dense.begin(), dense.end()};
}

bool all_hold(const ExtensionalRelation& r, const Domain& domain, const std::vector<Axiom>& axioms,
              std::optional<AxiomVerdict>* first_failure = nullptr) {
  for (Axiom a : axioms) {
    auto verdict = check(a, r, domain);
    if (!verdict.holds) {
      if (first_failure) *first_failure = std::move(verdict);
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Axiom> theorem1_axioms() {
  return {Axiom::weak_order, Axiom::symmetry, Axiom::separability, Axiom::sufficientarian_judgment};
}

std::vector<Axiom> leximin_axioms() {
  return {Axiom::weak_order, Axiom::symmetry, Axiom::separability, Axiom::weak_sufficientarian_judgment};
}

ForwardReport verify_theorem1_forward(const Domain& domain) {
  const std::size_t m = domain.space().size();
  ForwardReport out{domain.space().name(), domain.agents()};
  std::vector<Axiom> axioms = theorem1_axioms();
  axioms.push_back(Axiom::dual_sufficientarian_judgment);

  std::set<std::vector<std::int32_t>> distinct;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const ElementSet s(bits);
    ++out.subsets;
    const auto counts = sufficient_counts(s, domain.profiles());
    distinct.insert(dense_ranks(std::span<const int>(counts)));
    const auto r = ExtensionalRelation::from_levels(std::span<const int>(counts));
    std::optional<AxiomVerdict> failure;
    if (!all_hold(r, domain, axioms, &failure)) {
      if (out.failures++ == 0) {
        out.first_failure = s;
        out.first_failure_verdict = std::move(failure);
      }
    }
  }
  out.distinct_relations = distinct.size();
  return out;
}

ConverseReport verify_theorem1_converse(const Domain& domain, const ScanOptions& options) {
  ConverseReport out{domain.space().name(), domain.agents(), options.mode};
  const Signature signature{theorem1_axioms(), {}};
  const auto scan = scan_weak_orders(
      domain, options, [&](const ExtensionalRelation& r) { return matches_signature(r, domain, signature); });
  out.candidates = scan.candidates;
  out.survivors = scan.matches;
  for (const auto& match : scan.kept) {
    const auto r = lift(domain, options.mode, match.levels);
    const auto extracted = extract_sufficient_set(r, domain);
    out.survivor_indices.push_back(match.index);
    out.survivor_sets.push_back(extracted.set);
    out.survivor_levels.push_back(dense_profile_levels(domain, options.mode, match.levels));
    if (extracted.sufficientarian) {
      ++out.certified;
    } else if (!out.first_uncertified) {
      out.first_uncertified = match.index;
    }
  }
  std::sort(out.survivor_levels.begin(), out.survivor_levels.end());
  return out;
}

Theorem2Report verify_theorem2(const Domain& domain) {
  const Space& space = domain.space();
  if (!space.has_meets()) throw Error(ErrorCode::KindMismatch, "'" + space.name() + "' has no meets");
  Theorem2Report out{space.name()};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.size()); ++bits) {
    const ElementSet s(bits);
    ++out.subsets;
    const auto r = materialize(rules::Sufficientarian{s}, domain);
    const bool axioms = check_monotonicity(r, space, domain.profiles()).holds &&
                        check_geq_complements(r, space, domain.profiles()).holds;
    const bool filter = is_filter(space, s);
    out.filters += filter ? 1 : 0;
    if (axioms != filter && out.mismatches++ == 0) out.first_mismatch = s;
    if (filter && !s.empty()) {
      ++out.principal_checked;
      if (space.up_set(principal_filter_threshold(space, s)) != s && out.principal_failures++ == 0) {
        out.first_principal_failure = s;
      }
    }
  }
  return out;
}

Prop4Report verify_prop4(const Domain& domain, const ScanOptions& options) {
  if (domain.agents() != 2) throw Error(ErrorCode::InvalidInput, "the leximin harness needs exactly two agents");
  const std::size_t m = domain.space().size();
  Prop4Report out{domain.space().name(), domain.agents()};
  const Signature signature{leximin_axioms(), {}};
  const auto scan = scan_weak_orders(
      domain, options, [&](const ExtensionalRelation& r) { return matches_signature(r, domain, signature); });
  out.candidates = scan.candidates;
  out.survivors = scan.matches;
  for (const auto& match : scan.kept) {
    const auto r = lift(domain, options.mode, match.levels);
    const auto star = derive_star_order(r, domain);
    const bool certified =
        star.well_defined && endogenous_leximin_materialize(star.levels, domain.profiles()) == r;
    if (certified) {
      ++out.certified;
    } else if (!out.first_uncertified) {
      out.first_uncertified = match.index;
    }
  }

  out.weak_orders_on_a = ordered_bell(m);
  std::vector<ExtensionalRelation> distinct;
  auto stream = enumerate_weak_orders(m, domain.limits());
  while (stream.next()) {
    auto r = endogenous_leximin_materialize(stream.levels(), domain.profiles());
    if (std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(std::move(r));
  }
  out.distinct_leximin = distinct.size();
  return out;
}

bool SignatureRow::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); }) &&
         std::all_of(betas.begin(), betas.end(), [](const auto& b) { return b.ok(); });
}

SignatureRow check_signature(std::string label, const Domain& domain, const json& rule,
                             const std::vector<std::pair<Axiom, bool>>& expected) {
  SignatureRow row{std::move(label), domain.space().name(), domain.agents(), rule};
  const auto r = materialize(rule_from_json(rule, domain), domain);
  for (const auto& [axiom, wanted] : expected) {
    AxiomExpectation e{axiom, wanted, check(axiom, r, domain)};
    e.replayed = !e.verdict.holds && replay(e.verdict, r, domain);
    row.checks.push_back(std::move(e));
  }
  return row;
}

std::vector<SignatureRow> verify_independence() {
  const Domain b2(fixture("B2"), 2);
  const Domain u5(fixture("U5"), 2);
  const Domain c3(fixture("C3"), 2);
  auto expect_only = [](Axiom failing) {
    std::vector<std::pair<Axiom, bool>> out;
    for (Axiom a : theorem1_axioms()) out.emplace_back(a, a != failing);
    return out;
  };
  std::vector<SignatureRow> rows;
  rows.push_back(check_signature("perm_equiv", b2, {{"type", "perm_equiv"}}, expect_only(Axiom::weak_order)));
  rows.push_back(check_signature("weighted_sufficientarian", b2,
                                 {{"type", "weighted_sufficientarian"}, {"S", {"1"}}, {"lambda", {"1", "2"}}},
                                 expect_only(Axiom::symmetry)));
  rows.push_back(
      check_signature("dictatorship", b2, {{"type", "dictatorship"}, {"agent", 0}}, expect_only(Axiom::symmetry)));
  rows.push_back(check_signature("min", u5, {{"type", "min"}}, expect_only(Axiom::separability)));
  rows.push_back(
      check_signature("utilitarian", c3, {{"type", "utilitarian"}}, expect_only(Axiom::sufficientarian_judgment)));
  return rows;
}

SignatureRow verify_example1(const Domain& domain) {
  auto row = check_signature("example1", domain, {{"type", "example1"}, {"alpha", {"1", "2"}}},
                             {{Axiom::weak_order, true},
                              {Axiom::symmetry, true},
                              {Axiom::monotonicity, true},
                              {Axiom::sufficientarian_judgment, true},
                              {Axiom::separability, false},
                              {Axiom::absolute_individual_improvement, false}});
  const Space& space = domain.space();
  const auto r = materialize(rule_from_json(row.rule, domain), domain);
  const auto pt = check_prioritarian_threshold(r, space, domain.profiles());
  // On a grid the smallest positive value passes vacuously: anything below
  // it is 0. Every larger grid value must fail.
  std::optional<Rational> smallest;
  for (const auto& status : pt.per_beta) {
    if (!smallest || space.value(status.beta) < *smallest) smallest = space.value(status.beta);
  }
  for (const auto& status : pt.per_beta) {
    if (space.value(status.beta) > *smallest) row.betas.push_back({status.beta, false, status.holds});
  }
  return row;
}

SignatureRow verify_example2(const Domain& domain) {
  auto row = check_signature("example2", domain, {{"type", "example2"}, {"tau", "1/2"}},
                             {{Axiom::weak_order, true},
                              {Axiom::symmetry, true},
                              {Axiom::monotonicity, true},
                              {Axiom::absolute_individual_improvement, true},
                              {Axiom::prioritarian_threshold, true},
                              {Axiom::separability, false},
                              {Axiom::sufficientarian_judgment, false}});
  for (const auto& c : row.checks) {
    if (c.axiom != Axiom::prioritarian_threshold) continue;
    for (const auto& status : c.verdict.per_beta) {
      if (domain.space().value(status.beta) == Rational(1, 2)) row.betas.push_back({status.beta, true, status.holds});
    }
  }
  if (row.betas.empty()) throw Error(ErrorCode::IncompatibleSpace, "the grid does not contain 1/2");
  return row;
}

std::vector<SignatureRow> verify_mariotti() {
  std::vector<SignatureRow> rows;
  for (const char* name : {"U5", "U9"}) {
    const Domain domain(fixture(name), 2);
    rows.push_back(verify_example1(domain));
    rows.push_back(verify_example2(domain));
  }
  return rows;
}

Example3Report verify_example3(const std::filesystem::path& fixture_path) {
  const Domain domain(fixture("ABC"), 3);
  const json rule = fixture_path.empty() ? json{{"type", "example3"}}
                                         : json{{"type", "explicit"}, {"file", fixture_path.string()}};
  Example3Report out{check_signature("example3", domain, rule,
                                     {{Axiom::weak_order, true},
                                      {Axiom::symmetry, true},
                                      {Axiom::separability, true},
                                      {Axiom::weak_sufficientarian_judgment, true}})};
  const auto r = materialize(rule_from_json(rule, domain), domain);
  out.classification = classify(r, domain);
  out.star_levels = out.classification.sufficient.star.levels;
  out.star_is_chain_cba = out.classification.sufficient.star.well_defined && out.star_levels == std::vector{0, 1, 2};

  const auto& p = domain.profiles();
  const ProfileIndex bbb = p.constant(1);
  const ProfileIndex acc = p.encode(std::vector<Element>{0, 2, 2});
  out.fixture_prefers_bbb = r.strict(bbb, acc);
  if (out.classification.sufficient.star.well_defined) {
    const auto leximin = endogenous_leximin_materialize(out.star_levels, p);
    out.leximin_prefers_bbb = leximin.strict(bbb, acc);
  }
  return out;
}

}  // namespace suff
