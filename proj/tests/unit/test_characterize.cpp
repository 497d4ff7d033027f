#include "doctest.h"
#include "helpers.hpp"
#include "suff/characterize.hpp"
#include "suff/harness.hpp"
#include "suff/io.hpp"
#include "suff/rules.hpp"

using namespace suff;

namespace {

ExtensionalRelation rule(const Domain& d, const json& j) { return materialize(rule_from_json(j, d), d); }

}  // namespace

TEST_CASE("star order of a sufficientarian relation") {
  const Domain b2(fixture("B2"), 2);
  const auto star = derive_star_order(rule(b2, {{"type", "sufficientarian"}, {"S", {"1"}}}), b2);
  CHECK(star.well_defined);
  CHECK(star.levels == std::vector<int>{0, 1});

  const auto flat = derive_star_order(ExtensionalRelation(4, true), b2);
  CHECK(flat.well_defined);
  CHECK(flat.level_count() == 1);
}

TEST_CASE("star order of the min rule depends on the context") {
  // Against a context of 0 every element looks alike; against 1 they do not.
  const Domain u5(fixture("U5"), 2);
  const auto r = rule(u5, {{"type", "min"}});
  const auto star = derive_star_order(r, u5);
  CHECK_FALSE(star.well_defined);
  REQUIRE(star.witness);
  CHECK(star.witness->clause == "context_disagreement");
  const auto& w = *star.witness;
  CHECK(r.geq(w.profiles[0], w.profiles[1]) != (star.levels[w.elements[0]] >= star.levels[w.elements[1]]));
}

TEST_CASE("star order is well defined whenever separability and symmetry hold") {
  for (const auto& [name, n] : {std::pair{"C3", 2}, std::pair{"B2", 3}, std::pair{"B2", 2}}) {
    const Domain d(fixture(name), n);
    SymmetricWeakOrderStream stream(d);
    while (stream.next()) {
      if (!check_separability(stream.relation(), d.profiles()).holds) continue;
      CHECK(derive_star_order(stream.relation(), d).well_defined);
    }
  }
}

TEST_CASE("sufficient set extraction round trips") {
  for (const char* name : {"B2", "C3", "G2", "D12", "G3"}) {
    const Domain d(fixture(name), 2);
    const ElementSet all = d.space().all();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.space().size()); ++bits) {
      const ElementSet s(bits);
      const auto r = materialize(rules::Sufficientarian{s}, d);
      const auto got = extract_sufficient_set(r, d);
      REQUIRE(got.sufficientarian);
      if (s.empty() || s == all) {
        CHECK(got.set.empty());
      } else {
        CHECK(got.set == s);
      }
      CHECK(materialize(rules::Sufficientarian{got.set}, d) == r);
    }
  }
}

TEST_CASE("extraction rejects what is not sufficientarian") {
  const Domain c3(fixture("C3"), 2);
  const auto util = extract_sufficient_set(rule(c3, {{"type", "utilitarian"}}), c3);
  CHECK_FALSE(util.sufficientarian);
  CHECK(util.reason == "too_many_levels");
  CHECK(util.star.level_count() == 3);

  const auto two = extract_sufficient_set(rule(c3, {{"type", "endogenous_leximin"}, {"rank", {{"0", 0}, {"1", 1}, {"2", 1}}}}), c3);
  CHECK(two.sufficientarian);
  CHECK(two.set == ElementSet(0b110));

  const Domain b2(fixture("B2"), 2);
  const auto weighted =
      extract_sufficient_set(rule(b2, {{"type", "weighted_sufficientarian"}, {"S", {"1"}}, {"lambda", {"1", "2"}}}), b2);
  CHECK_FALSE(weighted.sufficientarian);
  CHECK(weighted.reason == "table_mismatch");
  CHECK(weighted.mismatch.has_value());
}

TEST_CASE("classification on G2") {
  const Domain g2(fixture("G2"), 2);
  const auto principal = classify(rule(g2, {{"type", "sufficientarian"}, {"S", {"(1,0)", "(1,1)"}}}), g2);
  CHECK(principal.threshold);
  CHECK(g2.space().id(*principal.beta) == "(1,0)");
  CHECK(principal.generalized_threshold);
  CHECK(principal.endogenous_leximin);

  const auto escape = classify(rule(g2, {{"type", "sufficientarian"}, {"S", {"(1,0)", "(0,1)", "(1,1)"}}}), g2);
  CHECK(escape.is_sufficientarian());
  CHECK(escape.monotone_sufficientarian);
  CHECK_FALSE(escape.generalized_threshold);
  CHECK_FALSE(escape.threshold);

  const auto flat = classify(ExtensionalRelation(16, true), g2);
  CHECK(flat.total_indifference);
  CHECK(flat.sufficient.set.empty());
}

TEST_CASE("classification implications hold for every sufficient set") {
  for (const char* name : {"G2", "G3", "D12", "C3"}) {
    const Domain d(fixture(name), 2);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.space().size()); ++bits) {
      const auto c = classify(materialize(rules::Sufficientarian{ElementSet(bits)}, d), d);
      CHECK(c.is_sufficientarian());
      CHECK(c.endogenous_leximin);
      if (c.threshold) CHECK(c.generalized_threshold);
      if (c.generalized_threshold) CHECK(c.monotone_sufficientarian);
      if (c.monotone_sufficientarian) CHECK(c.is_sufficientarian());
      // Finite semilattice: every filter is principal, so the two coincide
      // except for the empty filter, which has no threshold.
      if (c.generalized_threshold && !c.filter->empty()) CHECK(c.threshold);
    }
  }
}

TEST_CASE("example3 fixture is not endogenous leximin") {
  const auto report = verify_example3(std::filesystem::path(SUFF_DATA_DIR) / "example3.json");
  CHECK(report.axioms.ok());
  CHECK_FALSE(report.classification.endogenous_leximin);
  CHECK(report.star_is_chain_cba);
  CHECK_FALSE(report.fixture_prefers_bbb);
  CHECK(report.leximin_prefers_bbb);
  CHECK(report.ok());
  CHECK(verify_example3().ok());
}

TEST_CASE("harnesses at small scale") {
  const Domain b2(fixture("B2"), 2);
  const auto converse = verify_theorem1_converse(b2, {EnumerationMode::direct, 1});
  CHECK(converse.candidates == 75);
  CHECK(converse.survivors == 3);
  CHECK(converse.certified == 3);
  CHECK(verify_theorem1_forward(b2).distinct_relations == 3);

  const Domain c3(fixture("C3"), 2);
  const auto prop4 = verify_prop4(c3, {EnumerationMode::quotient, 1});
  CHECK(prop4.survivors == 13);
  CHECK(prop4.certified == 13);
  CHECK(prop4.distinct_leximin == 13);

  const auto thm2 = verify_theorem2(Domain(fixture("D12"), 2));
  CHECK(thm2.subsets == 64);
  CHECK(thm2.ok());
  CHECK_THROWS(verify_theorem2(Domain(fixture("ABC"), 2)));
  CHECK_THROWS(verify_prop4(Domain(fixture("B2"), 3), {}));
}

TEST_CASE("independence and comparison rows") {
  for (const auto& row : verify_independence()) CHECK_MESSAGE(row.ok(), row.label);
  for (const auto& row : verify_mariotti()) CHECK_MESSAGE(row.ok(), row.label << " on " << row.space);
}
