#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "suff/error.hpp"
#include "suff/io.hpp"
#include "suff/rules.hpp"

using namespace suff;
using testing::at;
using testing::at_ids;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected suff::Error");
  return ErrorCode::InvalidInput;
}

ExtensionalRelation rule(const Domain& d, const json& j) { return materialize(rule_from_json(j, d), d); }

}  // namespace

TEST_CASE("sufficientarian on B2 with S = {1}") {
  const Domain d(fixture("B2"), 2);
  const auto r = rule(d, {{"type", "sufficientarian"}, {"S", {"1"}}});
  CHECK(r.strict(at_ids(d, {"1", "0"}), at_ids(d, {"0", "0"})));
  CHECK(r.indiff(at_ids(d, {"1", "0"}), at_ids(d, {"0", "1"})));
  const auto empty = rule(d, {{"type", "sufficientarian"}, {"S", json::array()}});
  CHECK(empty == ExtensionalRelation(d.profiles().size(), true));
}

TEST_CASE("sufficientarian tables match the counting oracle on every fixture") {
  for (const auto& name : fixture_names()) {
    for (std::size_t n : {2, 3}) {
      const Domain d(fixture(name), n);
      if (d.profiles().size() > 200) continue;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.space().size()); ++bits) {
        const auto r = materialize(rules::Sufficientarian{ElementSet(bits)}, d);
        CHECK(testing::equals(r, oracle::sufficientarian(bits, testing::grid(d))));
      }
    }
  }
}

TEST_CASE("threshold, generalized threshold and indicator utilities reduce to sufficientarian") {
  for (const char* name : {"B2", "C3", "G2", "G3", "D12", "U5"}) {
    const Domain d(fixture(name), 2);
    const Space& s = d.space();
    for (Element b = 0; b < s.size(); ++b) {
      CHECK(materialize(rules::ThresholdSufficientarian{b}, d) ==
            materialize(rules::Sufficientarian{s.up_set(b)}, d));
    }
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.size()); ++bits) {
      const ElementSet set(bits);
      const auto suff = materialize(rules::Sufficientarian{set}, d);
      if (is_filter(s, set)) CHECK(materialize(rules::GeneralizedThresholdSufficientarian{set}, d) == suff);
      std::vector<Rational> indicator(s.size());
      for (Element e = 0; e < s.size(); ++e) indicator[e] = set.contains(e) ? 1 : 0;
      CHECK(materialize(rules::Utilitarian{indicator}, d) == suff);
    }
  }
}

TEST_CASE("generalized threshold refuses a set that is not a filter") {
  const Domain d(fixture("G2"), 2);
  CHECK(code_of([&] { rule(d, {{"type", "generalized_threshold"}, {"F", {"(1,0)", "(0,1)", "(1,1)"}}}); }) ==
        ErrorCode::NotAFilter);
}

TEST_CASE("permutation equivalence relates exactly the orbit members") {
  const Domain d(fixture("C3"), 3);
  const auto r = materialize(rules::PermEquiv{}, d);
  for (ProfileIndex x = 0; x < r.size(); ++x)
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      auto a = d.profiles().decode(x), b = d.profiles().decode(y);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(r.geq(x, y) == (a == b));
    }
}

TEST_CASE("endogenous leximin with two classes is sufficientarian for the top class") {
  for (const char* name : {"B2", "C3", "G2", "D12"}) {
    const Domain d(fixture(name), 3);
    const std::size_t m = d.space().size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      std::vector<int> rank(m);
      for (Element e = 0; e < m; ++e) rank[e] = (bits >> e) & 1U;
      CHECK(endogenous_leximin_materialize(rank, d.profiles()) ==
            materialize(rules::Sufficientarian{ElementSet(bits)}, d));
    }
  }
}

TEST_CASE("endogenous leximin compares sorted level vectors") {
  const Domain d(fixture("C3"), 3);
  const std::vector<int> rank{0, 1, 2};
  const auto r = endogenous_leximin_materialize(rank, d.profiles());
  CHECK(r.strict(at(d, {1, 1, 1}), at(d, {0, 2, 2})));
  for (ProfileIndex x = 0; x < r.size(); ++x)
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      const auto a = d.profiles().decode(x), b = d.profiles().decode(y);
      CHECK(r.geq(x, y) == (oracle::leximin(a, b) >= 0));
    }
  const std::vector<int> flat{4, 4, 4};
  CHECK(endogenous_leximin_materialize(flat, d.profiles()) == ExtensionalRelation(r.size(), true));
}

TEST_CASE("example2 rule on U5 with tau = 1/2") {
  const Domain d(fixture("U5"), 2);
  const auto r = rule(d, {{"type", "example2"}, {"tau", "1/2"}});
  // (1/4)^2 < (1/2)(1/4) and 0 < (1/2)(1/4).
  CHECK(r.strict(at_ids(d, {"3/4", "3/4"}), at_ids(d, {"1/2", "3/4"})));
  CHECK(r.strict(at_ids(d, {"1/2", "1"}), at_ids(d, {"1/2", "3/4"})));
  for (ProfileIndex x = 0; x < r.size(); ++x)
    for (ProfileIndex y = 0; y < r.size(); ++y) {
      std::vector<oracle::Q> vx, vy;
      for (Element e : d.profiles().decode(x)) vx.push_back(d.space().value(e));
      for (Element e : d.profiles().decode(y)) vy.push_back(d.space().value(e));
      CHECK(r.geq(x, y) == oracle::example2_geq(vx, vy, oracle::Q(1, 2)));
    }
}

TEST_CASE("example1 utility is symmetric and monotone") {
  const std::vector<Rational> alpha{1, 2};
  const Domain d(fixture("U5"), 2);
  const auto& p = d.profiles();
  for (ProfileIndex x = 0; x < p.size(); ++x) {
    std::vector<Rational> v;
    for (Element e : p.decode(x)) v.push_back(d.space().value(e));
    const auto u = example1_utility(alpha, v);
    CHECK(u == oracle::example1_utility(alpha, v));
    CHECK(example1_utility(alpha, std::vector<Rational>{v[1], v[0]}) == u);
    for (std::size_t i = 0; i < 2; ++i)
      for (Element up = 0; up < d.space().size(); ++up) {
        auto w = v;
        w[i] = d.space().value(up);
        if (w[i] >= v[i]) CHECK(example1_utility(alpha, w) >= u);
      }
  }
}

TEST_CASE("rule parameter validation") {
  const Domain u5(fixture("U5"), 2);
  CHECK(code_of([&] { rule(u5, {{"type", "example1"}, {"alpha", {"2", "1"}}}); }) == ErrorCode::NonIncreasingAlpha);
  CHECK(code_of([&] { rule(u5, {{"type", "example1"}, {"alpha", {"1", "1"}}}); }) == ErrorCode::NonIncreasingAlpha);
  CHECK(code_of([&] { rule(u5, {{"type", "example2"}, {"tau", "1"}}); }) == ErrorCode::TauOutOfRange);
  CHECK(code_of([&] { rule(u5, {{"type", "example2"}, {"tau", "0"}}); }) == ErrorCode::TauOutOfRange);
  CHECK(code_of([&] {
          rule(u5, {{"type", "weighted_sufficientarian"}, {"S", {"1"}}, {"lambda", {"1", "0"}}});
        }) == ErrorCode::InvalidInput);
  const Domain d12(fixture("D12"), 2);
  CHECK(code_of([&] { rule(d12, {{"type", "min"}}); }) == ErrorCode::IncompatibleSpace);
  const Domain abc(fixture("ABC"), 2);
  CHECK(code_of([&] { rule(abc, {{"type", "threshold"}, {"beta", "a"}}); }) == ErrorCode::IncompatibleSpace);
  CHECK(code_of([&] { rule(abc, {{"type", "example3"}}); }) == ErrorCode::IncompatibleSpace);
  CHECK(code_of([&] { rule(abc, {{"type", "nope"}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { rule(abc, {{"type", "sufficientarian"}, {"S", {"z"}}}); }) == ErrorCode::UnknownElement);
}

TEST_CASE("explicit relations") {
  const Domain d(fixture("ABC"), 3);
  const auto shipped = load_explicit_relation_file(std::filesystem::path(SUFF_DATA_DIR) / "example3.json", d);
  CHECK(shipped == materialize(rules::Example3{}, d));
  // Ten orbits, ten strict levels.
  CHECK(example3_levels().size() == 10);

  const Domain b2(fixture("B2"), 2);
  json all_true = json::array();
  for (int x = 0; x < 4; ++x) all_true.push_back(json::array({true, true, true, true}));
  CHECK(load_explicit_relation({{"table", all_true}}, b2) == ExtensionalRelation(4, true));

  json missing = all_true;
  missing[2].erase(3);
  CHECK(code_of([&] { load_explicit_relation({{"table", missing}}, b2); }) == ErrorCode::IncompleteTable);

  const json gap = json::parse(R"({"levels": [[["1", "1"]], [["0", "0"]]]})");
  CHECK(code_of([&] { load_explicit_relation(gap, b2); }) == ErrorCode::IncompleteTable);
  const json twice = json::parse(R"({"levels": [[["1", "1"]], [["0", "1"]], [["1", "0"]], [["0", "0"]]]})");
  CHECK(code_of([&] { load_explicit_relation(twice, b2); }) == ErrorCode::InvalidInput);
  const json unknown = json::parse(R"({"levels": [[["1", "7"]]]})");
  CHECK(code_of([&] { load_explicit_relation(unknown, b2); }) == ErrorCode::UnknownProfile);
}
