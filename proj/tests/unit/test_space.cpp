#include "doctest.h"
#include "helpers.hpp"
#include "suff/error.hpp"
#include "suff/space.hpp"

using namespace suff;

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

SpaceSpec two_minima(SpaceKind kind) {
  SpaceSpec spec{"bowtie", kind, {"a1", "a2", "b", "c"}, {{"a1", "b"}, {"a1", "c"}, {"a2", "b"}, {"a2", "c"}}, {}};
  return spec;
}

}  // namespace

TEST_CASE("chain meets are minima") {
  const Space b2 = fixture("B2");
  CHECK(b2.is_chain());
  CHECK(b2.has_meets());
  CHECK(b2.id(b2.meet(b2.index_of("0"), b2.index_of("1"))) == "0");
}

TEST_CASE("grid meet is the componentwise minimum") {
  const Space g2 = fixture("G2");
  CHECK(g2.kind() == SpaceKind::semilattice);
  CHECK(g2.id(g2.meet(g2.index_of("(1,0)"), g2.index_of("(0,1)"))) == "(0,0)");
}

TEST_CASE("two maximal lower bounds have no unique meet") {
  CHECK(code_of([] { load_space(two_minima(SpaceKind::semilattice)); }) == ErrorCode::NoUniqueMeet);
  const Space poset = load_space(two_minima(SpaceKind::poset));
  CHECK_FALSE(poset.has_meets());
  CHECK(code_of([&] { poset.meet(0, 1); }) == ErrorCode::KindMismatch);
  CHECK(code_of([&] { is_filter(poset, ElementSet{}); }) == ErrorCode::KindMismatch);
}

TEST_CASE("load_space rejects malformed specs") {
  CHECK(code_of([] { load_space({"dup", SpaceKind::unordered, {"a", "a"}, {}, {}}); }) ==
        ErrorCode::DuplicateElement);
  CHECK(code_of([] { load_space({"cycle", SpaceKind::poset, {"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}}); }) ==
        ErrorCode::NotAntisymmetric);
  CHECK(code_of([] { load_space({"x", SpaceKind::poset, {"a"}, {{"a", "zz"}}, {}}); }) ==
        ErrorCode::UnknownElement);
  CHECK(code_of([] {
          load_space({"backwards", SpaceKind::poset, {"lo", "hi"}, {{"lo", "hi"}}, {{"lo", Rational(1)}, {"hi", Rational(0)}}});
        }) == ErrorCode::ValueOrderMismatch);
  // A preorder may identify elements.
  const Space pre = load_space({"cycle", SpaceKind::preorder, {"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}});
  CHECK(pre.leq(1, 0));
}

TEST_CASE("closure is reflexive, transitive and idempotent") {
  // 0 <= 1 <= 2 <= 3 given as generators only.
  std::vector<std::uint8_t> rel(16, 0);
  rel[0 * 4 + 1] = rel[1 * 4 + 2] = rel[2 * 4 + 3] = 1;
  const auto once = reflexive_transitive_closure(rel, 4);
  CHECK(once == reflexive_transitive_closure(once, 4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK((once[a * 4 + b] != 0) == (a <= b));
}

TEST_CASE("meet laws hold on every fixture with meets") {
  for (const auto& name : fixture_names()) {
    const Space s = fixture(name);
    if (!s.has_meets()) continue;
    const auto leq = testing::leq_matrix(s);
    for (Element a = 0; a < s.size(); ++a) {
      CHECK(s.meet(a, a) == a);
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(s.meet(a, b) == s.meet(b, a));
        CHECK(static_cast<int>(s.meet(a, b)) == oracle::glb(leq, a, b));
        for (Element c = 0; c < s.size(); ++c) CHECK(s.meet(a, s.meet(b, c)) == s.meet(s.meet(a, b), c));
      }
    }
  }
}

TEST_CASE("filter examples on G2") {
  const Space g2 = fixture("G2");
  CHECK(is_filter(g2, g2.set_of({"(1,1)"})));
  CHECK(is_filter(g2, g2.set_of({"(1,0)", "(1,1)"})));
  CHECK(is_filter(g2, ElementSet{}));
  const auto escape = g2.set_of({"(1,0)", "(0,1)", "(1,1)"});
  CHECK_FALSE(is_filter(g2, escape));
  const auto v = filter_violation(g2, escape);
  REQUIRE(v);
  CHECK(v->clause == FilterViolation::Clause::meet_closure);
  CHECK(g2.id(*v->meet) == "(0,0)");
}

TEST_CASE("principal filter thresholds") {
  const Space g2 = fixture("G2");
  CHECK(g2.id(principal_filter_threshold(g2, g2.set_of({"(1,0)", "(1,1)"}))) == "(1,0)");
  CHECK(g2.id(principal_filter_threshold(g2, g2.set_of({"(1,1)"}))) == "(1,1)");
  CHECK(code_of([&] { principal_filter_threshold(g2, ElementSet{}); }) == ErrorCode::EmptySet);

  const Space g3 = fixture("G3");
  const ElementSet two_peaks(g3.up_set(g3.index_of("(1,2)")).bits() | g3.up_set(g3.index_of("(2,1)")).bits());
  CHECK(code_of([&] { principal_filter_threshold(g3, two_peaks); }) == ErrorCode::NotAFilter);
  ElementSet with_meet = two_peaks;
  with_meet.insert(g3.index_of("(1,1)"));
  CHECK(g3.id(principal_filter_threshold(g3, with_meet)) == "(1,1)");
}

TEST_CASE("filters match the brute-force definition and are principal") {
  for (const char* name : {"G2", "G3", "D12", "B2", "C3", "U5"}) {
    const Space s = fixture(name);
    const auto leq = testing::leq_matrix(s);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.size()); ++bits) {
      const ElementSet set(bits);
      const bool f = is_filter(s, set);
      CHECK(f == oracle::filter(leq, bits));
      if (f) {
        CHECK(s.up_closure(set) == set);
        if (!set.empty()) CHECK(s.up_set(principal_filter_threshold(s, set)) == set);
      }
    }
  }
}

TEST_CASE("finite spaces satisfy the descending chain condition") {
  for (const auto& name : fixture_names()) CHECK(check_dcc_finite(fixture(name)).holds);
}

TEST_CASE("fixture shapes") {
  CHECK(fixture("B2").size() == 2);
  CHECK(fixture("C3").size() == 3);
  CHECK(fixture("G3").size() == 9);
  CHECK(fixture("D12").size() == 6);
  const Space u9 = fixture("U9");
  CHECK(u9.size() == 9);
  CHECK(u9.value(u9.index_of("1/8")) == Rational(1, 8));
  CHECK(u9.is_numeric_chain());
  const Space d12 = fixture("D12");
  CHECK(d12.id(d12.meet(d12.index_of("4"), d12.index_of("6"))) == "2");
  CHECK_FALSE(fixture("ABC").is_ordered());
  CHECK_FALSE(fixture_spec("nope"));
}
