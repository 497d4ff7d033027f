#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "suff/alloc.hpp"
#include "suff/error.hpp"

using namespace suff;

TEST_CASE("substitution notation") {
  const ProfileSpace p(3, 2);
  const ProfileIndex bb = p.constant(1);
  const ProfileIndex aib = p.substitute(bb, 0, 0);
  CHECK(p.decode(aib) == Profile{0, 1});
  CHECK(p.decode(p.substitute(aib, 1, 2)) == Profile{0, 2});
  CHECK(p.substitute(aib, 0, 0) == aib);
  CHECK(substitute(Profile{1, 1}, 0, 0) == Profile{0, 1});
}

TEST_CASE("substitutions: last write wins, distinct coordinates commute") {
  const ProfileSpace p(3, 3);
  for (ProfileIndex x = 0; x < p.size(); ++x) {
    CHECK(p.substitute(p.substitute(x, 1, 0), 1, 2) == p.substitute(x, 1, 2));
    CHECK(p.substitute(p.substitute(x, 0, 1), 2, 2) == p.substitute(p.substitute(x, 2, 2), 0, 1));
  }
}

TEST_CASE("permutation action") {
  const ProfileSpace p(3, 3);
  const std::vector<std::size_t> swap{1, 0, 2};
  const std::vector<std::size_t> cycle{1, 2, 0};
  const std::vector<std::size_t> inverse{2, 0, 1};
  CHECK(permute(Profile{0, 1}, std::vector<std::size_t>{1, 0}) == Profile{1, 0});
  const std::vector<std::size_t> identity{0, 1, 2};
  for (ProfileIndex x = 0; x < p.size(); ++x) {
    CHECK(p.permute(x, identity) == x);
    CHECK(p.permute(p.permute(x, cycle), inverse) == x);
    CHECK(p.permute(p.permute(x, swap), swap) == x);
    auto a = p.decode(x), b = p.decode(p.permute(x, cycle));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  // result_k = x_sigma(k)
  CHECK(p.decode(p.permute(p.encode(Profile{0, 1, 2}), cycle)) == Profile{1, 2, 0});
}

TEST_CASE("mixed profiles") {
  CHECK(mixed_profile({0, 0}, {1, 1}, 0b10) == Profile{1, 0});
  CHECK(mixed_profile({0, 0}, {1, 1}, 0) == Profile{1, 1});
  CHECK(mixed_profile({0, 0}, {1, 1}, 0b11) == Profile{0, 0});
  const ProfileSpace p(2, 3);
  for (ProfileIndex x = 0; x < p.size(); ++x)
    for (AgentSet m = 0; m < 8; ++m) {
      CHECK(p.mixed(x, x, m) == x);
      for (ProfileIndex y = 0; y < p.size(); ++y) {
        CHECK(p.decode(p.mixed(x, y, m)) == mixed_profile(p.decode(x), p.decode(y), m));
      }
    }
}

TEST_CASE("index round trip and agent 0 as lowest digit") {
  const ProfileSpace p(3, 2);
  CHECK(p.size() == 9);
  CHECK(p.encode(Profile{1, 0}) == 1);
  CHECK(p.encode(Profile{0, 1}) == 3);
  for (ProfileIndex x = 0; x < p.size(); ++x) CHECK(p.encode(p.decode(x)) == x);
  CHECK_THROWS_AS(p.encode(Profile{3, 0}), Error);
  CHECK_THROWS_AS(p.encode(Profile{0}), Error);
}

TEST_CASE("profile bound") {
  CHECK_THROWS_AS(ProfileSpace(10, 7), Error);  // 10^7 > 10^6
  CHECK_NOTHROW(ProfileSpace(10, 7, Limits{10'000'000, 10'000'000}));
  try {
    ProfileSpace(10, 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
}

TEST_CASE("orbit decomposition") {
  struct Case {
    std::size_t m, n, orbits;
  };
  for (const Case c : {Case{2, 2, 3}, Case{3, 2, 6}, Case{2, 3, 4}, Case{3, 3, 10}, Case{4, 3, 20}}) {
    const ProfileSpace p(c.m, c.n);
    const OrbitTable t = orbits(p);
    CHECK(t.count() == c.orbits);
    CHECK(t.count() == multiset_count(c.m, c.n));
    for (ProfileIndex x = 0; x < p.size(); ++x) {
      auto sorted = p.decode(x);
      std::sort(sorted.begin(), sorted.end());
      CHECK(p.decode(t.representative(t.orbit_of(x))) == sorted);
      for (ProfileIndex y = 0; y < p.size(); ++y) {
        auto other = p.decode(y);
        std::sort(other.begin(), other.end());
        CHECK((t.orbit_of(x) == t.orbit_of(y)) == (sorted == other));
      }
    }
    std::size_t members = 0;
    for (std::uint32_t o = 0; o < t.count(); ++o) {
      const auto span = t.members(o);
      members += span.size();
      CHECK(std::is_sorted(span.begin(), span.end()));
      CHECK(std::find(span.begin(), span.end(), t.representative(o)) != span.end());
    }
    CHECK(members == p.size());
  }
}
