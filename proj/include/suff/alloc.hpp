#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "suff/space.hpp"

namespace suff {

/// Mixed-radix index of a profile in A^N; agent 0 is the lowest-order digit.
using ProfileIndex = std::uint32_t;

/// Agent subset M of N as a bitmask (bit i set iff agent i is in M).
using AgentSet = std::uint32_t;

/// A point of A^N, one element index per agent.
using Profile = std::vector<Element>;

struct Limits {
  std::uint64_t max_profiles = 1'000'000;
  std::uint64_t max_weak_orders = 10'000'000;
};

/// Shape of A^N for |A| = m and |N| = n, with index arithmetic.
class ProfileSpace {
 public:
  /// Throws Error(BoundExceeded) when m^n exceeds limits.max_profiles,
  /// Error(InvalidInput) for m = 0 or n = 0.
  ProfileSpace(std::size_t elements, std::size_t agents, const Limits& limits = {});

  std::size_t elements() const { return m_; }
  std::size_t agents() const { return n_; }
  ProfileIndex size() const { return size_; }
  AgentSet all_agents() const { return (AgentSet{1} << n_) - 1; }

  Element coord(ProfileIndex x, std::size_t agent) const { return (x / power_[agent]) % m_; }
  ProfileIndex power(std::size_t agent) const { return power_[agent]; }

  Profile decode(ProfileIndex x) const;
  /// Throws Error(UnknownProfile) for a wrong length or out-of-range element.
  ProfileIndex encode(std::span<const Element> coords) const;

  /// The constant profile (b, ..., b).
  ProfileIndex constant(Element b) const;
  /// a_i x: coordinate i replaced by a.
  ProfileIndex substitute(ProfileIndex x, std::size_t agent, Element a) const {
    return x - coord(x, agent) * power_[agent] + a * power_[agent];
  }
  /// (x_M, y_{-M}).
  ProfileIndex mixed(ProfileIndex x, ProfileIndex y, AgentSet coalition) const;
  /// result_k = x_{sigma(k)}.
  ProfileIndex permute(ProfileIndex x, std::span<const std::size_t> sigma) const;

 private:
  std::size_t m_;
  std::size_t n_;
  ProfileIndex size_;
  std::vector<ProfileIndex> power_;
};

Profile substitute(const Profile& x, std::size_t agent, Element a);
Profile permute(const Profile& x, std::span<const std::size_t> sigma);
Profile mixed_profile(const Profile& x, const Profile& y, AgentSet coalition);

/// C(m + n - 1, n), the number of size-n multisets from m elements.
std::uint64_t multiset_count(std::uint64_t m, std::uint64_t n);

/// Decomposition of A^N into orbits under coordinate permutations. Orbit ids
/// are assigned in order of first appearance scanning profiles by index.
class OrbitTable {
 public:
  std::size_t count() const { return representative_.size(); }
  std::uint32_t orbit_of(ProfileIndex x) const { return orbit_of_[x]; }
  /// Lexicographically smallest member, i.e. coordinates sorted ascending.
  ProfileIndex representative(std::uint32_t orbit) const { return representative_[orbit]; }
  /// Members in ascending index order.
  std::span<const ProfileIndex> members(std::uint32_t orbit) const {
    return {members_.data() + offsets_[orbit], members_.data() + offsets_[orbit + 1]};
  }

 private:
  friend OrbitTable orbits(const ProfileSpace& profiles);

  std::vector<std::uint32_t> orbit_of_;
  std::vector<ProfileIndex> representative_;
  std::vector<ProfileIndex> members_;
  std::vector<std::size_t> offsets_;
};

OrbitTable orbits(const ProfileSpace& profiles);

/// A validated space together with the profile space A^N and its orbits;
/// the common context every checker and harness runs against.
class Domain {
 public:
  Domain(Space space, std::size_t agents, const Limits& limits = {});

  const Space& space() const { return space_; }
  const ProfileSpace& profiles() const { return profiles_; }
  const OrbitTable& orbit_table() const { return orbits_; }
  std::size_t agents() const { return profiles_.agents(); }
  const Limits& limits() const { return limits_; }

 private:
  Space space_;
  Limits limits_;
  ProfileSpace profiles_;
  OrbitTable orbits_;
};

}  // namespace suff
