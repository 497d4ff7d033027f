#include "suff/alloc.hpp"

#include <algorithm>
#include <string>

#include "suff/error.hpp"

namespace suff {

ProfileSpace::ProfileSpace(std::size_t elements, std::size_t agents, const Limits& limits)
    : m_(elements), n_(agents), size_(1) {
  if (m_ == 0 || n_ == 0) throw Error(ErrorCode::InvalidInput, "profile space needs m, n >= 1");
  if (n_ > 31) throw Error(ErrorCode::BoundExceeded, "at most 31 agents are supported");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    power_.push_back(static_cast<ProfileIndex>(total));
    total *= m_;
    if (total > limits.max_profiles) {
      throw Error(ErrorCode::BoundExceeded, std::to_string(m_) + "^" + std::to_string(n_) +
                                                " profiles exceed the bound of " +
                                                std::to_string(limits.max_profiles));
    }
  }
  size_ = static_cast<ProfileIndex>(total);
}

Profile ProfileSpace::decode(ProfileIndex x) const {
  Profile out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = coord(x, i);
  return out;
}

ProfileIndex ProfileSpace::encode(std::span<const Element> coords) const {
  if (coords.size() != n_) {
    throw Error(ErrorCode::UnknownProfile, "profile has " + std::to_string(coords.size()) +
                                               " coordinates, expected " + std::to_string(n_));
  }
  ProfileIndex x = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (coords[i] >= m_) throw Error(ErrorCode::UnknownProfile, "element index out of range");
    x += coords[i] * power_[i];
  }
  return x;
}

ProfileIndex ProfileSpace::constant(Element b) const {
  ProfileIndex x = 0;
  for (std::size_t i = 0; i < n_; ++i) x += b * power_[i];
  return x;
}

ProfileIndex ProfileSpace::mixed(ProfileIndex x, ProfileIndex y, AgentSet coalition) const {
  ProfileIndex out = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    out += ((coalition >> i) & 1U ? coord(x, i) : coord(y, i)) * power_[i];
  }
  return out;
}

ProfileIndex ProfileSpace::permute(ProfileIndex x, std::span<const std::size_t> sigma) const {
  ProfileIndex out = 0;
  for (std::size_t k = 0; k < n_; ++k) out += coord(x, sigma[k]) * power_[k];
  return out;
}

Profile substitute(const Profile& x, std::size_t agent, Element a) {
  Profile out = x;
  out[agent] = a;
  return out;
}

Profile permute(const Profile& x, std::span<const std::size_t> sigma) {
  Profile out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[sigma[k]];
  return out;
}

Profile mixed_profile(const Profile& x, const Profile& y, AgentSet coalition) {
  Profile out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (coalition >> i) & 1U ? x[i] : y[i];
  return out;
}

std::uint64_t multiset_count(std::uint64_t m, std::uint64_t n) {
  // C(m+n-1, n) computed incrementally; each partial product is an exact binomial.
  std::uint64_t result = 1;
  for (std::uint64_t k = 1; k <= n; ++k) result = result * (m - 1 + k) / k;
  return result;
}

OrbitTable orbits(const ProfileSpace& profiles) {
  OrbitTable table;
  const ProfileIndex size = profiles.size();
  table.orbit_of_.assign(size, 0);
  // Sorted coordinates identify the orbit; the sorted profile is its representative.
  std::vector<std::uint32_t> orbit_of_rep(size, UINT32_MAX);
  std::vector<std::size_t> member_count;
  for (ProfileIndex x = 0; x < size; ++x) {
    Profile coords = profiles.decode(x);
    std::sort(coords.begin(), coords.end());
    const ProfileIndex rep = profiles.encode(coords);
    if (orbit_of_rep[rep] == UINT32_MAX) {
      orbit_of_rep[rep] = static_cast<std::uint32_t>(table.representative_.size());
      table.representative_.push_back(rep);
      member_count.push_back(0);
    }
    table.orbit_of_[x] = orbit_of_rep[rep];
    ++member_count[orbit_of_rep[rep]];
  }
  table.offsets_.assign(table.representative_.size() + 1, 0);
  for (std::size_t o = 0; o < member_count.size(); ++o) {
    table.offsets_[o + 1] = table.offsets_[o] + member_count[o];
  }
  table.members_.resize(size);
  std::vector<std::size_t> fill(table.offsets_.begin(), table.offsets_.end() - 1);
  for (ProfileIndex x = 0; x < size; ++x) table.members_[fill[table.orbit_of_[x]]++] = x;
  return table;
}

Domain::Domain(Space space, std::size_t agents, const Limits& limits)
    : space_(std::move(space)),
      limits_(limits),
      profiles_(space_.size(), agents, limits),
      orbits_(orbits(profiles_)) {}

}  // namespace suff
