#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suff/rational.hpp"

namespace suff {

/// Dense index of a ground-set element, fixed when the space is loaded.
using Element = std::uint32_t;

inline constexpr std::size_t kMaxElements = 64;

/// Subset of a ground set with at most 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(std::size_t m) {
    return ElementSet(m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

enum class SpaceKind { unordered, preorder, poset, semilattice };

std::string_view to_string(SpaceKind kind) noexcept;
SpaceKind space_kind_from_string(std::string_view text);

/// Unvalidated description of a ground set, as read from JSON or built from
/// a named fixture. Order pairs are generators; closure happens on load.
struct SpaceSpec {
  std::string name;
  SpaceKind kind = SpaceKind::unordered;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;  // (lo, hi): lo <= hi
  std::map<std::string, Rational> values;                  // empty: no values
};

/// Immutable, validated ground set with its closed order, optional meet table
/// and optional exact values. Safe to share across threads.
class Space {
 public:
  const std::string& name() const { return name_; }
  SpaceKind kind() const { return kind_; }
  std::size_t size() const { return ids_.size(); }

  const std::string& id(Element e) const { return ids_[e]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Element> find(std::string_view id) const;
  /// Throws Error(UnknownElement).
  Element index_of(std::string_view id) const;

  bool leq(Element a, Element b) const { return leq_[a * ids_.size() + b] != 0; }
  bool is_ordered() const { return kind_ != SpaceKind::unordered; }
  /// True when every two elements are comparable.
  bool is_chain() const { return chain_; }

  bool has_meets() const { return !meet_.empty(); }
  /// Throws Error(KindMismatch) when the space has no meet table.
  Element meet(Element a, Element b) const;

  bool has_values() const { return !values_.empty(); }
  const Rational& value(Element e) const { return values_[e]; }
  /// Values present and the order is a chain agreeing with numeric order.
  bool is_numeric_chain() const { return has_values() && chain_ && kind_ != SpaceKind::unordered; }

  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet up_set(Element a) const;
  ElementSet up_closure(ElementSet s) const;
  bool is_upward_closed(ElementSet s) const { return up_closure(s) == s; }

  std::vector<std::string> ids_of(ElementSet s) const;
  ElementSet set_of(const std::vector<std::string>& ids) const;

 private:
  friend Space load_space(const SpaceSpec& spec);

  std::string name_;
  SpaceKind kind_ = SpaceKind::unordered;
  std::vector<std::string> ids_;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> meet_;
  std::vector<Rational> values_;
  bool chain_ = false;
};

/// Validates a spec: closes the order, checks kind-specific invariants, builds
/// the meet table where every pair has a unique greatest lower bound.
/// Errors: DuplicateElement, UnknownElement, NotAntisymmetric, NoUniqueMeet,
/// ValueOrderMismatch, KindMismatch, InvalidInput.
Space load_space(const SpaceSpec& spec);

/// Reflexive-transitive closure of an m x m boolean matrix (row-major).
std::vector<std::uint8_t> reflexive_transitive_closure(std::vector<std::uint8_t> rel, std::size_t m);

struct FilterViolation {
  enum class Clause { upward_closure, meet_closure } clause;
  Element a;            // member of S
  Element b;            // upward_closure: b >= a, b not in S; meet_closure: b in S
  std::optional<Element> meet;  // meet_closure: a ^ b, not in S
};

/// Empty set counts as a filter. Throws Error(KindMismatch) without meets.
bool is_filter(const Space& space, ElementSet s);
std::optional<FilterViolation> filter_violation(const Space& space, ElementSet s);

/// Returns beta with S = up-set(beta). Errors: KindMismatch, NotAFilter, EmptySet.
Element principal_filter_threshold(const Space& space, ElementSet s);

struct DccResult {
  bool holds = true;
  std::string reason;
};

/// Descending chain condition. Always holds on a finite space.
DccResult check_dcc_finite(const Space& space);

// Built-in fixtures: B2, C3, G2, G3, D12, U5, U9, ABC.
std::vector<std::string> fixture_names();
std::optional<SpaceSpec> fixture_spec(std::string_view name);
Space fixture(std::string_view name);

}  // namespace suff
