#include "suff/space.hpp"

#include <algorithm>

#include "suff/error.hpp"

namespace suff {

std::string_view to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::unordered: return "unordered";
    case SpaceKind::preorder: return "preorder";
    case SpaceKind::poset: return "poset";
    case SpaceKind::semilattice: return "semilattice";
  }
  return "unordered";
}

SpaceKind space_kind_from_string(std::string_view text) {
  if (text == "unordered") return SpaceKind::unordered;
  if (text == "preorder") return SpaceKind::preorder;
  if (text == "poset") return SpaceKind::poset;
  if (text == "semilattice") return SpaceKind::semilattice;
  throw Error(ErrorCode::InvalidInput, "unknown space kind '" + std::string(text) + "'");
}

std::optional<Element> Space::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<Element>(it - ids_.begin());
}

Element Space::index_of(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw Error(ErrorCode::UnknownElement,
              "'" + std::string(id) + "' is not an element of space " + name_);
}

Element Space::meet(Element a, Element b) const {
  if (meet_.empty()) {
    throw Error(ErrorCode::KindMismatch, "space " + name_ + " has no meet structure");
  }
  return meet_[a * ids_.size() + b];
}

ElementSet Space::up_set(Element a) const {
  ElementSet out;
  for (Element b = 0; b < size(); ++b) {
    if (leq(a, b)) out.insert(b);
  }
  return out;
}

ElementSet Space::up_closure(ElementSet s) const {
  ElementSet out;
  for (Element a : s.elements()) out = ElementSet(out.bits() | up_set(a).bits());
  return out;
}

std::vector<std::string> Space::ids_of(ElementSet s) const {
  std::vector<std::string> out;
  for (Element e : s.elements()) out.push_back(ids_[e]);
  return out;
}

ElementSet Space::set_of(const std::vector<std::string>& ids) const {
  ElementSet out;
  for (const auto& id : ids) out.insert(index_of(id));
  return out;
}

std::vector<std::uint8_t> reflexive_transitive_closure(std::vector<std::uint8_t> rel, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) rel[i * m + i] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!rel[i * m + k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (rel[k * m + j]) rel[i * m + j] = 1;
      }
    }
  }
  return rel;
}

namespace {

// Greatest element of the common lower bounds, if unique.
std::optional<Element> greatest_lower_bound(const std::vector<std::uint8_t>& leq, std::size_t m,
                                            Element a, Element b) {
  std::vector<Element> lower;
  for (Element c = 0; c < m; ++c) {
    if (leq[c * m + a] && leq[c * m + b]) lower.push_back(c);
  }
  std::optional<Element> found;
  for (Element g : lower) {
    const bool dominates = std::all_of(lower.begin(), lower.end(),
                                       [&](Element c) { return leq[c * m + g] != 0; });
    if (dominates) {
      if (found) return std::nullopt;  // only possible without antisymmetry
      found = g;
    }
  }
  return found;
}

}  // namespace

Space load_space(const SpaceSpec& spec) {
  Space space;
  space.name_ = spec.name;
  space.kind_ = spec.kind;
  const std::size_t m = spec.elements.size();
  if (m == 0) throw Error(ErrorCode::InvalidInput, "space " + spec.name + " has no elements");
  if (m > kMaxElements) {
    throw Error(ErrorCode::InvalidInput, "space " + spec.name + " has more than 64 elements");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.elements[i] == spec.elements[j]) {
        throw Error(ErrorCode::DuplicateElement, "'" + spec.elements[i] + "' listed twice");
      }
    }
  }
  space.ids_ = spec.elements;

  if (spec.kind == SpaceKind::unordered && !spec.order.empty()) {
    throw Error(ErrorCode::KindMismatch, "unordered space " + spec.name + " lists order pairs");
  }
  std::vector<std::uint8_t> rel(m * m, 0);
  for (const auto& [lo, hi] : spec.order) {
    rel[space.index_of(lo) * m + space.index_of(hi)] = 1;
  }
  space.leq_ = reflexive_transitive_closure(std::move(rel), m);
  const auto& leq = space.leq_;

  const bool antisymmetric_kind = spec.kind == SpaceKind::poset || spec.kind == SpaceKind::semilattice;
  bool antisymmetric = true;
  for (Element a = 0; a < m; ++a) {
    for (Element b = a + 1; b < m; ++b) {
      if (leq[a * m + b] && leq[b * m + a]) {
        antisymmetric = false;
        if (antisymmetric_kind) {
          throw Error(ErrorCode::NotAntisymmetric,
                      "'" + space.ids_[a] + "' and '" + space.ids_[b] + "' are mutually <=");
        }
      }
    }
  }

  bool chain = true;
  for (Element a = 0; a < m && chain; ++a) {
    for (Element b = 0; b < m; ++b) {
      if (!leq[a * m + b] && !leq[b * m + a]) {
        chain = false;
        break;
      }
    }
  }
  space.chain_ = chain;

  if (spec.kind != SpaceKind::unordered && antisymmetric) {
    std::vector<Element> meet(m * m);
    bool complete = true;
    for (Element a = 0; a < m && complete; ++a) {
      for (Element b = 0; b < m; ++b) {
        auto g = greatest_lower_bound(leq, m, a, b);
        if (!g) {
          if (spec.kind == SpaceKind::semilattice) {
            throw Error(ErrorCode::NoUniqueMeet,
                        "'" + space.ids_[a] + "' and '" + space.ids_[b] + "' have no unique meet");
          }
          complete = false;
          break;
        }
        meet[a * m + b] = *g;
      }
    }
    if (complete) space.meet_ = std::move(meet);
  }

  if (!spec.values.empty()) {
    space.values_.resize(m);
    std::vector<bool> seen(m, false);
    for (const auto& [id, value] : spec.values) {
      const Element e = space.index_of(id);
      space.values_[e] = value;
      seen[e] = true;
    }
    for (Element e = 0; e < m; ++e) {
      if (!seen[e]) {
        throw Error(ErrorCode::InvalidInput, "no value given for '" + space.ids_[e] + "'");
      }
    }
    if (chain && spec.kind != SpaceKind::unordered) {
      for (Element a = 0; a < m; ++a) {
        for (Element b = 0; b < m; ++b) {
          const bool order = leq[a * m + b] != 0;
          const bool numeric = space.values_[a] <= space.values_[b];
          if (order != numeric) {
            throw Error(ErrorCode::ValueOrderMismatch,
                        "order and values disagree on '" + space.ids_[a] + "' vs '" +
                            space.ids_[b] + "'");
          }
        }
      }
    }
  }
  return space;
}

std::optional<FilterViolation> filter_violation(const Space& space, ElementSet s) {
  if (!space.has_meets()) {
    throw Error(ErrorCode::KindMismatch, "filters need a meet-semilattice; " + space.name() +
                                             " is " + std::string(to_string(space.kind())));
  }
  const auto members = s.elements();
  for (Element a : members) {
    for (Element b = 0; b < space.size(); ++b) {
      if (space.leq(a, b) && !s.contains(b)) {
        return FilterViolation{FilterViolation::Clause::upward_closure, a, b, std::nullopt};
      }
    }
  }
  for (Element a : members) {
    for (Element b : members) {
      const Element ab = space.meet(a, b);
      if (!s.contains(ab)) return FilterViolation{FilterViolation::Clause::meet_closure, a, b, ab};
    }
  }
  return std::nullopt;
}

bool is_filter(const Space& space, ElementSet s) { return !filter_violation(space, s).has_value(); }

Element principal_filter_threshold(const Space& space, ElementSet s) {
  if (!is_filter(space, s)) throw Error(ErrorCode::NotAFilter, "set is not a filter");
  if (s.empty()) throw Error(ErrorCode::EmptySet, "the empty filter has no threshold");
  const auto members = s.elements();
  Element beta = members.front();
  for (Element a : members) beta = space.meet(beta, a);
  // Meet-closure keeps beta inside S, and upward closure then gives S exactly.
  if (space.up_set(beta) != s) throw Error(ErrorCode::NotAFilter, "filter is not principal");
  return beta;
}

DccResult check_dcc_finite(const Space& space) {
  return {true, "finite space (" + std::to_string(space.size()) +
                    " elements): every weakly decreasing sequence is eventually constant, "
                    "so every filter is principal"};
}

}  // namespace suff
