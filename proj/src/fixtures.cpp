
#include "suff/error.hpp"
#include "suff/space.hpp"

namespace suff {

namespace {

SpaceSpec numeric_chain(std::string name, const std::vector<Rational>& values) {
  SpaceSpec spec;
  spec.name = std::move(name);
  spec.kind = SpaceKind::semilattice;
  for (const auto& v : values) {
    spec.elements.push_back(to_string(v));
    spec.values.emplace(to_string(v), v);
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    spec.order.emplace_back(spec.elements[i], spec.elements[i + 1]);
  }
  return spec;
}

std::vector<Rational> grid(std::int64_t denominator) {
  std::vector<Rational> out;
  for (std::int64_t k = 0; k <= denominator; ++k) out.emplace_back(k, denominator);
  return out;
}

// {0..k-1}^2 with the pointwise order, ids "(i,j)" in lexicographic order.
SpaceSpec square_grid(std::string name, int k) {
  SpaceSpec spec;
  spec.name = std::move(name);
  spec.kind = SpaceKind::semilattice;
  auto id = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) spec.elements.push_back(id(i, j));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i + 1 < k) spec.order.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < k) spec.order.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  return spec;
}

SpaceSpec divisors_of_12() {
  SpaceSpec spec;
  spec.name = "D12";
  spec.kind = SpaceKind::semilattice;
  const std::vector<int> divisors{1, 2, 3, 4, 6, 12};
  for (int d : divisors) spec.elements.push_back(std::to_string(d));
  for (int a : divisors) {
    for (int b : divisors) {
      if (a != b && b % a == 0) spec.order.emplace_back(std::to_string(a), std::to_string(b));
    }
  }
  return spec;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"B2", "C3", "G2", "G3", "D12", "U5", "U9", "ABC"}; }

std::optional<SpaceSpec> fixture_spec(std::string_view name) {
  if (name == "B2") return numeric_chain("B2", {Rational(0), Rational(1)});
  if (name == "C3") return numeric_chain("C3", {Rational(0), Rational(1), Rational(2)});
  if (name == "G2") return square_grid("G2", 2);
  if (name == "G3") return square_grid("G3", 3);
  if (name == "D12") return divisors_of_12();
  if (name == "U5") return numeric_chain("U5", grid(4));
  if (name == "U9") return numeric_chain("U9", grid(8));
  if (name == "ABC") {
    SpaceSpec spec;
    spec.name = "ABC";
    spec.kind = SpaceKind::unordered;
    spec.elements = {"a", "b", "c"};
    return spec;
  }
  return std::nullopt;
}

Space fixture(std::string_view name) {
  auto spec = fixture_spec(name);
  if (!spec) throw Error(ErrorCode::InvalidInput, "unknown fixture '" + std::string(name) + "'");
  return load_space(*spec);
}

}  // namespace suff
