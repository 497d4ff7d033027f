#include "suff/io.hpp"

#include <fstream>

#include "suff/error.hpp"

namespace suff {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string as_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::InvalidInput, "expected a string, got " + j.dump());
}

Rational as_rational(const json& j) { return parse_rational(as_string(j)); }

std::vector<Rational> rational_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(as_rational(v));
  return out;
}

ElementSet element_set(const json& j, const Space& space) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of element ids");
  ElementSet s;
  for (const auto& id : j) s.insert(space.index_of(as_string(id)));
  return s;
}

// {"id": level, ...} covering every element; defaults to the chain order.
std::vector<int> rank_map(const json& j, const Space& space, const char* key) {
  std::vector<int> rank(space.size(), 0);
  if (!j.contains(key)) {
    if (!space.is_chain() || !space.is_ordered()) {
      throw Error(ErrorCode::InvalidInput, std::string("field '") + key +
                                               "' is required on spaces that are not chains");
    }
    for (Element a = 0; a < space.size(); ++a) {
      for (Element b = 0; b < space.size(); ++b) {
        if (b != a && space.leq(b, a)) ++rank[a];
      }
    }
    return rank;
  }
  const auto& map = j.at(key);
  if (!map.is_object() || map.size() != space.size()) {
    throw Error(ErrorCode::InvalidInput, std::string("'") + key + "' must rank every element");
  }
  for (const auto& [id, level] : map.items()) rank[space.index_of(id)] = level.get<int>();
  return rank;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
  }
}

SpaceSpec space_spec_from_json(const json& j) {
  SpaceSpec spec;
  spec.name = j.value("name", std::string("unnamed"));
  spec.kind = space_kind_from_string(j.value("kind", std::string("unordered")));
  for (const auto& e : field(j, "elements")) spec.elements.push_back(as_string(e));
  if (j.contains("order")) {
    for (const auto& pair : j.at("order")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::InvalidInput, "order entries are [lo, hi] pairs");
      }
      spec.order.emplace_back(as_string(pair[0]), as_string(pair[1]));
    }
  }
  if (j.contains("values")) {
    for (const auto& [id, value] : j.at("values").items()) spec.values.emplace(id, as_rational(value));
  }
  return spec;
}

Space load_space_file(const std::filesystem::path& path) {
  return load_space(space_spec_from_json(read_json_file(path)));
}

Space resolve_space(const std::string& name_or_path) {
  if (auto spec = fixture_spec(name_or_path)) return load_space(*spec);
  if (std::filesystem::exists(name_or_path)) return load_space_file(name_or_path);
  throw Error(ErrorCode::InvalidInput,
              "'" + name_or_path + "' is neither a built-in fixture nor a readable file");
}

json profile_to_json(ProfileIndex x, const Domain& domain) {
  json out = json::array();
  for (Element e : domain.profiles().decode(x)) out.push_back(domain.space().id(e));
  return out;
}

ProfileIndex profile_from_json(const json& j, const Domain& domain) {
  if (!j.is_array()) throw Error(ErrorCode::UnknownProfile, "profile must be an array: " + j.dump());
  Profile coords;
  for (const auto& id : j) {
    auto e = domain.space().find(as_string(id));
    if (!e) throw Error(ErrorCode::UnknownProfile, "unknown element in profile " + j.dump());
    coords.push_back(*e);
  }
  return domain.profiles().encode(coords);
}

ExtensionalRelation load_explicit_relation(const json& j, const Domain& domain) {
  const ProfileIndex size = domain.profiles().size();
  if (j.contains("table")) {
    const auto& table = j.at("table");
    if (!table.is_array() || table.size() != size) {
      throw Error(ErrorCode::IncompleteTable, "table needs " + std::to_string(size) + " rows");
    }
    ExtensionalRelation r(size);
    for (ProfileIndex x = 0; x < size; ++x) {
      const auto& row = table[x];
      if (!row.is_array() || row.size() != size) {
        throw Error(ErrorCode::IncompleteTable, "row " + std::to_string(x) + " is incomplete");
      }
      for (ProfileIndex y = 0; y < size; ++y) {
        const auto& cell = row[y];
        if (cell.is_boolean()) {
          r.set(x, y, cell.get<bool>());
        } else if (cell.is_number_integer() && (cell == 0 || cell == 1)) {
          r.set(x, y, cell.get<int>() == 1);
        } else {
          throw Error(ErrorCode::IncompleteTable, "cell (" + std::to_string(x) + "," +
                                                      std::to_string(y) + ") is not a boolean");
        }
      }
    }
    return r;
  }
  const auto& levels = field(j, "levels");
  std::vector<std::vector<Profile>> chain;
  for (const auto& level : levels) {
    auto& out = chain.emplace_back();
    for (const auto& p : level) out.push_back(domain.profiles().decode(profile_from_json(p, domain)));
  }
  return relation_from_level_chain(chain, domain);
}

ExtensionalRelation load_explicit_relation_file(const std::filesystem::path& path, const Domain& domain) {
  return load_explicit_relation(read_json_file(path), domain);
}

RankingRule rule_from_json(const json& j, const Domain& domain, const std::filesystem::path& base_dir) {
  const auto& space = domain.space();
  const std::string type = as_string(field(j, "type"));
  if (type == "sufficientarian") return rules::Sufficientarian{element_set(field(j, "S"), space)};
  if (type == "weighted_sufficientarian") {
    return rules::WeightedSufficientarian{element_set(field(j, "S"), space),
                                          rational_list(field(j, "lambda"))};
  }
  if (type == "dictatorship") {
    return rules::Dictatorship{j.value("agent", std::size_t{0}), rank_map(j, space, "rank")};
  }
  if (type == "threshold") return rules::ThresholdSufficientarian{space.index_of(as_string(field(j, "beta")))};
  if (type == "generalized_threshold") {
    return rules::GeneralizedThresholdSufficientarian{element_set(field(j, "F"), space)};
  }
  if (type == "endogenous_leximin") return rules::EndogenousLeximin{rank_map(j, space, "rank")};
  if (type == "utilitarian") {
    std::vector<Rational> utility(space.size());
    if (j.contains("u")) {
      const auto& u = j.at("u");
      if (!u.is_object() || u.size() != space.size()) {
        throw Error(ErrorCode::InvalidInput, "'u' must give a utility for every element");
      }
      for (const auto& [id, value] : u.items()) utility[space.index_of(id)] = as_rational(value);
    } else {
      if (!space.has_values()) {
        throw Error(ErrorCode::IncompatibleSpace, "utilitarian without 'u' needs space values");
      }
      for (Element e = 0; e < space.size(); ++e) utility[e] = space.value(e);
    }
    return rules::Utilitarian{std::move(utility)};
  }
  if (type == "min") return rules::MinRule{};
  if (type == "perm_equiv") return rules::PermEquiv{};
  if (type == "example1") return rules::Example1{rational_list(field(j, "alpha"))};
  if (type == "example2") return rules::Example2{as_rational(field(j, "tau"))};
  if (type == "example3") return rules::Example3{};
  if (type == "explicit") {
    if (j.contains("file")) {
      std::filesystem::path path = as_string(j.at("file"));
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      return rules::Explicit{load_explicit_relation_file(path, domain)};
    }
    return rules::Explicit{load_explicit_relation(j, domain)};
  }
  throw Error(ErrorCode::InvalidInput, "unknown rule type '" + type + "'");
}

}  // namespace suff
