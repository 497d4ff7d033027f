#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "suff/alloc.hpp"
#include "suff/relation.hpp"
#include "suff/rules.hpp"
#include "suff/space.hpp"

namespace suff {

using json = nlohmann::json;

/// {"name", "kind", "elements", "order": [[lo, hi], ...], "values": {id: "p/q"}}
SpaceSpec space_spec_from_json(const json& j);
Space load_space_file(const std::filesystem::path& path);

/// A fixture name, or a path to a space JSON file.
Space resolve_space(const std::string& name_or_path);

/// Profiles are arrays of element identifiers, e.g. ["0","1"].
json profile_to_json(ProfileIndex x, const Domain& domain);
ProfileIndex profile_from_json(const json& j, const Domain& domain);

/// Rule JSON such as {"type": "sufficientarian", "S": ["1"]}. Relative paths
/// inside an explicit rule resolve against base_dir.
RankingRule rule_from_json(const json& j, const Domain& domain,
                           const std::filesystem::path& base_dir = {});

/// Either {"levels": [[profile, ...], ...]} best to worst with symmetry
/// closure, or {"table": [[bool, ...], ...]} in canonical profile order.
/// Errors: IncompleteTable, UnknownProfile, InvalidInput.
ExtensionalRelation load_explicit_relation(const json& j, const Domain& domain);
ExtensionalRelation load_explicit_relation_file(const std::filesystem::path& path, const Domain& domain);

json read_json_file(const std::filesystem::path& path);

}  // namespace suff
