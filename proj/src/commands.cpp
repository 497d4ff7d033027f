#include "suff/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <map>

#include "suff/error.hpp"
#include "suff/harness.hpp"
#include "suff/report.hpp"
#include "suff/rules.hpp"

namespace suff {

namespace {

json header(std::string_view command) { return json{{"schema", kReportSchema}, {"command", command}}; }

Domain make_domain(const RunConfig& config) {
  if (config.space.empty()) throw Error(ErrorCode::InvalidInput, "--space is required");
  if (config.agents < 2) throw Error(ErrorCode::InvalidInput, "--agents must be at least 2");
  return Domain(resolve_space(config.space), config.agents, config.limits);
}

struct LoadedRule {
  json spec;
  RankingRule rule;
};

LoadedRule load_rule(const RunConfig& config, const Domain& domain) {
  if (config.rule.empty()) throw Error(ErrorCode::InvalidInput, "--rule is required");
  const auto first = config.rule.find_first_not_of(" \t\r\n");
  json spec;
  std::filesystem::path base;
  if (first != std::string::npos && config.rule[first] == '{') {
    try {
      spec = json::parse(config.rule);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("rule is not valid JSON: ") + e.what());
    }
  } else {
    spec = read_json_file(config.rule);
    base = std::filesystem::path(config.rule).parent_path();
  }
  if (!spec.is_object()) throw Error(ErrorCode::InvalidInput, "rule must be a JSON object");
  return {spec, rule_from_json(spec, domain, base)};
}

std::vector<Axiom> parse_names(std::string_view text) {
  std::vector<Axiom> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto name = text.substr(start, end - start);
    if (!name.empty()) {
      const auto axiom = axiom_from_name(name);
      if (!axiom) throw Error(ErrorCode::InvalidInput, "unknown axiom '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *axiom) == out.end()) out.push_back(*axiom);
    }
    start = end + 1;
  }
  return out;
}

// Profiles grouped by level, best first. Quotient results list one
// representative per orbit.
json levels_json(const Domain& domain, EnumerationMode mode, std::span<const int> levels) {
  std::map<int, json, std::greater<>> classes;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const ProfileIndex x = mode == EnumerationMode::direct
                               ? static_cast<ProfileIndex>(k)
                               : domain.orbit_table().representative(static_cast<std::uint32_t>(k));
    classes[levels[k]].push_back(profile_to_json(x, domain));
  }
  json out = json::array();
  for (auto& [level, members] : classes) out.push_back(std::move(members));
  return out;
}

ScanOptions scan_options(const RunConfig& config, EnumerationMode mode) {
  ScanOptions options;
  options.mode = mode;
  options.workers = std::max(1U, config.workers);
  return options;
}

struct Reproduction {
  json results = json::array();
  bool ok = true;

  void add(json item, bool passed) {
    item["ok"] = passed;
    results.push_back(std::move(item));
    ok = ok && passed;
  }
};

void reproduce_thm1(const RunConfig& config, Reproduction& out) {
  json forward = json::array();
  bool forward_ok = true;
  for (const char* name : {"B2", "C3", "G2", "G3", "D12"}) {
    for (std::size_t n : {2, 3}) {
      const Domain domain(fixture(name), n, config.limits);
      const auto report = verify_theorem1_forward(domain);
      forward_ok = forward_ok && report.ok();
      forward.push_back(forward_json(report));
    }
  }
  out.add(json{{"check", "forward"}, {"cases", std::move(forward)}}, forward_ok);

  struct Case {
    const char* space;
    std::size_t agents;
    EnumerationMode mode;
    std::uint64_t expected;
  };
  for (const Case& c : {Case{"B2", 2, EnumerationMode::direct, 3}, Case{"C3", 2, EnumerationMode::quotient, 7},
                        Case{"B2", 3, EnumerationMode::quotient, 3}}) {
    const Domain domain(fixture(c.space), c.agents, config.limits);
    const auto report = verify_theorem1_converse(domain, scan_options(config, c.mode));
    const auto forward_count = verify_theorem1_forward(domain).distinct_relations;
    json item = converse_json(report, domain);
    item["check"] = "converse";
    item["expected_survivors"] = c.expected;
    item["distinct_sufficientarian"] = forward_count;
    out.add(std::move(item), report.ok() && report.survivors == c.expected && report.survivors == forward_count);
  }
}

void reproduce_thm1_direct(const RunConfig& config, Reproduction& out) {
  const Domain domain(fixture("C3"), 2, config.limits);
  const auto direct = verify_theorem1_converse(domain, scan_options(config, EnumerationMode::direct));
  const auto quotient = verify_theorem1_converse(domain, scan_options(config, EnumerationMode::quotient));
  const bool same = direct.survivor_levels == quotient.survivor_levels;
  out.add(json{{"check", "direct_vs_quotient"},
               {"direct", converse_json(direct, domain)},
               {"quotient", converse_json(quotient, domain)},
               {"same_survivors", same}},
          direct.ok() && quotient.ok() && same && direct.survivors == 7);
}

void reproduce_thm2(const RunConfig& config, Reproduction& out) {
  for (const char* name : {"G2", "G3", "D12"}) {
    const Domain domain(fixture(name), 2, config.limits);
    const auto report = verify_theorem2(domain);
    out.add(theorem2_json(report, domain), report.ok());
  }
}

void reproduce_prop4(const RunConfig& config, Reproduction& out) {
  for (const auto& [name, expected] : {std::pair{"B2", 3}, std::pair{"C3", 13}}) {
    const Domain domain(fixture(name), 2, config.limits);
    const auto report = verify_prop4(domain, scan_options(config, EnumerationMode::quotient));
    json item = prop4_json(report);
    item["expected_survivors"] = expected;
    out.add(std::move(item), report.ok() && report.survivors == static_cast<std::uint64_t>(expected));
  }
}

void reproduce_rows(const std::vector<SignatureRow>& rows, Reproduction& out) {
  for (const auto& row : rows) {
    const Domain domain(fixture(row.space), row.agents);
    out.add(signature_row_json(row, domain), row.ok());
  }
}

void reproduce_example(bool first, bool second, Reproduction& out) {
  std::vector<SignatureRow> rows;
  for (const char* name : {"U5", "U9"}) {
    const Domain domain(fixture(name), 2);
    if (first) rows.push_back(verify_example1(domain));
    if (second) rows.push_back(verify_example2(domain));
  }
  reproduce_rows(rows, out);
}

void reproduce_example3(Reproduction& out) {
  const std::filesystem::path shipped = std::filesystem::path(SUFF_DATA_DIR) / "example3.json";
  const bool have_file = std::filesystem::exists(shipped);
  const auto report = verify_example3(have_file ? shipped : std::filesystem::path{});
  const Domain domain(fixture("ABC"), 3);
  json item = example3_json(report, domain);
  // The report names the fixture by file name so it does not depend on
  // where the checkout lives.
  if (have_file) item["axioms"]["rule"]["file"] = shipped.filename().string();
  out.add(std::move(item), report.ok());
}

}  // namespace

std::vector<Axiom> parse_axiom_list(std::string_view text, const Domain& domain) {
  if (text.empty() || text == "all") return applicable_axioms(domain);
  auto out = parse_names(text);
  for (Axiom a : out) {
    if (!applicable(a, domain)) {
      throw Error(ErrorCode::IncompatibleSpace,
                  std::string(axiom_name(a)) + " does not apply to space '" + domain.space().name() + "'");
    }
  }
  return out;
}

std::vector<std::string> reproduce_targets() {
  return {"thm1", "thm1_direct", "thm2", "prop4", "independence", "example1", "example2", "example3", "mariotti"};
}

CommandResult cmd_check(const RunConfig& config) {
  const Domain domain = make_domain(config);
  const auto loaded = load_rule(config, domain);
  const auto axioms = parse_axiom_list(config.axioms, domain);
  const auto r = materialize(loaded.rule, domain);
  json verdicts = json::array();
  bool holds = true;
  for (Axiom a : axioms) {
    const auto verdict = check(a, r, domain);
    holds = holds && verdict.holds;
    verdicts.push_back(verdict_json(verdict, domain));
  }
  json report = header("check");
  report["space"] = domain.space().name();
  report["agents"] = domain.agents();
  report["rule"] = loaded.spec;
  report["verdicts"] = std::move(verdicts);
  report["holds"] = holds;
  return {holds ? 0 : 1, std::move(report)};
}

CommandResult cmd_derive(const RunConfig& config) {
  const Domain domain = make_domain(config);
  const auto loaded = load_rule(config, domain);
  const auto r = materialize(loaded.rule, domain);
  json report = header("derive");
  report["space"] = domain.space().name();
  report["agents"] = domain.agents();
  report["rule"] = loaded.spec;
  report["classification"] = classification_json(classify(r, domain), domain);
  return {0, std::move(report)};
}

CommandResult cmd_enumerate(const RunConfig& config) {
  const Domain domain = make_domain(config);
  const auto items = enumeration_items(domain, config.mode);
  const auto scan = scan_weak_orders(domain, scan_options(config, config.mode),
                                     [&](const ExtensionalRelation& r) {
                                       return check_symmetry(r, domain.orbit_table()).holds;
                                     });
  const auto expected = ordered_bell(items);
  json report = header("enumerate");
  report["space"] = domain.space().name();
  report["agents"] = domain.agents();
  report["mode"] = to_string(config.mode);
  report["items"] = items;
  report["expected"] = expected;
  report["count"] = scan.candidates;
  report["symmetric"] = scan.matches;
  return {scan.candidates == expected ? 0 : 1, std::move(report)};
}

CommandResult cmd_search(const RunConfig& config) {
  const Domain domain = make_domain(config);
  const Signature signature{parse_names(config.satisfy), parse_names(config.violate)};
  if (signature.satisfy.empty() && signature.violate.empty()) {
    throw Error(ErrorCode::InvalidInput, "search needs --satisfy or --violate");
  }
  json names_satisfy = json::array();
  json names_violate = json::array();
  for (Axiom a : signature.satisfy) names_satisfy.push_back(axiom_name(a));
  for (Axiom a : signature.violate) names_violate.push_back(axiom_name(a));

  json report = header("search");
  report["space"] = domain.space().name();
  report["agents"] = domain.agents();
  report["mode"] = to_string(config.mode);
  report["satisfy"] = std::move(names_satisfy);
  report["violate"] = std::move(names_violate);
  try {
    const auto found = search_signature(domain, signature, scan_options(config, config.mode));
    report["candidates"] = found.candidates;
    report["count"] = found.count;
    report["first"] = {{"index", found.first.index},
                       {"levels", levels_json(domain, config.mode, found.first.levels)}};
    return {0, std::move(report)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyResult) throw;
    report["count"] = 0;
    report["first"] = nullptr;
    report["reason"] = e.what();
    return {1, std::move(report)};
  }
}

CommandResult cmd_reproduce(const RunConfig& config) {
  const auto& target = config.target;
  Reproduction out;
  if (target == "thm1") {
    reproduce_thm1(config, out);
  } else if (target == "thm1_direct") {
    reproduce_thm1_direct(config, out);
  } else if (target == "thm2") {
    reproduce_thm2(config, out);
  } else if (target == "prop4") {
    reproduce_prop4(config, out);
  } else if (target == "independence") {
    reproduce_rows(verify_independence(), out);
  } else if (target == "example1") {
    reproduce_example(true, false, out);
  } else if (target == "example2") {
    reproduce_example(false, true, out);
  } else if (target == "example3") {
    reproduce_example3(out);
  } else if (target == "mariotti") {
    reproduce_rows(verify_mariotti(), out);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown reproduce target '" + target + "'");
  }
  json report = header("reproduce");
  report["target"] = target;
  report["results"] = std::move(out.results);
  report["ok"] = out.ok;
  return {out.ok ? 0 : 1, std::move(report)};
}

CommandResult run_command(std::string_view command, const RunConfig& config) {
  try {
    if (command == "check") return cmd_check(config);
    if (command == "derive") return cmd_derive(config);
    if (command == "enumerate") return cmd_enumerate(config);
    if (command == "search") return cmd_search(config);
    if (command == "reproduce") return cmd_reproduce(config);
    throw Error(ErrorCode::InvalidInput, "unknown command '" + std::string(command) + "'");
  } catch (const Error& e) {
    json report = header(command);
    report["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    return {2, std::move(report)};
  } catch (const json::exception& e) {
    json report = header(command);
    report["error"] = {{"code", to_string(ErrorCode::InvalidInput)}, {"message", e.what()}};
    return {2, std::move(report)};
  }
}

}  // namespace suff
