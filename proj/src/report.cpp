#include "suff/report.hpp"

#include <map>
#include <sstream>

namespace suff {

namespace {

json agents_json(AgentSet set) {
  json out = json::array();
  for (std::size_t i = 0; i < 32; ++i) {
    if ((set >> i) & 1U) out.push_back(i);
  }
  return out;
}

json pair_json(const std::optional<std::pair<ProfileIndex, ProfileIndex>>& pair, const Domain& domain) {
  if (!pair) return nullptr;
  return json::array({profile_to_json(pair->first, domain), profile_to_json(pair->second, domain)});
}

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured() && !(e.is_array() && e.size() <= 8 && is_scalar_array(e))) return false;
  }
  return true;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out = "(";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + scalar_text(j[k]);
    return out + ")";
  }
  return j.dump();
}

void render(const json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        out << pad << key << ":\n";
        render(value, indent + 1, out);
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        out << pad << "-\n";
        render(value, indent + 1, out);
      } else {
        out << pad << "- " << scalar_text(value) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

json element_set_json(ElementSet s, const Space& space) { return space.ids_of(s); }

json witness_json(const Witness& w, const Domain& domain) {
  json out{{"clause", w.clause}};
  json profiles = json::array();
  for (ProfileIndex x : w.profiles) profiles.push_back(profile_to_json(x, domain));
  out["profiles"] = std::move(profiles);
  out["agents"] = w.agents;
  json elements = json::array();
  for (Element e : w.elements) elements.push_back(domain.space().id(e));
  out["elements"] = std::move(elements);
  if (w.coalition) out["coalition"] = agents_json(*w.coalition);
  return out;
}

json verdict_json(const AxiomVerdict& v, const Domain& domain) {
  json out{{"axiom", axiom_name(v.axiom)},
           {"holds", v.holds},
           {"witness", v.witness ? witness_json(*v.witness, domain) : json(nullptr)},
           {"checked", v.checked}};
  if (v.axiom == Axiom::prioritarian_threshold) {
    json betas = json::array();
    for (const auto& status : v.per_beta) {
      betas.push_back({{"beta", domain.space().id(status.beta)},
                       {"holds", status.holds},
                       {"witness", status.witness ? witness_json(*status.witness, domain) : json(nullptr)}});
    }
    out["per_beta"] = std::move(betas);
  }
  return out;
}

json star_order_json(const StarOrder& star, const Domain& domain) {
  json out{{"well_defined", star.well_defined}};
  std::map<int, std::vector<std::string>, std::greater<>> classes;
  for (Element a = 0; a < star.levels.size(); ++a) classes[star.levels[a]].push_back(domain.space().id(a));
  json levels = json::array();
  for (const auto& [level, ids] : classes) levels.push_back(ids);
  out["classes"] = std::move(levels);
  out["witness"] = star.witness ? witness_json(*star.witness, domain) : json(nullptr);
  return out;
}

json classification_json(const Classification& c, const Domain& domain) {
  const Space& space = domain.space();
  const auto& s = c.sufficient;
  json tags = json::array();
  if (c.total_indifference) tags.push_back("total_indifference");
  if (s.sufficientarian) tags.push_back("sufficientarian");
  if (c.monotone_sufficientarian) tags.push_back("monotone_sufficientarian");
  if (c.generalized_threshold) tags.push_back("generalized_threshold");
  if (c.threshold) tags.push_back("threshold");
  if (c.endogenous_leximin) tags.push_back("endogenous_leximin");
  return json{
      {"tags", std::move(tags)},
      {"star_order", star_order_json(s.star, domain)},
      {"star_levels", s.star.well_defined ? s.star.level_count() : 0},
      {"sufficientarian",
       {{"holds", s.sufficientarian},
        {"S", s.sufficientarian ? element_set_json(s.set, space) : json(nullptr)},
        {"reason", s.reason.empty() ? json(nullptr) : json(s.reason)},
        {"mismatch", pair_json(s.mismatch, domain)}}},
      {"monotone_sufficientarian", c.monotone_sufficientarian},
      {"generalized_threshold",
       {{"holds", c.generalized_threshold},
        {"F", c.filter ? element_set_json(*c.filter, space) : json(nullptr)}}},
      {"threshold", {{"holds", c.threshold}, {"beta", c.beta ? json(space.id(*c.beta)) : json(nullptr)}}},
      {"endogenous_leximin",
       {{"holds", c.endogenous_leximin}, {"mismatch", pair_json(c.leximin_mismatch, domain)}}},
  };
}

json forward_json(const ForwardReport& r) {
  return json{{"space", r.space},
              {"agents", r.agents},
              {"subsets", r.subsets},
              {"distinct_relations", r.distinct_relations},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

json converse_json(const ConverseReport& r, const Domain& domain) {
  json sets = json::array();
  for (ElementSet s : r.survivor_sets) sets.push_back(element_set_json(s, domain.space()));
  return json{{"space", r.space},
              {"agents", r.agents},
              {"mode", to_string(r.mode)},
              {"candidates", r.candidates},
              {"survivors", r.survivors},
              {"certified", r.certified},
              {"sufficient_sets", std::move(sets)},
              {"first_uncertified", r.first_uncertified ? json(*r.first_uncertified) : json(nullptr)},
              {"ok", r.ok()}};
}

json theorem2_json(const Theorem2Report& r, const Domain& domain) {
  const Space& space = domain.space();
  return json{{"space", r.space},
              {"subsets", r.subsets},
              {"filters", r.filters},
              {"mismatches", r.mismatches},
              {"first_mismatch", r.first_mismatch ? element_set_json(*r.first_mismatch, space) : json(nullptr)},
              {"principal_checked", r.principal_checked},
              {"principal_failures", r.principal_failures},
              {"dcc", check_dcc_finite(space).reason},
              {"ok", r.ok()}};
}

json prop4_json(const Prop4Report& r) {
  return json{{"space", r.space},
              {"agents", r.agents},
              {"candidates", r.candidates},
              {"survivors", r.survivors},
              {"certified", r.certified},
              {"weak_orders_on_A", r.weak_orders_on_a},
              {"distinct_endogenous_leximin", r.distinct_leximin},
              {"ok", r.ok()}};
}

json signature_row_json(const SignatureRow& row, const Domain& domain) {
  json checks = json::array();
  for (const auto& c : row.checks) {
    json v = verdict_json(c.verdict, domain);
    v["expected"] = c.expected;
    if (!c.verdict.holds) v["replayed"] = c.replayed;
    v["ok"] = c.ok();
    checks.push_back(std::move(v));
  }
  json out{{"label", row.label},
           {"space", row.space},
           {"agents", row.agents},
           {"rule", row.rule},
           {"checks", std::move(checks)}};
  if (!row.betas.empty()) {
    json betas = json::array();
    for (const auto& b : row.betas) {
      betas.push_back({{"beta", domain.space().id(b.beta)}, {"expected", b.expected}, {"holds", b.actual}});
    }
    out["prioritarian_threshold_betas"] = std::move(betas);
  }
  out["ok"] = row.ok();
  return out;
}

json example3_json(const Example3Report& r, const Domain& domain) {
  return json{{"axioms", signature_row_json(r.axioms, domain)},
              {"classification", classification_json(r.classification, domain)},
              {"star_order_c_b_a", r.star_is_chain_cba},
              {"fixture_bbb_above_acc", r.fixture_prefers_bbb},
              {"leximin_bbb_above_acc", r.leximin_prefers_bbb},
              {"ok", r.ok()}};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace suff
