#pragma once

#include <string>

#include "suff/harness.hpp"
#include "suff/io.hpp"

namespace suff {

// JSON views of library results. Profiles and elements are written as
// identifiers, agent sets as ascending agent lists. Nothing that depends on
// timing or the worker count is ever included.

inline constexpr int kReportSchema = 1;

json element_set_json(ElementSet s, const Space& space);
json witness_json(const Witness& w, const Domain& domain);
json verdict_json(const AxiomVerdict& v, const Domain& domain);
/// Classes best to worst, e.g. [["c"], ["b"], ["a"]].
json star_order_json(const StarOrder& star, const Domain& domain);
json classification_json(const Classification& c, const Domain& domain);

json forward_json(const ForwardReport& r);
json converse_json(const ConverseReport& r, const Domain& domain);
json theorem2_json(const Theorem2Report& r, const Domain& domain);
json prop4_json(const Prop4Report& r);
json signature_row_json(const SignatureRow& row, const Domain& domain);
json example3_json(const Example3Report& r, const Domain& domain);

/// Indented plain-text rendering of a report; carries the same content.
std::string render_text(const json& report);

}  // namespace suff
