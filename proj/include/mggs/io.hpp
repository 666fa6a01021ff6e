#pragma once

// JSON forms of portraits, group specifications, Aut reports, check results
// and quotient dumps, plus the inline "r1;r2" row syntax.

#include <string>
#include <vector>

#include <json.hpp>

#include "mggs/autgrp.hpp"
#include "mggs/group.hpp"
#include "mggs/oracle.hpp"
#include "mggs/quotient.hpp"
#include "mggs/tree.hpp"

namespace mggs {

using Json = nlohmann::json;

/// { "p", "depth", "labels": [[u, t], ...] } in breadth-first vertex order.
Json portrait_to_json(const Portrait& g);
Portrait portrait_from_json(const Json& j);

/// { "p", "rows": [[...], ...] }
Json group_to_json(const MggsGroup& g);
MggsGroup group_from_json(const Json& j);

Json aut_report_to_json(const AutReport& r);
AutReport aut_report_from_json(const Json& j);

Json check_result_to_json(const CheckResult& r);
CheckResult check_result_from_json(const Json& j);
/// One compact JSON object per line.
std::string to_json_lines(const std::vector<CheckResult>& rs);
std::vector<CheckResult> from_json_lines(const std::string& text);

/// The sorted element list as an array of portraits.
Json quotient_to_json(const QuotientGroup& q);

Classification classification_from_string(const std::string& s);

/// "1,2,2,1;0,1,1,0" -> rows over F_p. ParseError on malformed text.
std::vector<FpVec> parse_rows(Residue p, const std::string& text);
/// Parses a JSON text; ParseError on malformed input or missing fields.
Json parse_json(const std::string& text);

}  // namespace mggs
