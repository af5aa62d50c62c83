#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qtrunc/identities.hpp"
#include "qtrunc/inequalities.hpp"
#include "qtrunc/partition_functions.hpp"

namespace qtrunc {

using Json = nlohmann::ordered_json;

// All JSON reports share the leading keys
//   kind, <id | family | function>, params, status, checked_up_to, violations
// in that order. `checked_up_to` is the largest index (power of q or n) checked.

Json to_json(const IdentityReport& report);
Json to_json(const InequalityReport& report);
Json to_json(const ValueTable& table);

/// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
std::string csv_field(std::string_view field);

std::string to_csv(const IdentityReport& report);
/// One row per k: threshold, violation counts and the first failing n.
std::string to_csv(const InequalityReport& report);
std::string to_csv(const ValueTable& table);

}  // namespace qtrunc
