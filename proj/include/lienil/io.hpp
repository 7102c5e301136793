#pragma once

// JSON formats: the algebra document (field descriptor, n, generator
// matrices with entries in the scalar text form) and the analysis reports.

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lienil/chain.hpp"

namespace lienil {

using json = nlohmann::json;

struct AlgebraDocument {
    FieldPtr field;
    int n = 0;
    std::vector<Matrix> generators;
    std::string label;
};

json field_to_json(const FieldSpec& f);
FieldPtr field_from_json(const json& j);

/// Throws lienil::error with a JSON-path-accurate message on bad input.
AlgebraDocument parse_algebra_document(const json& j);
AlgebraDocument load_algebra_document(const std::string& path);
json to_json(const AlgebraDocument& doc);

json report_to_json(const BoundReport& rep);
json trace_to_json(const ChainTrace& t);
json verification_to_json(const ChainVerification& v);
json sensitivity_to_json(const SensitivityReport& rep);

/// Field flag syntax: "q", "gfP", or "gfP^K" (built-in modulus table).
FieldPtr parse_field_flag(const std::string& flag);

}  // namespace lienil
