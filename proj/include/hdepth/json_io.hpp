#pragma once

// JSON forms of partitions, decompositions, candidates, and tables. Variables
// are referred to by 0-based index; degree vectors are integer arrays.

#include <string_view>

#include <json.hpp>

#include "hdepth/partition.hpp"
#include "hdepth/stanley.hpp"
#include "hdepth/table.hpp"

namespace hdepth {

nlohmann::json to_json(const DegreeVector& v);
nlohmann::json to_json(VarSet vars);
// [{"degree": [..], "value": k}, ...] over the whole box, lexicographic.
nlohmann::json to_json(const HilbertTable& table);
// {"g": [..], "intervals": [{"lower": [..], "upper": [..]}, ...]}
nlohmann::json to_json(const HilbertPartition& p);
// [{"vars": [..], "shift": [..]}, ...]
nlohmann::json to_json(const HilbertDecomposition& dec);
// [{"vars": [..], "shift": [..], "choice": ["1", "0"], "terms": [{"summand": k, "coeff": "1"}]}, ...]
nlohmann::json to_json(const StanleyDecomposition& sd, const ModuleSpec& spec);

// Accepts either an inline JSON document or the path of a file holding one.
nlohmann::json load_json_argument(std::string_view text_or_path);

HilbertPartition partition_from_json(const nlohmann::json& j);
// {"components": [{"vars": [..], "shift": [..], "choice": [1, "2/3", ...]}, ...]}
StanleyCandidate candidate_from_json(const nlohmann::json& j);

std::string rational_string(const Rational& q);
Rational parse_rational(const nlohmann::json& j);

}  // namespace hdepth
