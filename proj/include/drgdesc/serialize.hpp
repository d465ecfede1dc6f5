// JSON and text renderings of graphs, arrays, descendents and reports.
#pragma once

#include <json.hpp>
#include <string>

#include "drgdesc/leonard.hpp"
#include "drgdesc/qmatroid.hpp"
#include "drgdesc/verify.hpp"

namespace drg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "drgdesc/1";

Json to_json(const Rational& r);  // "num/den"
Rational rational_from_json(const Json& j);  // string "p/q", "p" or an integer

Json to_json(const IntersectionArray& ia);
Json to_json(const ClassicalParameters& cp);
Json to_json(const ParameterArray& pa);
ParameterArray parameter_array_from_json(const Json& j);
Json to_json(const ExpandedArray& ea);
ExpandedArray expanded_array_from_json(const Json& j);
Json to_json(const IntersectionNumbers& n);

// Exchange format: {"n": count, "labels": [string], "edges": [[i, j], ...]};
// "labels" is optional on input.  Output adds "family" and "intersection_array".
Json graph_to_json(const DistanceRegularGraph& g);
Graph graph_from_json(const Json& j);

Json scheme_to_json(const SchemeData& s, const std::optional<QPolyOrdering>& ord);
Json to_json(const DistanceRegularGraph& g, const DescendentRecord& r);
Json to_json(const QuantumMatroidReport& r);
Json to_json(const VerificationReport& r, bool timing);

std::string report_text(const VerificationReport& r, bool timing);

}  // namespace drg
