#pragma once

#include <string>

#include "json.hpp"

#include "strictcol/graph.hpp"
#include "strictcol/lambda.hpp"
#include "strictcol/list_assignment.hpp"
#include "strictcol/list_color.hpp"
#include "strictcol/strict.hpp"

namespace strictcol::io {

// Key order is kept as written so output is stable and readable.
using Json = nlohmann::ordered_json;

/// Parses text, throwing ParseError with the parser's message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// {"n": int, "edges": [[u,v],...], "parts": [[v,...],...]?}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"lists": {"0": [1,2], ...}}
Json to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j);

// {"0": color, ...}
Json to_json(const ColoringWitness& w);
ColoringWitness coloring_from_json(const Json& j, int n);

Json to_json(const ColorResult& r);

// {"lambda": [1,2], "lists": {...}, "groups": [[0,1,2],[3]]}
Json to_json(const LambdaAssignment& a);
LambdaAssignment lambda_assignment_from_json(const Json& j);

Json to_json(const LambdaReport& r);

// {"kind": "bad-assignment", "assignment": {...}, "nodes_searched": int}
Json to_json(const BadAssignmentWitness& w);
/// Accepts the wrapped form above or a bare LambdaAssignment object.
BadAssignmentWitness bad_witness_from_json(const Json& j);

// {"kind": "partition", "lambda": [...], "blocks": [{"k","vertices","evidence"}...]}
Json to_json(const PartitionabilityWitness& w);
PartitionabilityWitness partition_witness_from_json(const Json& j);

Json to_json(const Case2Transcript& t);

Json to_json(const LambdaVerdict& v);
Json to_json(const ChoosabilityVerdict& v);
Json to_json(const StrictDecision& d);

} // namespace strictcol::io
