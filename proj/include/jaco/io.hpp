#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "jaco/brush.hpp"
#include "jaco/cleaning.hpp"
#include "jaco/experiments.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracle.hpp"

namespace jaco {

/// Insertion-ordered so serialized key order is fixed.
using Json = nlohmann::ordered_json;

/// {"kind": "jaco", "n": n, "arcs": [[i, j], ...]}
Json to_json(const JacoGraph& g);
/// {"nu": nu, "arcs": [[tail, head], ...]}
Json to_json(const DiGraph& g);
/// [b_1, ..., b_nu]
Json to_json(const BrushAllocation& a);
Json to_json(const CleaningTrace& t);
Json to_json(const BrushReport& r);
Json to_json(const OrientationCensus& c);
Json to_json(const std::vector<TableRow>& rows);
Json to_json(const std::vector<HopeBoundRow>& rows);

/// Reads a graph document. The vertex count may be given as "n" or "nu"; when
/// "kind" is "jaco" the arc list must be exactly that of J_n(1). Throws
/// DomainError on malformed input.
DiGraph digraph_from_json(const Json& doc);
BrushAllocation allocation_from_json(const Json& doc);

/// Parses a whole stream as JSON; throws DomainError on a syntax error.
Json read_json(std::istream& in);

}  // namespace jaco
