#include "jaco/io.hpp"

#include <algorithm>

#include "jaco/errors.hpp"

namespace jaco {

namespace {

Json arc_list(const std::vector<Arc>& arcs) {
    Json out = Json::array();
    for (const Arc& a : arcs) out.push_back({a.tail, a.head});
    return out;
}

std::size_t positive_int(const Json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw DomainError(std::string(what) + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

Json to_json(const JacoGraph& g) {
    Json j;
    j["kind"] = "jaco";
    j["n"] = g.n();
    j["arcs"] = arc_list(g.arcs());
    return j;
}

Json to_json(const DiGraph& g) {
    Json j;
    j["nu"] = g.nu();
    j["arcs"] = arc_list(g.arcs());
    return j;
}

Json to_json(const BrushAllocation& a) { return Json(a.values()); }

Json to_json(const CleaningTrace& t) {
    Json j;
    j["outcome"] = t.cleaned() ? "cleaned" : "undoable";
    Json steps = Json::array();
    for (const FiringStep& s : t.steps) {
        Json step;
        step["vertex"] = s.vertex;
        step["held"] = s.held;
        step["cleaned"] = arc_list(s.cleaned);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    j["remaining_dirty"] = arc_list(t.remaining_dirty);
    j["parked"] = t.parked;
    return j;
}

Json to_json(const BrushReport& r) {
    Json j;
    j["n"] = r.n;
    j["prime_index"] = r.prime_index;
    j["sum_prefix"] = r.sum_prefix;
    j["sum_hope"] = r.sum_hope;
    j["br"] = r.br;
    j["allocation"] = to_json(r.allocation);
    return j;
}

Json to_json(const OrientationCensus& c) {
    Json j;
    j["edges"] = arc_list(c.edge_order);
    Json entries = Json::array();
    for (const CensusEntry& e : c.entries) {
        Json entry;
        entry["mask"] = e.mask;
        if (e.cost.is_undoable()) {
            entry["cost"] = "undoable";
        } else {
            entry["cost"] = e.cost.value();
        }
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["min"] = c.minimum;
    j["undoable_count"] = c.undoable_count;
    return j;
}

Json to_json(const std::vector<TableRow>& rows) {
    Json out = Json::array();
    for (const TableRow& r : rows) {
        Json j;
        j["i"] = r.i;
        j["d_minus"] = r.d_minus;
        j["d_plus"] = r.d_plus_inf;
        j["prime_vertex"] = r.prime_vertex;
        j["br"] = r.br;
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const std::vector<HopeBoundRow>& rows) {
    Json out = Json::array();
    for (const HopeBoundRow& r : rows) {
        Json j;
        j["n"] = r.n;
        j["prime_index"] = r.prime_index;
        j["br_jaco"] = r.br_jaco;
        j["hope_size"] = r.hope_size;
        j["br_hope"] = r.br_hope;
        j["bound_holds"] = r.bound_holds;
        j["linking_edges"] = r.linking_edges;
        out.push_back(std::move(j));
    }
    return out;
}

DiGraph digraph_from_json(const Json& doc) {
    if (!doc.is_object()) throw DomainError("graph document must be a JSON object");
    std::size_t nu = 0;
    if (doc.contains("nu")) {
        nu = positive_int(doc["nu"], "\"nu\"");
    } else if (doc.contains("n")) {
        nu = positive_int(doc["n"], "\"n\"");
    } else {
        throw DomainError("graph document needs a vertex count \"n\" or \"nu\"");
    }
    if (!doc.contains("arcs") || !doc["arcs"].is_array()) {
        throw DomainError("graph document needs an \"arcs\" array");
    }
    std::vector<Arc> arcs;
    for (const Json& pair : doc["arcs"]) {
        if (!pair.is_array() || pair.size() != 2) throw DomainError("each arc must be a [tail, head] pair");
        arcs.push_back({positive_int(pair[0], "arc endpoint"), positive_int(pair[1], "arc endpoint")});
    }
    const bool claims_jaco = doc.contains("kind") && doc["kind"] == "jaco";
    if (claims_jaco) {
        if (nu < 1) throw DomainError("a Jaco graph needs at least one vertex");
        if (!std::is_sorted(arcs.begin(), arcs.end()) || !is_jaco_arc_list(nu, arcs)) {
            throw DomainError("arc list is not that of J_" + std::to_string(nu) + "(1)");
        }
    }
    return DiGraph(nu, std::move(arcs));
}

BrushAllocation allocation_from_json(const Json& doc) {
    if (!doc.is_array()) throw DomainError("allocation must be a JSON array of brush counts");
    std::vector<Brushes> beta;
    for (const Json& v : doc) beta.push_back(positive_int(v, "brush count"));
    return BrushAllocation(std::move(beta));
}

Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace jaco
