#include "jaco/experiments.hpp"

#include <string>

#include "jaco/brush.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"

namespace jaco {

std::vector<TableRow> table1(std::size_t max_n) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    const JacoGraph wide = build_jaco(2 * max_n);
    std::vector<TableRow> rows;
    rows.reserve(max_n);
    for (std::size_t i = 1; i <= max_n; ++i) {
        const JacoGraph g = build_jaco(i);
        rows.push_back({i, wide.in_deg(i), wide.inf_out_deg(i), prime_jaconian(g), brush_number(g).br});
    }
    return rows;
}

std::vector<HopeBoundRow> hope_bound_experiment(std::size_t max_n) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    std::vector<HopeBoundRow> rows;
    rows.reserve(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const JacoGraph g = build_jaco(n);
        const BrushReport report = brush_number(g);
        HopeBoundRow row;
        row.n = n;
        row.prime_index = report.prime_index;
        row.br_jaco = report.br;
        row.hope_size = n - report.prime_index;
        row.br_hope = row.hope_size == 0 ? 0 : complete_graph_brush_number(row.hope_size);
        row.bound_holds = row.br_jaco >= row.br_hope;
        row.linking_edges = linking_edges(n);
        rows.push_back(row);
    }
    return rows;
}

std::size_t linking_edges(std::size_t n) {
    const JacoGraph g = build_jaco(n);
    const Vertex cut = prime_jaconian(g);
    std::size_t count = 0;
    for (Vertex a = 1; a <= cut; ++a) {
        const VertexRange out = g.out_neighbours(a);
        if (out.empty() || out.last <= cut) continue;
        count += out.last - std::max(out.first, cut + 1) + 1;
    }
    return count;
}

bool union_additivity_check(const std::vector<DiGraph>& components, std::size_t cap_eps) {
    if (components.empty()) throw DomainError("union needs at least one component");
    DiGraph whole = components.front();
    Brushes parts = brute_force_brush_number(UnderlyingGraph(components.front()), cap_eps);
    for (std::size_t k = 1; k < components.size(); ++k) {
        whole = disjoint_union(whole, components[k]);
        parts += brute_force_brush_number(UnderlyingGraph(components[k]), cap_eps);
    }
    return brute_force_brush_number(UnderlyingGraph(whole), cap_eps) == parts;
}

}  // namespace jaco
