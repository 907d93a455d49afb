#include "jaco/brush.hpp"

#include <string>

#include "jaco/errors.hpp"

namespace jaco {

Brushes OrientationCost::value() const {
    if (undoable_) throw UndoableError("orientation is undoable; it has no finite cost");
    return value_;
}

std::string OrientationCost::to_string() const {
    return undoable_ ? std::string("undoable") : std::to_string(value_);
}

BrushReport brush_number(const JacoGraph& g) {
    BrushReport r;
    r.n = g.n();
    r.prime_index = prime_jaconian(g);
    std::vector<Brushes> beta(g.n(), 0);

    for (Vertex j = 1; j <= r.prime_index; ++j) {
        if (g.out_deg(j) < g.in_deg(j)) {
            throw InternalConsistencyError("d^+(v_" + std::to_string(j) + ") < d^-(v_" +
                                           std::to_string(j) + ") before the prime Jaconian vertex of J_" +
                                           std::to_string(g.n()));
        }
        beta[j - 1] = g.out_deg(j) - g.in_deg(j);
        r.sum_prefix += beta[j - 1];
    }
    for (Vertex j = r.prime_index + 1; j <= g.n(); ++j) {
        const std::size_t shortfall_from = g.n() - j;
        beta[j - 1] = shortfall_from > g.in_deg(j) ? shortfall_from - g.in_deg(j) : 0;
        r.sum_hope += beta[j - 1];
    }
    r.br = r.sum_prefix + r.sum_hope;
    r.allocation = BrushAllocation(std::move(beta));
    return r;
}

BrushAllocation minimal_allocation(const DiGraph& g) {
    if (!is_acyclic(g)) {
        throw UndoableError("orientation undoable: no finite allocation cleans a cyclic digraph");
    }
    const auto out = g.out_degrees();
    const auto in = g.in_degrees();
    std::vector<Brushes> beta(g.nu(), 0);
    for (Vertex v = 1; v <= g.nu(); ++v) beta[v - 1] = out[v] > in[v] ? out[v] - in[v] : 0;
    return BrushAllocation(std::move(beta));
}

OrientationCost orientation_cost(const DiGraph& g) {
    if (!is_acyclic(g)) return OrientationCost::undoable();
    return OrientationCost::finite(minimal_allocation(g).total());
}

}  // namespace jaco
