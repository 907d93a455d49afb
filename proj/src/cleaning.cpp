#include "jaco/cleaning.hpp"

#include <numeric>
#include <string>

#include "jaco/errors.hpp"

namespace jaco {

Brushes BrushAllocation::total() const noexcept {
    return std::accumulate(beta_.begin(), beta_.end(), Brushes{0});
}

CleaningTrace simulate(const DiGraph& g, const BrushAllocation& alloc) {
    return simulate(g, alloc, [](std::span<const Vertex> eligible) { return eligible.front(); });
}

CleaningTrace simulate(const DiGraph& g, const BrushAllocation& alloc, const FiringRule& rule) {
    if (alloc.size() != g.nu()) {
        throw DomainError("allocation has " + std::to_string(alloc.size()) +
                          " entries but the graph has " + std::to_string(g.nu()) + " vertices");
    }

    const auto& arcs = g.arcs();
    std::vector<std::vector<std::size_t>> out_arcs(g.nu() + 1);
    for (std::size_t k = 0; k < arcs.size(); ++k) out_arcs[arcs[k].tail].push_back(k);

    std::vector<bool> dirty(arcs.size(), true);
    auto dirty_in = g.in_degrees();
    auto dirty_out = g.out_degrees();
    std::vector<bool> fired(g.nu() + 1, false);
    std::vector<Brushes> held(g.nu() + 1, 0);
    for (Vertex v = 1; v <= g.nu(); ++v) held[v] = alloc[v];

    CleaningTrace trace;
    std::size_t remaining = arcs.size();
    std::vector<Vertex> eligible;
    while (remaining > 0) {
        eligible.clear();
        for (Vertex v = 1; v <= g.nu(); ++v) {
            if (!fired[v] && dirty_in[v] == 0 && held[v] >= dirty_out[v]) eligible.push_back(v);
        }
        if (eligible.empty()) break;

        const Vertex v = rule(eligible);
        if (v < 1 || v > g.nu() || fired[v] || dirty_in[v] != 0 || held[v] < dirty_out[v]) {
            throw DomainError("firing rule chose ineligible vertex " + std::to_string(v));
        }
        FiringStep step{v, held[v], {}};
        for (std::size_t k : out_arcs[v]) {
            if (!dirty[k]) continue;
            dirty[k] = false;
            --remaining;
            --held[v];
            ++held[arcs[k].head];
            --dirty_in[arcs[k].head];
            step.cleaned.push_back(arcs[k]);
        }
        dirty_out[v] = 0;
        fired[v] = true;
        trace.steps.push_back(std::move(step));
    }

    trace.outcome = remaining == 0 ? Outcome::Cleaned : Outcome::Undoable;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (dirty[k]) trace.remaining_dirty.push_back(arcs[k]);
    }
    trace.parked.assign(held.begin() + 1, held.end());
    return trace;
}

bool is_cleanable(const DiGraph& g) { return is_acyclic(g); }

bool verify_allocation(const DiGraph& g, const BrushAllocation& alloc) {
    return simulate(g, alloc).cleaned();
}

}  // namespace jaco
