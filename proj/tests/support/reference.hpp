#pragma once

// Test-only reference routines. They deliberately share no code with the
// library: the Jaco graph is built pair by pair from the arc rule, cycles are
// found by depth-first colouring, and costs come from searching allocations.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "jaco/cleaning.hpp"
#include "jaco/digraph.hpp"

namespace jaco::reference {

struct NaiveJaco {
    std::size_t n = 0;
    std::vector<std::vector<bool>> adj;  // adj[i][j] for 1 <= i, j <= n
    std::vector<std::size_t> in_deg;

    std::vector<Arc> arcs() const {
        std::vector<Arc> out;
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j)
                if (adj[i][j]) out.push_back({i, j});
        return out;
    }
    std::size_t out_deg(Vertex i) const {
        std::size_t d = 0;
        for (Vertex j = 1; j <= n; ++j) d += adj[i][j];
        return d;
    }
    std::size_t degree(Vertex i) const { return in_deg[i] + out_deg(i); }
};

// Arc (i, j) iff 2i - d^-(v_i) >= j, tested for every pair.
inline NaiveJaco naive_jaco(std::size_t n) {
    NaiveJaco g;
    g.n = n;
    g.adj.assign(n + 1, std::vector<bool>(n + 1, false));
    g.in_deg.assign(n + 1, 0);
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            if (2 * i >= j + g.in_deg[i]) {
                g.adj[i][j] = true;
                ++g.in_deg[j];
            }
        }
    }
    return g;
}

inline bool has_cycle_dfs(const DiGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.nu() + 1);
    for (const Arc& a : g.arcs()) adj[a.tail].push_back(a.head);
    std::vector<int> colour(g.nu() + 1, 0);
    std::function<bool(Vertex)> visit = [&](Vertex v) {
        colour[v] = 1;
        for (Vertex w : adj[v]) {
            if (colour[w] == 1) return true;
            if (colour[w] == 0 && visit(w)) return true;
        }
        colour[v] = 2;
        return false;
    };
    for (Vertex v = 1; v <= g.nu(); ++v)
        if (colour[v] == 0 && visit(v)) return true;
    return false;
}

// Smallest total over all allocations with total <= budget that the simulator
// accepts; nullopt if none does.
inline std::optional<Brushes> min_allocation_by_search(const DiGraph& g, Brushes budget) {
    if (g.nu() == 0) return Brushes{0};
    std::vector<Brushes> beta(g.nu(), 0);
    // Tries every split of `left` brushes over vertices v..nu-1.
    std::function<bool(std::size_t, Brushes)> place = [&](std::size_t v, Brushes left) {
        if (v + 1 == g.nu()) {
            beta[v] = left;
            return simulate(g, BrushAllocation(beta)).cleaned();
        }
        for (Brushes b = 0; b <= left; ++b) {
            beta[v] = b;
            if (place(v + 1, left - b)) return true;
        }
        return false;
    };
    for (Brushes total = 0; total <= budget; ++total) {
        if (place(0, total)) return total;
    }
    return std::nullopt;
}

// Every simple graph on nu labelled vertices, as a digraph with upward arcs.
inline std::vector<DiGraph> all_simple_graphs(std::size_t nu) {
    std::vector<Arc> pairs;
    for (Vertex i = 1; i <= nu; ++i)
        for (Vertex j = i + 1; j <= nu; ++j) pairs.push_back({i, j});
    std::vector<DiGraph> out;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
        std::vector<Arc> arcs;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((subset >> k) & 1U) arcs.push_back(pairs[k]);
        out.emplace_back(nu, std::move(arcs));
    }
    return out;
}

// Every orientation of g, flipping arcs by subset bits in arc-list order.
inline std::vector<DiGraph> all_orientations(const DiGraph& g) {
    std::vector<DiGraph> out;
    const auto& arcs = g.arcs();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << arcs.size()); ++subset) {
        std::vector<Arc> oriented;
        for (std::size_t k = 0; k < arcs.size(); ++k)
            oriented.push_back((subset >> k) & 1U ? Arc{arcs[k].head, arcs[k].tail} : arcs[k]);
        out.emplace_back(g.nu(), std::move(oriented));
    }
    return out;
}

}  // namespace jaco::reference
