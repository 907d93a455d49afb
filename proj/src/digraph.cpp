#include "jaco/digraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jaco/errors.hpp"

namespace jaco {

DiGraph::DiGraph(std::size_t nu, std::vector<Arc> arcs) : nu_(nu), arcs_(std::move(arcs)) {
    std::set<Arc> seen;
    for (const Arc& a : arcs_) {
        if (a.tail < 1 || a.tail > nu_ || a.head < 1 || a.head > nu_) {
            throw DomainError("arc (" + std::to_string(a.tail) + ", " + std::to_string(a.head) +
                              ") has an endpoint outside 1.." + std::to_string(nu_));
        }
        if (a.tail == a.head) {
            throw DomainError("self-loop at vertex " + std::to_string(a.tail));
        }
        if (!seen.insert(a).second) {
            throw DomainError("duplicate arc (" + std::to_string(a.tail) + ", " +
                              std::to_string(a.head) + ")");
        }
    }
}

std::vector<std::size_t> DiGraph::out_degrees() const {
    std::vector<std::size_t> deg(nu_ + 1, 0);
    for (const Arc& a : arcs_) ++deg[a.tail];
    return deg;
}

std::vector<std::size_t> DiGraph::in_degrees() const {
    std::vector<std::size_t> deg(nu_ + 1, 0);
    for (const Arc& a : arcs_) ++deg[a.head];
    return deg;
}

DiGraph DiGraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
    return DiGraph(nu_, std::move(rev));
}

bool is_acyclic(const DiGraph& g) {
    std::vector<std::vector<Vertex>> out(g.nu() + 1);
    auto indeg = g.in_degrees();
    for (const Arc& a : g.arcs()) out[a.tail].push_back(a.head);

    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= g.nu(); ++v) {
        if (indeg[v] == 0) ready.push_back(v);
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex w : out[v]) {
            if (--indeg[w] == 0) ready.push_back(w);
        }
    }
    return removed == g.nu();
}

DiGraph disjoint_union(const DiGraph& a, const DiGraph& b) {
    std::vector<Arc> arcs = a.arcs();
    arcs.reserve(a.eps() + b.eps());
    for (const Arc& arc : b.arcs()) arcs.push_back({arc.tail + a.nu(), arc.head + a.nu()});
    return DiGraph(a.nu() + b.nu(), std::move(arcs));
}

DiGraph complete_graph(std::size_t m) {
    if (m < 1) throw DomainError("complete graph needs at least one vertex");
    std::vector<Arc> arcs;
    for (Vertex i = 1; i <= m; ++i) {
        for (Vertex j = i + 1; j <= m; ++j) arcs.push_back({i, j});
    }
    return DiGraph(m, std::move(arcs));
}

}  // namespace jaco
