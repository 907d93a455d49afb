#include "jaco/jaco_graph.hpp"

#include <algorithm>
#include <string>

#include "jaco/errors.hpp"

namespace jaco {

namespace {

struct Degrees {
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
    std::vector<Vertex> first_tail;
};

// Runs the arc rule over v_1..v_limit. Each v_i sends arcs to the contiguous
// range i+1..min(limit, 2i - d^-(v_i)), so in-degrees are accumulated with a
// difference array and d^-(v_i) is final by the time v_i is reached.
Degrees sequential_degrees(std::size_t limit) {
    Degrees d;
    d.in.assign(limit + 1, 0);
    d.out.assign(limit + 1, 0);
    d.first_tail.assign(limit + 1, 0);
    std::vector<std::ptrdiff_t> diff(limit + 2, 0);
    std::ptrdiff_t running = 0;
    Vertex tails_known_upto = 1;
    for (Vertex i = 1; i <= limit; ++i) {
        running += diff[i];
        d.in[i] = static_cast<std::size_t>(running);
        const std::size_t reach = 2 * i - d.in[i];
        const Vertex last = std::min<std::size_t>(limit, reach);
        if (last > i) {
            d.out[i] = last - i;
            diff[i + 1] += 1;
            diff[last + 1] -= 1;
            for (Vertex j = std::max(tails_known_upto, i) + 1; j <= last; ++j) d.first_tail[j] = i;
            tails_known_upto = std::max(tails_known_upto, last);
        }
    }
    return d;
}

}  // namespace

JacoGraph build_jaco(std::size_t n) {
    if (n < 1) throw DomainError("vertex count must be >= 1");

    Degrees wide = sequential_degrees(2 * n);
    JacoGraph g;
    g.n_ = n;
    g.in_deg_.assign(wide.in.begin(), wide.in.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    g.inf_out_deg_.assign(wide.out.begin(), wide.out.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    g.first_tail_.assign(wide.first_tail.begin(),
                         wide.first_tail.begin() + static_cast<std::ptrdiff_t>(n) + 1);
    g.out_deg_.assign(n + 1, 0);
    for (Vertex i = 1; i <= n; ++i) {
        g.out_deg_[i] = std::min(g.inf_out_deg_[i], n - i);
        g.eps_ += g.out_deg_[i];
    }
    return g;
}

Vertex JacoGraph::check(Vertex i) const {
    if (i < 1 || i > n_) {
        throw DomainError("vertex index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }
    return i;
}

VertexRange JacoGraph::out_neighbours(Vertex i) const {
    check(i);
    return {i + 1, i + out_deg_[i]};
}

VertexRange JacoGraph::in_neighbours(Vertex i) const {
    check(i);
    if (in_deg_[i] == 0) return {};
    return {first_tail_[i], first_tail_[i] + in_deg_[i] - 1};
}

bool JacoGraph::has_arc(Vertex tail, Vertex head) const {
    if (tail < 1 || tail > n_ || head < 1 || head > n_) return false;
    return out_neighbours(tail).contains(head);
}

std::vector<Arc> JacoGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(eps_);
    for (Vertex i = 1; i <= n_; ++i) {
        for (Vertex j = i + 1; j <= i + out_deg_[i]; ++j) out.push_back({i, j});
    }
    return out;
}

DiGraph JacoGraph::to_digraph() const { return DiGraph(n_, arcs()); }

std::size_t HopeView::arc_count() const noexcept {
    const std::size_t k = vertices.size();
    return k < 2 ? 0 : k * (k - 1) / 2;
}

std::vector<Arc> HopeView::arcs() const {
    std::vector<Arc> out;
    if (vertices.empty()) return out;
    for (Vertex a = vertices.first; a <= vertices.last; ++a) {
        for (Vertex b = a + 1; b <= vertices.last; ++b) out.push_back({a, b});
    }
    return out;
}

std::size_t finite_degree(const JacoGraph& g, Vertex i) { return g.in_deg(i) + g.out_deg(i); }

std::vector<Vertex> jaconian_set(const JacoGraph& g) {
    std::size_t best = 0;
    for (Vertex i = 1; i <= g.n(); ++i) best = std::max(best, finite_degree(g, i));
    std::vector<Vertex> out;
    for (Vertex i = 1; i <= g.n(); ++i) {
        if (finite_degree(g, i) == best) out.push_back(i);
    }
    return out;
}

Vertex prime_jaconian(const JacoGraph& g) { return jaconian_set(g).front(); }

HopeView hope_subgraph(const JacoGraph& g) {
    HopeView h;
    h.prime_index = prime_jaconian(g);
    h.vertices = {h.prime_index + 1, g.n()};
    for (Vertex a = h.vertices.first; a <= h.vertices.last; ++a) {
        if (a + g.out_deg(a) < g.n()) {
            throw InternalConsistencyError("Hope subgraph of J_" + std::to_string(g.n()) +
                                           " is not complete at vertex " + std::to_string(a));
        }
    }
    return h;
}

bool is_jaco_arc_list(std::size_t n, const std::vector<Arc>& arcs) {
    if (n < 1) return false;
    auto expected = build_jaco(n).arcs();
    auto given = arcs;
    std::sort(given.begin(), given.end());
    return given == expected;
}

}  // namespace jaco
