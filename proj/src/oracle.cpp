#include "jaco/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "jaco/errors.hpp"

namespace jaco {

UnderlyingGraph::UnderlyingGraph(const DiGraph& g) : nu_(g.nu()) {
    edges_.reserve(g.eps());
    for (const Arc& a : g.arcs()) edges_.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw DomainError("underlying graph has a repeated edge; orientations need a simple graph");
    }
}

DiGraph UnderlyingGraph::orient(std::uint64_t mask) const {
    std::vector<Arc> arcs;
    arcs.reserve(edges_.size());
    const std::size_t eps = edges_.size();
    for (std::size_t k = 0; k < eps; ++k) {
        const bool flipped = (mask >> (eps - 1 - k)) & 1U;
        arcs.push_back(flipped ? Arc{edges_[k].head, edges_[k].tail} : edges_[k]);
    }
    return DiGraph(nu_, std::move(arcs));
}

std::uint64_t UnderlyingGraph::mask_of(const DiGraph& g) const {
    if (g.nu() != nu_ || g.eps() != eps()) throw DomainError("digraph is not an orientation of this graph");
    std::uint64_t mask = 0;
    const std::size_t eps = edges_.size();
    for (const Arc& a : g.arcs()) {
        const Arc e{std::min(a.tail, a.head), std::max(a.tail, a.head)};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) throw DomainError("digraph is not an orientation of this graph");
        const auto k = static_cast<std::size_t>(it - edges_.begin());
        if (a.tail > a.head) mask |= std::uint64_t{1} << (eps - 1 - k);
    }
    return mask;
}

namespace {

// Reusable scratch space for costing one orientation at a time.
class OrientationEvaluator {
public:
    explicit OrientationEvaluator(const UnderlyingGraph& g)
        : g_(g), out_(g.nu() + 1), in_(g.nu() + 1), pending_(g.nu() + 1), start_(g.nu() + 2),
          heads_(g.eps()), fill_(g.nu() + 1), stack_(g.nu()) {}

    OrientationCost operator()(std::uint64_t mask) {
        const auto& edges = g_.edges();
        const std::size_t nu = g_.nu();
        const std::size_t eps = edges.size();
        std::fill(out_.begin(), out_.end(), 0);
        std::fill(in_.begin(), in_.end(), 0);
        for (std::size_t k = 0; k < eps; ++k) {
            const bool flipped = (mask >> (eps - 1 - k)) & 1U;
            const Vertex t = flipped ? edges[k].head : edges[k].tail;
            const Vertex h = flipped ? edges[k].tail : edges[k].head;
            ++out_[t];
            ++in_[h];
        }
        // Compressed out-adjacency for Kahn's algorithm.
        start_[1] = 0;
        for (Vertex v = 1; v <= nu; ++v) start_[v + 1] = start_[v] + out_[v];
        std::copy(start_.begin(), start_.end() - 1, fill_.begin());
        for (std::size_t k = 0; k < eps; ++k) {
            const bool flipped = (mask >> (eps - 1 - k)) & 1U;
            const Vertex t = flipped ? edges[k].head : edges[k].tail;
            const Vertex h = flipped ? edges[k].tail : edges[k].head;
            heads_[fill_[t]++] = h;
        }
        std::size_t top = 0;
        for (Vertex v = 1; v <= nu; ++v) {
            pending_[v] = in_[v];
            if (pending_[v] == 0) stack_[top++] = v;
        }
        std::size_t removed = 0;
        while (top > 0) {
            const Vertex v = stack_[--top];
            ++removed;
            for (std::size_t p = start_[v]; p < start_[v + 1]; ++p) {
                if (--pending_[heads_[p]] == 0) stack_[top++] = heads_[p];
            }
        }
        if (removed != nu) return OrientationCost::undoable();

        Brushes cost = 0;
        for (Vertex v = 1; v <= nu; ++v) {
            if (out_[v] > in_[v]) cost += out_[v] - in_[v];
        }
        return OrientationCost::finite(cost);
    }

private:
    const UnderlyingGraph& g_;
    std::vector<std::size_t> out_, in_, pending_, start_;
    std::vector<Vertex> heads_;
    std::vector<std::size_t> fill_;
    std::vector<Vertex> stack_;
};

void check_cap(const UnderlyingGraph& g, std::size_t cap_eps) {
    if (g.eps() > cap_eps || g.eps() >= 63) throw CapExceededError(g.eps(), cap_eps);
}

// Calls body(worker_index, first_mask, last_mask_exclusive) on disjoint
// contiguous mask blocks covering 0..total.
template <class Body>
void for_each_block(std::uint64_t total, std::size_t workers, Body&& body) {
    if (workers <= 1) {
        body(std::size_t{0}, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t block = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(total, block * w);
        const std::uint64_t hi = std::min(total, lo + block);
        pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
    }
}

std::size_t worker_count(std::uint64_t total) {
    constexpr std::uint64_t kSerialBelow = 1U << 14;
    if (total < kSerialBelow) return 1;
    const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    return std::min<std::size_t>(hw, 16);
}

}  // namespace

OrientationCensus census(const UnderlyingGraph& g, std::size_t cap_eps) {
    check_cap(g, cap_eps);
    const std::uint64_t total = std::uint64_t{1} << g.eps();

    OrientationCensus c;
    c.edge_order = g.edges();
    c.entries.resize(total);
    for_each_block(total, worker_count(total), [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
        OrientationEvaluator eval(g);
        for (std::uint64_t mask = lo; mask < hi; ++mask) c.entries[mask] = {mask, eval(mask)};
    });

    c.minimum = std::numeric_limits<Brushes>::max();
    for (const CensusEntry& e : c.entries) {
        if (e.cost.is_undoable()) {
            ++c.undoable_count;
        } else {
            c.minimum = std::min(c.minimum, e.cost.value());
        }
    }
    return c;
}

Brushes brute_force_brush_number(const UnderlyingGraph& g, std::size_t cap_eps) {
    check_cap(g, cap_eps);
    const std::uint64_t total = std::uint64_t{1} << g.eps();
    const std::size_t workers = worker_count(total);
    std::vector<Brushes> best(workers, std::numeric_limits<Brushes>::max());
    for_each_block(total, workers, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
        OrientationEvaluator eval(g);
        Brushes local = std::numeric_limits<Brushes>::max();
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const OrientationCost cost = eval(mask);
            if (cost.is_finite()) local = std::min(local, cost.value());
        }
        best[w] = local;
    });
    // Mask 0 is acyclic, so at least one block found a finite cost.
    return *std::min_element(best.begin(), best.end());
}

Brushes complete_graph_brush_number(std::size_t m) {
    if (m < 1) throw DomainError("complete graph order must be >= 1");
    return static_cast<Brushes>(m) * m / 4;
}

}  // namespace jaco
