#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace jaco {

/// 1-based vertex index; v_1 is Vertex{1}.
using Vertex = std::size_t;

/// Brush counts are non-negative integers.
using Brushes = std::uint64_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite simple digraph on vertices 1..nu. Arcs keep insertion order, which
/// doubles as the edge labelling when the graph is read as undirected.
class DiGraph {
public:
    DiGraph() = default;

    /// Throws DomainError on loops, out-of-range endpoints or duplicate arcs.
    DiGraph(std::size_t nu, std::vector<Arc> arcs);

    std::size_t nu() const noexcept { return nu_; }
    std::size_t eps() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Indexed 1..nu; slot 0 is unused and always zero.
    std::vector<std::size_t> out_degrees() const;
    std::vector<std::size_t> in_degrees() const;

    /// Same vertex set with every arc reversed.
    DiGraph reversed() const;

    friend bool operator==(const DiGraph&, const DiGraph&) = default;

private:
    std::size_t nu_ = 0;
    std::vector<Arc> arcs_;
};

/// Kahn's algorithm; true iff the digraph has no directed cycle.
bool is_acyclic(const DiGraph& g);

/// Disjoint union; the second graph's vertices are shifted by a.nu().
DiGraph disjoint_union(const DiGraph& a, const DiGraph& b);

/// K_m with every edge oriented low index to high index.
DiGraph complete_graph(std::size_t m);

}  // namespace jaco
