#pragma once

#include <cstddef>
#include <vector>

#include "jaco/digraph.hpp"

namespace jaco {

/// Closed index range [first, last]; empty when first > last.
struct VertexRange {
    Vertex first = 1;
    Vertex last = 0;

    bool empty() const noexcept { return first > last; }
    std::size_t size() const noexcept { return empty() ? 0 : last - first + 1; }
    bool contains(Vertex v) const noexcept { return first <= v && v <= last; }

    friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

/// The finite Jaco graph J_n(1) with its defined orientation.
///
/// Arc (i, j) exists iff i < j <= min(n, 2i - d^-(v_i)). Both neighbourhoods of
/// every vertex are contiguous index ranges, so the graph is stored as per-vertex
/// range bounds and the arc list is produced on demand in lexicographic order.
/// Immutable once built.
class JacoGraph {
public:
    std::size_t n() const noexcept { return n_; }
    std::size_t eps() const noexcept { return eps_; }

    /// d^-(v_i) in J_n(1); identical in every larger J_m(1).
    std::size_t in_deg(Vertex i) const { return in_deg_.at(check(i)); }
    /// d^+(v_i) within J_n(1).
    std::size_t out_deg(Vertex i) const { return out_deg_.at(check(i)); }
    /// d^+(v_i) in a graph large enough that no out-arc of v_i is truncated.
    std::size_t inf_out_deg(Vertex i) const { return inf_out_deg_.at(check(i)); }

    VertexRange out_neighbours(Vertex i) const;
    VertexRange in_neighbours(Vertex i) const;
    bool has_arc(Vertex tail, Vertex head) const;

    /// Sorted lexicographically.
    std::vector<Arc> arcs() const;
    DiGraph to_digraph() const;

    friend JacoGraph build_jaco(std::size_t n);

private:
    Vertex check(Vertex i) const;

    std::size_t n_ = 0;
    std::size_t eps_ = 0;
    // All tables are indexed 1..n; slot 0 is padding.
    std::vector<std::size_t> in_deg_;
    std::vector<std::size_t> out_deg_;
    std::vector<std::size_t> inf_out_deg_;
    std::vector<Vertex> first_tail_;
};

/// Complete subgraph on the vertices after the prime Jaconian vertex.
struct HopeView {
    Vertex prime_index = 0;
    VertexRange vertices;

    std::size_t arc_count() const noexcept;
    std::vector<Arc> arcs() const;
};

/// Builds J_n(1) sequentially over v_1..v_n. Out-degrees in the infinite graph
/// come from the same construction run to 2n vertices, which is enough because
/// every out-neighbour of v_i has index at most 2i. Throws DomainError if n < 1.
JacoGraph build_jaco(std::size_t n);

/// d(v_i) in J_n(1).
std::size_t finite_degree(const JacoGraph& g, Vertex i);

/// Vertices attaining the maximum degree, ascending.
std::vector<Vertex> jaconian_set(const JacoGraph& g);

Vertex prime_jaconian(const JacoGraph& g);

/// Throws InternalConsistencyError if the range after the prime vertex is not complete.
HopeView hope_subgraph(const JacoGraph& g);

/// Checks an arc list against the Jaco arc rule for n vertices.
bool is_jaco_arc_list(std::size_t n, const std::vector<Arc>& arcs);

}  // namespace jaco
