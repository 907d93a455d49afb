#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jaco/brush.hpp"
#include "jaco/digraph.hpp"

namespace jaco {

inline constexpr std::size_t kDefaultCapEps = 24;

/// Undirected simple graph read off a digraph: every arc becomes the edge
/// {min, max}. Edges are kept sorted, giving the labelling e_1..e_eps.
class UnderlyingGraph {
public:
    /// Throws DomainError if two arcs join the same pair of vertices.
    explicit UnderlyingGraph(const DiGraph& g);

    std::size_t nu() const noexcept { return nu_; }
    std::size_t eps() const noexcept { return edges_.size(); }
    const std::vector<Arc>& edges() const noexcept { return edges_; }

    /// Bit (eps - k) of mask set means e_k runs high index to low index, so
    /// e_1 is the most significant bit and mask 0 orients every edge upward.
    DiGraph orient(std::uint64_t mask) const;

    /// Mask of an orientation of this graph. Throws DomainError if g is not one.
    std::uint64_t mask_of(const DiGraph& g) const;

private:
    std::size_t nu_ = 0;
    std::vector<Arc> edges_;
};

struct CensusEntry {
    std::uint64_t mask = 0;
    OrientationCost cost = OrientationCost::undoable();
};

struct OrientationCensus {
    std::vector<Arc> edge_order;
    std::vector<CensusEntry> entries;  // ascending mask, one per orientation
    Brushes minimum = 0;
    std::size_t undoable_count = 0;
};

/// Costs every one of the 2^eps orientations. Work is split across threads
/// and merged in mask order, so the result does not depend on the thread count.
/// Throws CapExceededError if eps > cap_eps.
OrientationCensus census(const UnderlyingGraph& g, std::size_t cap_eps = kDefaultCapEps);

/// Minimum finite cost over all orientations, without keeping the entries.
Brushes brute_force_brush_number(const UnderlyingGraph& g, std::size_t cap_eps = kDefaultCapEps);

/// floor(m^2 / 4). Throws DomainError if m < 1.
Brushes complete_graph_brush_number(std::size_t m);

}  // namespace jaco
