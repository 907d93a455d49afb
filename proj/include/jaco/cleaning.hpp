#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "jaco/digraph.hpp"

namespace jaco {

/// Per-vertex brush counts beta(v) for v = 1..nu.
class BrushAllocation {
public:
    BrushAllocation() = default;
    explicit BrushAllocation(std::vector<Brushes> beta) : beta_(std::move(beta)) {}

    static BrushAllocation zeros(std::size_t nu) { return BrushAllocation(std::vector<Brushes>(nu, 0)); }

    std::size_t size() const noexcept { return beta_.size(); }
    Brushes operator[](Vertex v) const { return beta_.at(v - 1); }
    Brushes& operator[](Vertex v) { return beta_.at(v - 1); }
    Brushes total() const noexcept;
    const std::vector<Brushes>& values() const noexcept { return beta_; }

    friend bool operator==(const BrushAllocation&, const BrushAllocation&) = default;

private:
    std::vector<Brushes> beta_;
};

enum class Outcome { Cleaned, Undoable };

struct FiringStep {
    Vertex vertex = 0;
    Brushes held = 0;  // brushes at the vertex when it fired
    std::vector<Arc> cleaned;

    friend bool operator==(const FiringStep&, const FiringStep&) = default;
};

struct CleaningTrace {
    std::vector<FiringStep> steps;
    Outcome outcome = Outcome::Cleaned;
    std::vector<Arc> remaining_dirty;
    /// Brushes resting at each vertex when the process stopped (index v - 1).
    std::vector<Brushes> parked;

    bool cleaned() const noexcept { return outcome == Outcome::Cleaned; }
};

/// Picks one vertex from a non-empty, ascending list of eligible vertices.
using FiringRule = std::function<Vertex(std::span<const Vertex> eligible)>;

/// Runs the directed cleaning process, always firing the lowest eligible vertex.
///
/// A vertex is eligible once all of its in-arcs are clean and it holds at least
/// one brush per dirty out-arc. Firing sends one brush down each dirty out-arc;
/// any surplus stays parked at the vertex. The run stops as soon as every arc is
/// clean, or when dirty arcs remain and nothing can fire.
///
/// Throws DomainError if the allocation length differs from nu.
CleaningTrace simulate(const DiGraph& g, const BrushAllocation& alloc);

/// Same process under a caller-chosen firing order.
CleaningTrace simulate(const DiGraph& g, const BrushAllocation& alloc, const FiringRule& rule);

/// True iff some finite allocation cleans g, i.e. g is acyclic.
bool is_cleanable(const DiGraph& g);

bool verify_allocation(const DiGraph& g, const BrushAllocation& alloc);

}  // namespace jaco
