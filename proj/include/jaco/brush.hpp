#pragma once

#include <cstddef>
#include <string>

#include "jaco/cleaning.hpp"
#include "jaco/digraph.hpp"
#include "jaco/jaco_graph.hpp"

namespace jaco {

/// Cost of one orientation: a finite brush count, or undoable (no finite
/// allocation cleans it). Never encoded as a sentinel integer.
class OrientationCost {
public:
    static OrientationCost finite(Brushes b) noexcept { return OrientationCost(b, false); }
    static OrientationCost undoable() noexcept { return OrientationCost(0, true); }

    bool is_undoable() const noexcept { return undoable_; }
    bool is_finite() const noexcept { return !undoable_; }
    /// Throws UndoableError when called on an undoable cost.
    Brushes value() const;

    std::string to_string() const;

    friend bool operator==(const OrientationCost&, const OrientationCost&) = default;

private:
    OrientationCost(Brushes b, bool undoable) noexcept : value_(b), undoable_(undoable) {}

    Brushes value_ = 0;
    bool undoable_ = false;
};

struct BrushReport {
    std::size_t n = 0;
    Vertex prime_index = 0;
    Brushes sum_prefix = 0;
    Brushes sum_hope = 0;
    Brushes br = 0;
    BrushAllocation allocation;
};

/// Closed-form brush number of J_n(1), split at the prime Jaconian vertex v_i:
///   sum_{j<=i} (d^+(v_j) - d^-(v_j))  +  sum_{j>i} max(0, (n-j) - d^-(v_j)).
/// Degrees are those of the finite graph. Throws InternalConsistencyError if a
/// prefix term is negative.
BrushReport brush_number(const JacoGraph& g);

/// beta(v) = max(0, d^+(v) - d^-(v)). Throws UndoableError on a cyclic input.
BrushAllocation minimal_allocation(const DiGraph& g);

/// Undoable if g has a cycle, else sum_v max(0, d^+(v) - d^-(v)).
OrientationCost orientation_cost(const DiGraph& g);

}  // namespace jaco
