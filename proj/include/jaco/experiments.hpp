#pragma once

#include <cstddef>
#include <vector>

#include "jaco/digraph.hpp"
#include "jaco/oracle.hpp"

namespace jaco {

/// One line of the degree / prime vertex / brush number table.
struct TableRow {
    std::size_t i = 0;
    std::size_t d_minus = 0;
    std::size_t d_plus_inf = 0;
    Vertex prime_vertex = 0;  // of J_i(1)
    Brushes br = 0;           // b_r(J_i(1))

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct HopeBoundRow {
    std::size_t n = 0;
    Vertex prime_index = 0;
    Brushes br_jaco = 0;
    std::size_t hope_size = 0;
    Brushes br_hope = 0;
    bool bound_holds = false;
    std::size_t linking_edges = 0;
};

/// Rows i = 1..max_n. Throws DomainError if max_n < 1.
std::vector<TableRow> table1(std::size_t max_n);

/// Compares b_r(J_n(1)) with b_r of its Hope subgraph for n = 1..max_n.
/// Only reports; a row with bound_holds == false is a finding, not an error.
std::vector<HopeBoundRow> hope_bound_experiment(std::size_t max_n);

/// Arcs of J_n(1) from {v_1..v_i} into {v_{i+1}..v_n}, v_i the prime Jaconian vertex.
std::size_t linking_edges(std::size_t n);

/// b_r of the disjoint union against the sum of the parts, both by brute force.
bool union_additivity_check(const std::vector<DiGraph>& components,
                            std::size_t cap_eps = kDefaultCapEps);

}  // namespace jaco
