#include <gtest/gtest.h>

#include <random>

#include "jaco/brush.hpp"
#include "jaco/cleaning.hpp"
#include "jaco/errors.hpp"
#include "jaco/jaco_graph.hpp"
#include "jaco/oracle.hpp"
#include "support/reference.hpp"

namespace jaco {
namespace {

const BrushAllocation kJ9Allocation({1, 0, 1, 2, 1, 1, 0, 0, 0});

TEST(Simulate, J9PublishedAllocationCleans) {
    const DiGraph g = build_jaco(9).to_digraph();
    const CleaningTrace t = simulate(g, kJ9Allocation);
    EXPECT_TRUE(t.cleaned());
    EXPECT_TRUE(t.remaining_dirty.empty());
    // Lowest-index firing goes v_1..v_8; the run ends before the sink v_9 fires.
    ASSERT_EQ(t.steps.size(), 8U);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(t.steps[k].vertex, k + 1);
    EXPECT_EQ(t.steps[0].held, 1U);
    EXPECT_EQ(t.steps[0].cleaned, (std::vector<Arc>{{1, 2}}));
}

TEST(Simulate, EmbeddedTriangleIsUndoable) {
    // J_5 edges with 3->4, 4->5, 5->3.
    const DiGraph g(5, {{1, 2}, {2, 3}, {3, 4}, {5, 3}, {4, 5}});
    for (Brushes b : {1U, 5U, 100U}) {
        const CleaningTrace t = simulate(g, BrushAllocation(std::vector<Brushes>(5, b)));
        EXPECT_FALSE(t.cleaned());
        EXPECT_EQ(t.remaining_dirty, (std::vector<Arc>{{3, 4}, {5, 3}, {4, 5}}));
    }
    // With no brushes v_1 cannot start, so nothing is cleaned.
    const CleaningTrace idle = simulate(g, BrushAllocation::zeros(5));
    EXPECT_FALSE(idle.cleaned());
    EXPECT_TRUE(idle.steps.empty());
    EXPECT_EQ(idle.remaining_dirty.size(), 5U);
}

TEST(Simulate, SingleVertexNoSteps) {
    const CleaningTrace t = simulate(DiGraph(1, {}), BrushAllocation({0}));
    EXPECT_TRUE(t.cleaned());
    EXPECT_TRUE(t.steps.empty());
}

TEST(Simulate, AllocationLengthMismatch) {
    EXPECT_THROW(simulate(DiGraph(2, {{1, 2}}), BrushAllocation({1})), DomainError);
}

TEST(Simulate, SurplusStaysParked) {
    const CleaningTrace t = simulate(DiGraph(2, {{1, 2}}), BrushAllocation({3, 0}));
    ASSERT_TRUE(t.cleaned());
    EXPECT_EQ(t.parked, (std::vector<Brushes>{2, 1}));
}

TEST(Simulate, TrivialFiringOfIsolatedVertex) {
    const CleaningTrace t = simulate(DiGraph(3, {{2, 3}}), BrushAllocation({0, 1, 0}));
    ASSERT_TRUE(t.cleaned());
    ASSERT_EQ(t.steps.size(), 2U);
    EXPECT_EQ(t.steps[0].vertex, 1U);
    EXPECT_TRUE(t.steps[0].cleaned.empty());
}

TEST(IsCleanable, Examples) {
    EXPECT_TRUE(is_cleanable(build_jaco(5).to_digraph()));
    EXPECT_FALSE(is_cleanable(DiGraph(2, {{1, 2}, {2, 1}})));
    EXPECT_FALSE(is_cleanable(DiGraph(5, {{1, 2}, {2, 3}, {3, 4}, {5, 3}, {4, 5}})));
}

TEST(VerifyAllocation, Examples) {
    const DiGraph j9 = build_jaco(9).to_digraph();
    EXPECT_TRUE(verify_allocation(j9, kJ9Allocation));
    BrushAllocation starved = kJ9Allocation;
    starved[1] = 0;
    EXPECT_FALSE(verify_allocation(j9, starved));
    EXPECT_TRUE(verify_allocation(DiGraph(2, {{1, 2}}), BrushAllocation({1, 0})));
}

// Saturating allocation beta(v) = d^+(v) cleans exactly the acyclic orientations.
TEST(IsCleanable, AgreesWithCycleSearchOnSmallGraphs) {
    for (std::size_t nu = 1; nu <= 5; ++nu) {
        for (const DiGraph& base : reference::all_simple_graphs(nu)) {
            for (const DiGraph& g : reference::all_orientations(base)) {
                const bool acyclic = !reference::has_cycle_dfs(g);
                ASSERT_EQ(is_cleanable(g), acyclic);
                const auto out = g.out_degrees();
                BrushAllocation saturating(std::vector<Brushes>(out.begin() + 1, out.end()));
                ASSERT_EQ(verify_allocation(g, saturating), acyclic);
            }
        }
    }
}

DiGraph random_dag(std::mt19937_64& rng, std::size_t nu) {
    std::vector<Vertex> order(nu);
    for (std::size_t k = 0; k < nu; ++k) order[k] = k + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution keep(0.45);
    std::vector<Arc> arcs;
    for (std::size_t a = 0; a < nu; ++a)
        for (std::size_t b = a + 1; b < nu; ++b)
            if (keep(rng)) arcs.push_back({order[a], order[b]});
    std::shuffle(arcs.begin(), arcs.end(), rng);
    return DiGraph(nu, std::move(arcs));
}

TEST(Simulate, ConfluenceOnRandomDags) {
    std::mt19937_64 rng(20141007);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_int_distribution<Brushes> brushes(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        const DiGraph g = random_dag(rng, size(rng));
        std::vector<Brushes> beta(g.nu());
        for (auto& b : beta) b = brushes(rng);
        const BrushAllocation alloc(beta);
        const Outcome lowest = simulate(g, alloc).outcome;
        for (int k = 0; k < 3; ++k) {
            const auto random_pick = [&rng](std::span<const Vertex> eligible) {
                std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
                return eligible[pick(rng)];
            };
            ASSERT_EQ(simulate(g, alloc, random_pick).outcome, lowest) << "trial " << trial;
        }
    }
}

// Brushes only travel along arcs, so the total in the system never changes,
// and each step's held count is the allocation plus one brush per in-arc.
TEST(Simulate, BrushConservation) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const DiGraph g = random_dag(rng, size(rng));
        const auto out = g.out_degrees();
        const auto in = g.in_degrees();
        const BrushAllocation alloc(std::vector<Brushes>(out.begin() + 1, out.end()));
        const CleaningTrace t = simulate(g, alloc);
        ASSERT_TRUE(t.cleaned());
        std::vector<Brushes> held(alloc.values());
        for (const FiringStep& s : t.steps) {
            ASSERT_EQ(s.held, alloc[s.vertex] + in[s.vertex]);
            for (const Arc& a : s.cleaned) {
                --held[a.tail - 1];
                ++held[a.head - 1];
            }
            Brushes total = 0;
            for (Brushes h : held) total += h;
            ASSERT_EQ(total, alloc.total());
        }
        ASSERT_EQ(held, t.parked);
    }
}

TEST(Simulate, EveryArcCleanedExactlyOnce) {
    const DiGraph g = build_jaco(30).to_digraph();
    const CleaningTrace t = simulate(g, minimal_allocation(g));
    ASSERT_TRUE(t.cleaned());
    std::vector<Arc> seen;
    std::vector<bool> fired(g.nu() + 1, false);
    for (const FiringStep& s : t.steps) {
        ASSERT_FALSE(fired[s.vertex]);
        fired[s.vertex] = true;
        seen.insert(seen.end(), s.cleaned.begin(), s.cleaned.end());
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, g.arcs());
}

// On a DAG an allocation cleans iff it covers max(0, d^+ - d^-) at every vertex.
TEST(VerifyAllocation, PerVertexThresholdOnJ5Orientations) {
    const UnderlyingGraph j5(build_jaco(5).to_digraph());
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        const DiGraph g = j5.orient(mask);
        if (!is_acyclic(g)) continue;
        const auto out = g.out_degrees();
        const auto in = g.in_degrees();
        // All allocations with entries 0..3.
        for (std::uint64_t code = 0; code < (1U << 10); ++code) {
            std::vector<Brushes> beta(5);
            bool covers = true;
            for (Vertex v = 1; v <= 5; ++v) {
                beta[v - 1] = (code >> (2 * (v - 1))) & 3U;
                const Brushes need = out[v] > in[v] ? out[v] - in[v] : 0;
                covers = covers && beta[v - 1] >= need;
            }
            ASSERT_EQ(verify_allocation(g, BrushAllocation(beta)), covers) << "mask " << mask;
        }
    }
}

}  // namespace
}  // namespace jaco
