#pragma once

#include <cstddef>

#include "metric_repair/exact.hpp"
#include "metric_repair/graph.hpp"

namespace metric_repair {

/// Search statistics of one bounded run.
struct FptStats {
    std::size_t nodes = 0;           ///< Cover invocations
    std::size_t verifier_calls = 0;
    std::size_t seeded = 0;          ///< edges forced into S before branching
    std::size_t max_candidates = 0;  ///< largest |P| observed
    std::size_t candidate_bound = 0; ///< 5k^2 (increase) or 12k^2 (general)
    /// |P| outgrew the bound. That can only happen when no repair of size
    /// <= k exists, so the run stopped with NotWithinBudget.
    bool bound_exceeded = false;
};

struct FptResult {
    bool found = false;  ///< false means NotWithinBudget
    Support support;
    RepairDelta delta;
    FptStats stats;
};

/// Increase-only bounded search on a chordal graph: forced edges (bottom
/// edge of more than k broken triangles) seed the support, candidate edges
/// come from uncovered broken triangles and from the k most extreme
/// triangles around each support edge, and every branch adds one candidate.
/// Finds a repair of size <= k iff one exists.
///
/// Throws PreconditionError when g is not chordal or k < 0.
FptResult fpimr(const WeightedGraph& g, int k);

/// General-case variant: forced edges are those in more than k broken
/// triangles in any role, uncovered triangles contribute all three edges,
/// and two adjacent support edges contribute their closing edge.
FptResult fpt_general(const WeightedGraph& g, int k);

struct FptSolution {
    std::size_t k = 0;
    Support support;
    RepairDelta delta;
    FptStats stats;  ///< of the successful run
};

/// Iterative deepening over k = 0, 1, 2, ... until a repair is found, so
/// the returned support is optimal. Omega must be IncreaseOnly or General.
FptSolution fpt_auto(const WeightedGraph& g, Omega omega);

} // namespace metric_repair
