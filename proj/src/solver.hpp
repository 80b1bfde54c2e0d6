#ifndef REUSESP_SOLVER_HPP
#define REUSESP_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "instance.hpp"

namespace reusesp {

// Pruning rule applied to search states that reach the same vertex.
//   Full:   discard a state whose cost is no better and whose used-label set,
//           restricted to labels still reachable from the vertex, is a
//           superset of a retained state's. The restriction is what makes the
//           rule effective: labels that can no longer occur ahead are dead
//           weight and are ignored.
//   Simple: same, but compares whole label sets without the restriction.
//   Off:    keep everything (exhaustive baseline).
enum class DominanceMode { Full, Simple, Off };

struct SolveStats {
    std::uint64_t states_expanded = 0;
    std::uint64_t states_pruned = 0;
};

struct SolveResult {
    // Empty when the sink is unreachable from the source.
    std::optional<Weight> optimal_length;
    // Lexicographically least optimal path by edge-id sequence; empty when
    // unreachable.
    std::optional<PathTrace> witness;
    SolveStats stats;

    bool reachable() const { return optimal_length.has_value(); }
};

// Exact solver. States are (vertex, set of used shared labels) pairs ordered
// by accumulated cost; only labels occurring on two or more edges are
// tracked, since a label seen once can never be reused. Best-first expansion
// makes the first sink pop optimal. The witness is reconstructed afterwards
// against exact completion costs, so it is the lexicographically least
// optimal path regardless of the pruning mode. Every returned witness is
// re-checked with reuse_length before the result leaves this function.
// Requires a valid instance.
SolveResult solve_labelset(const Instance& g, DominanceMode mode = DominanceMode::Full);

// Exhaustive reference solver: minimum over all s-t paths in lexicographic
// order, keeping the first path attaining the minimum. states_expanded
// counts enumerated paths. Throws Error(TooLarge) when the instance has more
// than max_paths paths.
SolveResult solve_bruteforce(const Instance& g, std::uint64_t max_paths = 100000);

struct DecideResult {
    bool yes = false;
    // A path with reuse length <= the budget, when yes.
    std::optional<PathTrace> witness;
};

// Decides whether some s-t path has reuse length <= k.value. Runs the same
// search as solve_labelset but stops as soon as the answer is known: a sink
// pop within budget answers yes, and any pop beyond the budget answers no
// since pop costs never decrease. Unreachable sinks answer no.
DecideResult decide(const Instance& g, Budget k, DominanceMode mode = DominanceMode::Full);

// Ordinary shortest path ignoring labels. Every path's reuse length is at
// most its plain length, so this value upper-bounds the reuse optimum.
// Empty when unreachable.
std::optional<Weight> plain_shortest_path(const Instance& g);

} // namespace reusesp

#endif
