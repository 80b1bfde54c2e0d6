#ifndef REUSESP_PARTITION_HPP
#define REUSESP_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace reusesp {

struct PartitionInstance {
    std::vector<Weight> item_weights; // every weight >= 1

    Weight total() const;

    bool operator==(const PartitionInstance&) const = default;
};

// Throws Error(InvalidArgument) unless there is at least one item and every
// weight is positive.
void check_partition(const PartitionInstance& p);

// First subset of items summing to exactly half the total, as ascending item
// indices; masks are scanned in ascending order with item i at bit i.
// nullopt when no subset works, in particular whenever the total is odd.
// Throws Error(TooLarge) beyond 24 items.
std::optional<std::vector<std::uint32_t>> brute_force_partition(const PartitionInstance& p);

struct PartitionReductionMap {
    PartitionInstance items;
    Weight total = 0;
    // Three chains of item edges; copies of item i share label i+1 across
    // the chains. The first chain offers zero-weight bypasses around all but
    // its first item edge, and each of the first two chains can be skipped
    // entirely by a shortcut of weight floor(total/2) under a private label.
    std::vector<EdgeId> chain1, chain2, chain3; // item edge ids per chain
    std::vector<EdgeId> bypass_in, bypass_out;  // around chain1 items 1..n-1
    EdgeId shortcut1 = 0;
    EdgeId shortcut2 = 0;
};

struct PartitionReduction {
    Instance instance;
    PartitionReductionMap map;
};

// Builds the three-chain graph: 4n vertices and 5n edges for n items.
// The construction is the one whose claimed equivalence the flaw report
// below refutes; it is reproduced faithfully.
PartitionReduction reduce_partition(const PartitionInstance& p);

struct FlawReport {
    PartitionInstance items;
    Weight total = 0; // B
    bool feasible = false;
    std::optional<std::vector<std::uint32_t>> subset;
    Weight optimal = 0;      // solver optimum on the reduced instance
    PathTrace witness;       // solver witness
    PathTrace all_items;     // the three chains walked end to end
    Weight all_items_reuse = 0;
    // The intended equivalence was: some subset sums to total/2 exactly when
    // the optimum is total. Refuted when an infeasible input still attains
    // total, which the all-items walk always does: it pays each item label
    // once in full, so later chains reuse every label for free, and any
    // bypass in the first chain only shifts an item's charge to the second
    // chain.
    bool refuted = false;
};

FlawReport demonstrate_flaw(const PartitionInstance& p);

// Plain-text rendering; the last line carries the verdict and reads
// "VERDICT REDUCTION REFUTED" when the equivalence fails on this input.
std::string render_flaw_report(const FlawReport& r);

} // namespace reusesp

#endif
