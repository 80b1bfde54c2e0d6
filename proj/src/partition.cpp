#include "partition.hpp"

#include <sstream>

#include "error.hpp"
#include "solver.hpp"

namespace reusesp {

Weight PartitionInstance::total() const {
    Weight sum = 0;
    for (Weight w : item_weights) sum += w;
    return sum;
}

void check_partition(const PartitionInstance& p) {
    if (p.item_weights.empty())
        throw Error(ErrorCode::InvalidArgument, "item list must not be empty");
    for (std::size_t i = 0; i < p.item_weights.size(); ++i)
        if (p.item_weights[i] == 0)
            throw Error(ErrorCode::InvalidArgument,
                        "item " + std::to_string(i) + " must have positive weight");
}

std::optional<std::vector<std::uint32_t>> brute_force_partition(const PartitionInstance& p) {
    check_partition(p);
    const std::size_t n = p.item_weights.size();
    if (n > 24)
        throw Error(ErrorCode::TooLarge, "exhaustive subset search capped at 24 items, got " +
                                             std::to_string(n));
    Weight total = p.total();
    if (total % 2 != 0) return std::nullopt;
    Weight half = total / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Weight sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) sum += p.item_weights[i];
        if (sum == half) {
            std::vector<std::uint32_t> subset;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) subset.push_back(static_cast<std::uint32_t>(i));
            return subset;
        }
    }
    return std::nullopt;
}

PartitionReduction reduce_partition(const PartitionInstance& p) {
    check_partition(p);
    const std::uint32_t n = static_cast<std::uint32_t>(p.item_weights.size());
    const Weight total = p.total();

    PartitionReduction red;
    Instance& g = red.instance;
    PartitionReductionMap& map = red.map;
    map.items = p;
    map.total = total;

    // Vertices: first chain 0..n, bypass vertices n+1..2n-1 (one per inner
    // first-chain item), second chain continues from vertex n through
    // 2n..3n-1, third chain from 3n-1 through 3n..4n-1. Chains share their
    // junction vertices.
    g.vertex_count = 4 * n;
    g.source = 0;
    g.sink = 4 * n - 1;
    auto c1 = [&](std::uint32_t i) { return i; };
    auto byp = [&](std::uint32_t i) { return n + i; }; // i in 1..n-1
    auto c2 = [&](std::uint32_t i) { return i == 0 ? n : 2 * n - 1 + i; };
    auto c3 = [&](std::uint32_t i) { return 3 * n - 1 + i; }; // c3(0) == c2(n)

    Label next_private = n + 1;
    auto add_edge = [&](Vertex tail, Vertex head, Weight w, Label l) {
        g.edges.push_back(Edge{tail, head, w, l});
        return static_cast<EdgeId>(g.edges.size() - 1);
    };

    for (std::uint32_t i = 0; i < n; ++i)
        map.chain1.push_back(add_edge(c1(i), c1(i + 1), p.item_weights[i], i + 1));
    for (std::uint32_t i = 1; i < n; ++i) {
        map.bypass_in.push_back(add_edge(c1(i), byp(i), 0, next_private++));
        map.bypass_out.push_back(add_edge(byp(i), c1(i + 1), 0, next_private++));
    }
    map.shortcut1 = add_edge(c1(0), c1(n), total / 2, next_private++);
    for (std::uint32_t i = 0; i < n; ++i)
        map.chain2.push_back(add_edge(c2(i), c2(i + 1), p.item_weights[i], i + 1));
    map.shortcut2 = add_edge(c2(0), c2(n), total / 2, next_private++);
    for (std::uint32_t i = 0; i < n; ++i)
        map.chain3.push_back(add_edge(c3(i), c3(i + 1), p.item_weights[i], i + 1));

    return red;
}

FlawReport demonstrate_flaw(const PartitionInstance& p) {
    FlawReport r;
    r.items = p;
    r.total = p.total();
    r.subset = brute_force_partition(p);
    r.feasible = r.subset.has_value();

    PartitionReduction red = reduce_partition(p);
    SolveResult solved = solve_labelset(red.instance);
    r.optimal = *solved.optimal_length;
    r.witness = std::move(*solved.witness);

    for (EdgeId id : red.map.chain1) r.all_items.edge_ids.push_back(id);
    for (EdgeId id : red.map.chain2) r.all_items.edge_ids.push_back(id);
    for (EdgeId id : red.map.chain3) r.all_items.edge_ids.push_back(id);
    r.all_items_reuse = reuse_length(red.instance, r.all_items);

    r.refuted = !r.feasible && r.optimal == r.total;
    return r;
}

std::string render_flaw_report(const FlawReport& r) {
    std::ostringstream out;
    out << "ITEMS";
    for (Weight w : r.items.item_weights) out << ' ' << w;
    out << '\n';
    out << "TOTAL " << r.total << '\n';
    out << "HALF " << r.total / 2 << '\n';
    if (r.feasible) {
        out << "FEASIBLE yes SUBSET";
        for (std::uint32_t i : *r.subset) out << ' ' << i;
        out << '\n';
    } else {
        out << "FEASIBLE no\n";
    }
    out << "OPTIMAL " << r.optimal << '\n';
    out << "WITNESS";
    for (EdgeId id : r.witness.edge_ids) out << ' ' << id;
    out << '\n';
    out << "ALL-ITEMS-REUSE " << r.all_items_reuse << '\n';
    out << "ALL-ITEMS-PATH";
    for (EdgeId id : r.all_items.edge_ids) out << ' ' << id;
    out << '\n';
    out << "CLAIM optimum equals TOTAL exactly when some subset sums to HALF\n";
    if (r.refuted)
        out << "VERDICT REDUCTION REFUTED\n";
    else
        out << "VERDICT NOT REFUTED BY THIS INPUT\n";
    return out.str();
}

} // namespace reusesp
