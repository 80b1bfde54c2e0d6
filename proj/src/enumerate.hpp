#ifndef REUSESP_ENUMERATE_HPP
#define REUSESP_ENUMERATE_HPP

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "instance.hpp"

namespace reusesp {

// Number of s-t paths, saturating at uint64 max. Sets *saturated when the
// true count overflows. Throws Error(Validation) on a cyclic instance.
std::uint64_t count_paths(const Instance& g, bool* saturated = nullptr);

// Every s-t path as an edge-id sequence, in lexicographic edge-id order.
// Throws Error(TooLarge) when the instance has more than max_paths paths.
std::vector<PathTrace> enumerate_paths(const Instance& g, std::uint64_t max_paths);

namespace detail {

struct EnumContext {
    std::vector<std::vector<EdgeId>> out;
    std::vector<char> reaches_sink;
    std::vector<std::uint32_t> label_index; // per edge, dense over distinct labels
    std::uint32_t label_count = 0;
};

inline EnumContext make_enum_context(const Instance& g) {
    EnumContext ctx;
    ctx.out = out_edges(g);
    // Reverse reachability from the sink bounds the search to useful edges.
    ctx.reaches_sink.assign(g.vertex_count, 0);
    ctx.reaches_sink[g.sink] = 1;
    auto in = in_edges(g);
    std::vector<Vertex> stack{g.sink};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId id : in[v]) {
            Vertex u = g.edges[id].tail;
            if (!ctx.reaches_sink[u]) {
                ctx.reaches_sink[u] = 1;
                stack.push_back(u);
            }
        }
    }
    ctx.label_index.resize(g.edges.size());
    std::unordered_map<Label, std::uint32_t> dense;
    dense.reserve(g.edges.size());
    for (EdgeId id = 0; id < g.edges.size(); ++id) {
        auto [it, fresh] = dense.try_emplace(g.edges[id].label, ctx.label_count);
        if (fresh) ++ctx.label_count;
        ctx.label_index[id] = it->second;
    }
    return ctx;
}

} // namespace detail

// Streams every s-t path in lexicographic edge-id order as
// f(edge_ids, reuse_len). The reuse length is maintained incrementally, so a
// visit costs O(1) beyond the callback. Children of a vertex are explored in
// ascending edge-id order; paths stop at the sink.
// Throws Error(Validation) on a cyclic instance.
template <class F>
void for_each_path(const Instance& g, F&& f) {
    topological_order(g); // reject cyclic input; DFS below would not halt
    auto ctx = detail::make_enum_context(g);
    if (!ctx.reaches_sink[g.source]) return;

    constexpr std::uint32_t kLeaf = std::numeric_limits<std::uint32_t>::max();
    struct Frame {
        Vertex v;
        std::uint32_t next_child;
    };
    std::vector<Frame> stack;
    std::vector<EdgeId> path;
    std::vector<std::uint32_t> times_seen(ctx.label_count, 0);
    Weight cost = 0;

    auto arrive = [&](Vertex v) {
        if (v == g.sink) {
            f(static_cast<const std::vector<EdgeId>&>(path), cost);
            stack.push_back({v, kLeaf});
        } else {
            stack.push_back({v, 0});
        }
    };

    arrive(g.source);
    while (!stack.empty()) {
        Frame& frame = stack.back();
        bool descended = false;
        while (frame.next_child != kLeaf && frame.next_child < ctx.out[frame.v].size()) {
            EdgeId id = ctx.out[frame.v][frame.next_child++];
            const Edge& e = g.edges[id];
            if (!ctx.reaches_sink[e.head]) continue;
            path.push_back(id);
            if (times_seen[ctx.label_index[id]]++ == 0) cost += e.weight;
            arrive(e.head);
            descended = true;
            break;
        }
        if (descended) continue;
        stack.pop_back();
        if (!path.empty() && !stack.empty()) {
            EdgeId id = path.back();
            path.pop_back();
            if (--times_seen[ctx.label_index[id]] == 0) cost -= g.edges[id].weight;
        }
    }
}

// Minimum reuse length over all s-t paths by exhaustive enumeration, or
// nullopt when the sink is unreachable. Oracle-grade: no pruning beyond
// skipping edges that cannot reach the sink.
std::optional<Weight> min_reuse_by_enumeration(const Instance& g);

} // namespace reusesp

#endif
