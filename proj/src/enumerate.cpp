#include "enumerate.hpp"

#include <algorithm>

namespace reusesp {

std::uint64_t count_paths(const Instance& g, bool* saturated) {
    constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max();
    if (saturated) *saturated = false;
    auto order = topological_order(g);
    auto out = out_edges(g);
    std::vector<std::uint64_t> ways(g.vertex_count, 0);
    ways[g.sink] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == g.sink) continue; // paths end at the sink
        std::uint64_t total = 0;
        for (EdgeId id : out[v]) {
            std::uint64_t w = ways[g.edges[id].head];
            if (total > kCap - w) {
                total = kCap;
                if (saturated) *saturated = true;
                break;
            }
            total += w;
        }
        ways[v] = total;
    }
    return ways[g.source];
}

std::vector<PathTrace> enumerate_paths(const Instance& g, std::uint64_t max_paths) {
    bool saturated = false;
    std::uint64_t n = count_paths(g, &saturated);
    if (saturated || n > max_paths)
        throw Error(ErrorCode::TooLarge,
                    "instance has " + (saturated ? std::string("more than 2^64")
                                                 : std::to_string(n)) +
                        " paths, limit is " + std::to_string(max_paths));
    std::vector<PathTrace> paths;
    paths.reserve(static_cast<std::size_t>(n));
    for_each_path(g, [&](const std::vector<EdgeId>& edge_ids, Weight) {
        paths.push_back(PathTrace{edge_ids});
    });
    return paths;
}

std::optional<Weight> min_reuse_by_enumeration(const Instance& g) {
    std::optional<Weight> best;
    for_each_path(g, [&](const std::vector<EdgeId>&, Weight cost) {
        if (!best || cost < *best) best = cost;
    });
    return best;
}

} // namespace reusesp
