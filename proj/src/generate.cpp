#include "generate.hpp"

#include <random>

namespace reusesp {
namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish draw from 0..bound-1; the slight modulo bias is harmless
    // here and keeps the byte-identical-output contract trivial.
    std::uint64_t next(std::uint64_t bound) { return bound ? engine_() % bound : 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace

Instance generate_instance(std::uint64_t seed, std::uint32_t max_vertices,
                           std::uint32_t max_edges, std::uint32_t max_shared_labels) {
    Rng rng(seed);
    if (max_vertices < 2 || rng.next(40) == 0) {
        Instance g;
        g.vertex_count = 1;
        return g; // the one instance where the empty path is an answer
    }

    Instance g;
    g.vertex_count = 2 + static_cast<std::uint32_t>(rng.next(max_vertices - 1));
    g.source = 0;
    g.sink = g.vertex_count - 1;

    std::uint32_t shared = static_cast<std::uint32_t>(rng.next(max_shared_labels + 1));
    std::vector<Weight> shared_weight(shared);
    for (Weight& w : shared_weight) w = rng.next(9);

    bool backbone = rng.next(8) != 0; // occasionally leave the sink unreachable
    std::vector<std::pair<Vertex, Vertex>> arcs;
    if (backbone) {
        Vertex cur = 0;
        while (cur != g.sink) {
            Vertex nxt = cur + 1 + static_cast<Vertex>(rng.next(g.sink - cur));
            arcs.emplace_back(cur, nxt);
            cur = nxt;
        }
    }
    std::uint64_t target = arcs.size() + rng.next(max_edges + 1);
    if (target > max_edges) target = max_edges;
    while (arcs.size() < target) {
        Vertex tail = static_cast<Vertex>(rng.next(g.vertex_count - 1));
        Vertex head = tail + 1 + static_cast<Vertex>(rng.next(g.vertex_count - 1 - tail));
        arcs.emplace_back(tail, head);
    }

    Label next_private = shared + 1;
    for (auto [tail, head] : arcs) {
        Edge e{tail, head, 0, 0};
        if (shared > 0 && rng.next(2) == 0) {
            Label l = 1 + rng.next(shared);
            e.label = l;
            e.weight = shared_weight[l - 1];
        } else {
            e.label = next_private++;
            e.weight = rng.next(9);
        }
        g.edges.push_back(e);
    }
    return g;
}

CnfFormula generate_cnf(std::uint64_t seed, std::uint32_t max_vars,
                        std::uint32_t max_clauses) {
    Rng rng(seed);
    CnfFormula f;
    f.num_vars = 1 + static_cast<std::uint32_t>(rng.next(max_vars));
    std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.next(max_clauses));
    for (std::uint32_t j = 0; j < m; ++j) {
        Clause c;
        for (Literal& lit : c) {
            lit.var = static_cast<std::uint32_t>(rng.next(f.num_vars));
            lit.negated = rng.next(2) == 1;
        }
        f.clauses.push_back(c);
    }
    return f;
}

Instance generate_colored(std::uint64_t seed, std::uint32_t max_vertices,
                          std::uint32_t max_colors) {
    Rng rng(seed);
    Instance g;
    g.vertex_count = max_vertices < 2
                         ? 2
                         : 2 + static_cast<std::uint32_t>(rng.next(max_vertices - 1));
    g.source = 0;
    g.sink = g.vertex_count - 1;
    std::uint32_t colors = 1 + static_cast<std::uint32_t>(rng.next(max_colors));

    std::vector<std::pair<Vertex, Vertex>> arcs;
    Vertex cur = 0;
    while (cur != g.sink) {
        Vertex nxt = cur + 1 + static_cast<Vertex>(rng.next(g.sink - cur));
        arcs.emplace_back(cur, nxt);
        cur = nxt;
    }
    std::uint64_t target = arcs.size() + rng.next(2 * g.vertex_count + 1);
    while (arcs.size() < target) {
        Vertex tail = static_cast<Vertex>(rng.next(g.vertex_count - 1));
        Vertex head = tail + 1 + static_cast<Vertex>(rng.next(g.vertex_count - 1 - tail));
        arcs.emplace_back(tail, head);
    }
    for (auto [tail, head] : arcs) {
        Label color = 1 + rng.next(colors);
        g.edges.push_back(Edge{tail, head, color, color}); // weight mirrors the color
    }
    return g;
}

PartitionInstance generate_partition(std::uint64_t seed, std::uint32_t max_items) {
    Rng rng(seed);
    PartitionInstance p;
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next(max_items));
    for (std::uint32_t i = 0; i < n; ++i) p.item_weights.push_back(1 + rng.next(6));
    return p;
}

} // namespace reusesp
