#include "solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"

namespace reusesp {
namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max();
constexpr Weight kZero = 0;

// Bitset over the instance's shared labels. All sets produced for one solve
// share the same word count, fixed up front.
class LabelSet {
public:
    LabelSet() = default;
    explicit LabelSet(std::uint32_t words) : words_(words, 0) {}

    void set(std::uint32_t bit) { words_[bit >> 6] |= std::uint64_t{1} << (bit & 63); }

    bool test(std::uint32_t bit) const { return (words_[bit >> 6] >> (bit & 63)) & 1; }

    void merge(const LabelSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    void intersect(const LabelSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    bool subset_of(const LabelSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Whether this & mask is a subset of o & mask.
    bool subset_of_under(const LabelSet& o, const LabelSet& mask) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & mask.words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const LabelSet&) const = default;

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct LabelSetHash {
    std::size_t operator()(const LabelSet& s) const { return s.hash(); }
};

struct Context {
    const Instance& g;
    std::vector<std::vector<EdgeId>> out;
    std::vector<char> reaches_sink;
    std::uint32_t shared_count = 0;
    std::uint32_t words = 0;
    std::vector<std::int32_t> shared_index; // per edge; -1 for single-use labels
    std::vector<LabelSet> ahead;            // per vertex: shared labels reachable from it
};

Context make_context(const Instance& g) {
    Context ctx{g, out_edges(g), {}, 0, 0, {}, {}};
    auto order = topological_order(g); // also rejects cyclic input

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

    // Only labels carried by two or more edges can ever be reused; all others
    // are charged unconditionally and need no tracking.
    std::unordered_map<Label, std::uint32_t> occurrences;
    occurrences.reserve(g.edges.size());
    for (const Edge& e : g.edges) ++occurrences[e.label];
    std::unordered_map<Label, std::uint32_t> dense;
    ctx.shared_index.assign(g.edges.size(), -1);
    for (EdgeId id = 0; id < g.edges.size(); ++id) {
        if (occurrences[g.edges[id].label] < 2) continue;
        auto [it, fresh] = dense.try_emplace(g.edges[id].label, ctx.shared_count);
        if (fresh) ++ctx.shared_count;
        ctx.shared_index[id] = static_cast<std::int32_t>(it->second);
    }
    ctx.words = (ctx.shared_count + 63) / 64;

    ctx.ahead.assign(g.vertex_count, LabelSet(ctx.words));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        for (EdgeId id : ctx.out[v]) {
            ctx.ahead[v].merge(ctx.ahead[g.edges[id].head]);
            if (ctx.shared_index[id] >= 0)
                ctx.ahead[v].set(static_cast<std::uint32_t>(ctx.shared_index[id]));
        }
    }
    return ctx;
}

struct State {
    LabelSet used; // all shared labels charged so far, unmasked
    Weight cost;
    Vertex v;
    std::int32_t parent; // arena index; -1 at the root
    EdgeId via;
    bool alive;   // cleared when dominated while still queued
    bool settled; // expanded states stay in their bucket but are never removed
};

struct SearchOutcome {
    std::optional<Weight> optimal; // cost of the first sink pop
    bool over_budget = false;
    SolveStats stats;
};

// Best-first search over (vertex, used shared labels) states. Pop costs never
// decrease, so the first sink pop is optimal. With a budget, stops as soon as
// any pop exceeds it.
SearchOutcome search(const Context& ctx, DominanceMode mode, std::optional<Weight> budget) {
    const Instance& g = ctx.g;
    std::vector<State> arena;
    SolveStats stats;

    std::vector<EdgeId> buf_a, buf_b;
    auto collect_path = [&](std::uint32_t s, std::vector<EdgeId>& buf) {
        buf.clear();
        for (std::int32_t i = static_cast<std::int32_t>(s); arena[i].parent >= 0;
             i = arena[i].parent)
            buf.push_back(arena[i].via);
        std::reverse(buf.begin(), buf.end());
    };
    // Ties on cost expand in lexicographic edge-id order of the partial path.
    auto after = [&](std::uint32_t a, std::uint32_t b) {
        if (arena[a].cost != arena[b].cost) return arena[a].cost > arena[b].cost;
        collect_path(a, buf_a);
        collect_path(b, buf_b);
        return std::lexicographical_compare(buf_b.begin(), buf_b.end(), buf_a.begin(),
                                            buf_a.end());
    };
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(after)> frontier(
        after);
    std::vector<std::vector<std::uint32_t>> retained(g.vertex_count);

    arena.push_back(State{LabelSet(ctx.words), 0, g.source, -1, 0, true, false});
    retained[g.source].push_back(0);
    frontier.push(0);

    while (!frontier.empty()) {
        std::uint32_t cur = frontier.top();
        frontier.pop();
        if (!arena[cur].alive) continue;
        if (budget && arena[cur].cost > *budget) return {std::nullopt, true, stats};
        ++stats.states_expanded;
        if (arena[cur].v == g.sink) return {arena[cur].cost, false, stats};
        arena[cur].settled = true;

        for (EdgeId id : ctx.out[arena[cur].v]) {
            const Edge& e = g.edges[id];
            if (!ctx.reaches_sink[e.head]) continue;
            std::int32_t si = ctx.shared_index[id];
            Weight step = (si >= 0 && arena[cur].used.test(static_cast<std::uint32_t>(si)))
                              ? 0
                              : e.weight;
            Weight cost = arena[cur].cost + step;
            LabelSet used = arena[cur].used;
            if (si >= 0) used.set(static_cast<std::uint32_t>(si));

            bool discarded = false;
            if (mode != DominanceMode::Off) {
                for (std::uint32_t r : retained[e.head]) {
                    const State& rs = arena[r];
                    if (rs.cost > cost) continue;
                    bool covered = mode == DominanceMode::Full
                                       ? used.subset_of_under(rs.used, ctx.ahead[e.head])
                                       : used.subset_of(rs.used);
                    if (covered) {
                        discarded = true;
                        break;
                    }
                }
            }
            if (discarded) {
                ++stats.states_pruned;
                continue;
            }

            std::uint32_t idx = static_cast<std::uint32_t>(arena.size());
            arena.push_back(State{std::move(used), cost, e.head,
                                  static_cast<std::int32_t>(cur), id, true, false});
            if (mode != DominanceMode::Off) {
                // The new state may in turn dominate queued states here.
                auto& bucket = retained[e.head];
                std::size_t keep = 0;
                for (std::size_t i = 0; i < bucket.size(); ++i) {
                    State& rs = arena[bucket[i]];
                    bool dead = !rs.settled && cost <= rs.cost &&
                                (mode == DominanceMode::Full
                                     ? rs.used.subset_of_under(arena[idx].used,
                                                               ctx.ahead[e.head])
                                     : rs.used.subset_of(arena[idx].used));
                    if (dead) {
                        rs.alive = false;
                        ++stats.states_pruned;
                    } else {
                        bucket[keep++] = bucket[i];
                    }
                }
                bucket.resize(keep);
            }
            retained[e.head].push_back(idx);
            frontier.push(idx);
        }
    }
    return {std::nullopt, false, stats};
}

// Exact minimum completion cost from (vertex, masked used-set) states,
// memoized. States are canonical: the set is always restricted to the labels
// still reachable from the vertex, which loses nothing because an edge's own
// label is reachable from its tail and head sets only shrink along an edge.
class CostToGo {
public:
    explicit CostToGo(const Context& ctx) : ctx_(ctx), memo_(ctx.g.vertex_count) {}

    Weight value(Vertex start, const LabelSet& start_set) {
        const Instance& g = ctx_.g;
        if (const Weight* w = find(start, start_set)) return *w;

        struct Task {
            Vertex v;
            LabelSet s;
            std::size_t next;
            Weight best;
        };
        std::vector<Task> stack;
        stack.push_back(Task{start, start_set, 0, kInf});
        while (!stack.empty()) {
            Task& t = stack.back();
            bool suspended = false;
            while (t.next < ctx_.out[t.v].size()) {
                EdgeId id = ctx_.out[t.v][t.next];
                const Edge& e = g.edges[id];
                if (!ctx_.reaches_sink[e.head]) {
                    ++t.next;
                    continue;
                }
                std::int32_t si = ctx_.shared_index[id];
                Weight step =
                    (si >= 0 && t.s.test(static_cast<std::uint32_t>(si))) ? 0 : e.weight;
                LabelSet child = t.s;
                if (si >= 0) child.set(static_cast<std::uint32_t>(si));
                child.intersect(ctx_.ahead[e.head]);
                if (const Weight* sub = find(e.head, child)) {
                    if (*sub != kInf && *sub <= kInf - step)
                        t.best = std::min(t.best, step + *sub);
                    ++t.next;
                } else {
                    stack.push_back(Task{e.head, std::move(child), 0, kInf});
                    suspended = true;
                    break; // same edge is re-examined once the child is memoized
                }
            }
            if (suspended) continue;
            memo_[t.v].emplace(t.s, t.best);
            stack.pop_back();
        }
        return *find(start, start_set);
    }

    const Context& context() const { return ctx_; }

private:
    const Weight* find(Vertex v, const LabelSet& s) const {
        if (v == ctx_.g.sink) return &kZero; // completions end here at no cost
        auto it = memo_[v].find(s);
        return it == memo_[v].end() ? nullptr : &it->second;
    }

    const Context& ctx_;
    std::vector<std::unordered_map<LabelSet, Weight, LabelSetHash>> memo_;
};

// Walks from the source always taking the smallest edge id that still lies on
// a path of total cost `target`. With exact completion costs this yields the
// lexicographically least path attaining the optimum.
PathTrace reconstruct(CostToGo& ctg, Weight target) {
    const Context& ctx = ctg.context();
    const Instance& g = ctx.g;
    PathTrace path;
    Vertex v = g.source;
    LabelSet s(ctx.words);
    s.intersect(ctx.ahead[v]);
    Weight so_far = 0;
    while (v != g.sink) {
        bool advanced = false;
        for (EdgeId id : ctx.out[v]) {
            const Edge& e = g.edges[id];
            if (!ctx.reaches_sink[e.head]) continue;
            std::int32_t si = ctx.shared_index[id];
            Weight step = (si >= 0 && s.test(static_cast<std::uint32_t>(si))) ? 0 : e.weight;
            LabelSet child = s;
            if (si >= 0) child.set(static_cast<std::uint32_t>(si));
            child.intersect(ctx.ahead[e.head]);
            Weight sub = ctg.value(e.head, child);
            if (sub == kInf || sub > kInf - step) continue;
            if (so_far + step + sub == target) {
                path.edge_ids.push_back(id);
                so_far += step;
                s = std::move(child);
                v = e.head;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw Error(ErrorCode::Internal, "witness reconstruction failed to advance");
    }
    return path;
}

PathTrace optimal_witness(const Context& ctx, Weight optimal) {
    CostToGo ctg(ctx);
    LabelSet empty(ctx.words);
    if (ctg.value(ctx.g.source, empty) != optimal)
        throw Error(ErrorCode::Internal, "search and reconstruction disagree on the optimum");
    return reconstruct(ctg, optimal);
}

} // namespace

SolveResult solve_labelset(const Instance& g, DominanceMode mode) {
    Context ctx = make_context(g);
    SearchOutcome out = search(ctx, mode, std::nullopt);
    SolveResult result;
    result.stats = out.stats;
    if (!out.optimal) return result;
    result.optimal_length = out.optimal;
    PathTrace w = optimal_witness(ctx, *out.optimal);
    if (reuse_length(g, w) != *out.optimal)
        throw Error(ErrorCode::Internal, "witness does not attain the reported optimum");
    result.witness = std::move(w);
    return result;
}

SolveResult solve_bruteforce(const Instance& g, std::uint64_t max_paths) {
    bool saturated = false;
    std::uint64_t n = count_paths(g, &saturated);
    if (saturated || n > max_paths)
        throw Error(ErrorCode::TooLarge,
                    "instance has " + (saturated ? std::string("more than 2^64")
                                                 : std::to_string(n)) +
                        " paths, limit is " + std::to_string(max_paths));
    SolveResult result;
    std::optional<Weight> best;
    std::vector<EdgeId> best_path;
    std::uint64_t visited = 0;
    for_each_path(g, [&](const std::vector<EdgeId>& edge_ids, Weight cost) {
        ++visited;
        if (!best || cost < *best) {
            best = cost;
            best_path = edge_ids;
        }
    });
    result.stats.states_expanded = visited;
    if (!best) return result;
    PathTrace w{std::move(best_path)};
    if (reuse_length(g, w) != *best)
        throw Error(ErrorCode::Internal, "witness does not attain the reported optimum");
    result.optimal_length = best;
    result.witness = std::move(w);
    return result;
}

DecideResult decide(const Instance& g, Budget k, DominanceMode mode) {
    Context ctx = make_context(g);
    SearchOutcome out = search(ctx, mode, k.value);
    DecideResult result;
    if (!out.optimal) return result; // over budget or unreachable
    result.yes = true;
    PathTrace w = optimal_witness(ctx, *out.optimal);
    if (reuse_length(g, w) > k.value)
        throw Error(ErrorCode::Internal, "witness exceeds the verified budget");
    result.witness = std::move(w);
    return result;
}

std::optional<Weight> plain_shortest_path(const Instance& g) {
    auto order = topological_order(g);
    auto out = out_edges(g);
    std::vector<Weight> dist(g.vertex_count, kInf);
    dist[g.source] = 0;
    for (Vertex v : order) {
        if (dist[v] == kInf || v == g.sink) continue; // paths end at the sink
        for (EdgeId id : out[v]) {
            const Edge& e = g.edges[id];
            if (dist[v] + e.weight < dist[e.head]) dist[e.head] = dist[v] + e.weight;
        }
    }
    if (dist[g.sink] == kInf) return std::nullopt;
    return dist[g.sink];
}

} // namespace reusesp
