#include "instance.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "error.hpp"

namespace reusesp {

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) out << '\n';
        out << violations[i].message;
    }
    return out.str();
}

std::vector<std::vector<EdgeId>> out_edges(const Instance& g) {
    std::vector<std::vector<EdgeId>> out(g.vertex_count);
    for (EdgeId id = 0; id < g.edges.size(); ++id)
        out[g.edges[id].tail].push_back(id);
    return out;
}

std::vector<std::vector<EdgeId>> in_edges(const Instance& g) {
    std::vector<std::vector<EdgeId>> in(g.vertex_count);
    for (EdgeId id = 0; id < g.edges.size(); ++id)
        in[g.edges[id].head].push_back(id);
    return in;
}

namespace {

bool endpoints_in_range(const Instance& g) {
    for (const Edge& e : g.edges)
        if (e.tail >= g.vertex_count || e.head >= g.vertex_count) return false;
    return true;
}

// Kahn's algorithm with a min-heap on vertex id. Returns nullopt on a cycle.
std::optional<std::vector<Vertex>> try_topological_order(const Instance& g) {
    std::vector<std::uint32_t> indegree(g.vertex_count, 0);
    for (const Edge& e : g.edges) ++indegree[e.head];

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < g.vertex_count; ++v)
        if (indegree[v] == 0) ready.push(v);

    auto out = out_edges(g);
    std::vector<Vertex> order;
    order.reserve(g.vertex_count);
    while (!ready.empty()) {
        Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (EdgeId id : out[v])
            if (--indegree[g.edges[id].head] == 0) ready.push(g.edges[id].head);
    }
    if (order.size() < g.vertex_count) return std::nullopt;
    return order;
}

ValidationReport validate(const Instance& g, bool check_label_weights) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, const std::string& message) {
        report.violations.push_back({kind, message});
    };

    if (g.vertex_count == 0) add(ViolationKind::BadVertexCount, "vertex_count must be positive");
    if (g.vertex_count > 0 && g.source >= g.vertex_count)
        add(ViolationKind::BadSource, "source " + std::to_string(g.source) + " out of range [0," +
                                          std::to_string(g.vertex_count) + ")");
    if (g.vertex_count > 0 && g.sink >= g.vertex_count)
        add(ViolationKind::BadSink, "sink " + std::to_string(g.sink) + " out of range [0," +
                                        std::to_string(g.vertex_count) + ")");
    if (g.vertex_count > 1 && g.source == g.sink)
        add(ViolationKind::SourceEqualsSink, "source equals sink in a multi-vertex instance");

    for (EdgeId id = 0; id < g.edges.size(); ++id) {
        const Edge& e = g.edges[id];
        std::string where = "edge " + std::to_string(id) + ": ";
        if (e.tail >= g.vertex_count)
            add(ViolationKind::DanglingEndpoint, where + "tail " + std::to_string(e.tail) +
                                                     " out of range [0," +
                                                     std::to_string(g.vertex_count) + ")");
        if (e.head >= g.vertex_count)
            add(ViolationKind::DanglingEndpoint, where + "head " + std::to_string(e.head) +
                                                     " out of range [0," +
                                                     std::to_string(g.vertex_count) + ")");
        if (e.tail == e.head) add(ViolationKind::SelfLoop, where + "self-loop");
        if (e.label == 0) add(ViolationKind::BadLabel, where + "label must be positive");
    }

    if (check_label_weights) {
        std::map<Label, std::set<Weight>> weights_by_label;
        for (const Edge& e : g.edges)
            if (e.label != 0) weights_by_label[e.label].insert(e.weight);
        for (const auto& [label, weights] : weights_by_label) {
            if (weights.size() < 2) continue;
            std::ostringstream msg;
            msg << "label " << label << " has weights {";
            bool first = true;
            for (Weight w : weights) {
                if (!first) msg << ',';
                first = false;
                msg << w;
            }
            msg << '}';
            add(ViolationKind::LabelWeightMismatch, msg.str());
        }
    }

    if (g.vertex_count > 0 && endpoints_in_range(g) && !try_topological_order(g))
        add(ViolationKind::Cycle, "graph has a cycle");

    return report;
}

} // namespace

ValidationReport validate_instance(const Instance& g) { return validate(g, true); }

ValidationReport validate_structure(const Instance& g) { return validate(g, false); }

std::vector<Vertex> topological_order(const Instance& g) {
    if (g.vertex_count == 0) throw Error(ErrorCode::Validation, "vertex_count must be positive");
    if (!endpoints_in_range(g)) throw Error(ErrorCode::Validation, "edge endpoint out of range");
    auto order = try_topological_order(g);
    if (!order) throw Error(ErrorCode::Validation, "graph has a cycle");
    return *order;
}

void check_path(const Instance& g, const PathTrace& p) {
    if (p.edge_ids.empty()) {
        if (g.source != g.sink)
            throw Error(ErrorCode::InvalidPath, "empty path but source != sink");
        return;
    }
    for (EdgeId id : p.edge_ids)
        if (id >= g.edges.size())
            throw Error(ErrorCode::InvalidPath,
                        "edge id " + std::to_string(id) + " out of range");
    if (g.edges[p.edge_ids.front()].tail != g.source)
        throw Error(ErrorCode::InvalidPath, "path does not start at the source");
    for (std::size_t i = 0; i + 1 < p.edge_ids.size(); ++i) {
        const Edge& a = g.edges[p.edge_ids[i]];
        const Edge& b = g.edges[p.edge_ids[i + 1]];
        if (a.head != b.tail)
            throw Error(ErrorCode::InvalidPath,
                        "edges " + std::to_string(p.edge_ids[i]) + " and " +
                            std::to_string(p.edge_ids[i + 1]) + " do not chain");
    }
    if (g.edges[p.edge_ids.back()].head != g.sink)
        throw Error(ErrorCode::InvalidPath, "path does not end at the sink");
}

Weight reuse_length(const Instance& g, const PathTrace& p) {
    check_path(g, p);
    // First pass marks every label on the path unused, second pass charges
    // each label once, at its first occurrence.
    std::map<Label, bool> charged;
    for (EdgeId id : p.edge_ids) charged[g.edges[id].label] = false;
    Weight total = 0;
    for (EdgeId id : p.edge_ids) {
        const Edge& e = g.edges[id];
        auto it = charged.find(e.label);
        if (!it->second) {
            total += e.weight;
            it->second = true;
        }
    }
    return total;
}

bool verify_budget(const Instance& g, const PathTrace& p, Budget k) {
    return reuse_length(g, p) <= k.value;
}

} // namespace reusesp
