#ifndef REUSESP_INSTANCE_HPP
#define REUSESP_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reusesp {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;
using Label = std::uint64_t;

// A labeled weighted edge. The edge id is its index in Instance::edges.
struct Edge {
    Vertex tail = 0;
    Vertex head = 0;
    Weight weight = 0;
    Label label = 0;

    bool operator==(const Edge&) const = default;
};

// A DAG with labeled, weighted edges and distinguished endpoints.
// Walking an s-t path, an edge costs its weight only on the first
// occurrence of its label; later edges with the same label are free.
struct Instance {
    std::uint32_t vertex_count = 0;
    std::vector<Edge> edges;
    Vertex source = 0;
    Vertex sink = 0;

    bool operator==(const Instance&) const = default;
};

// An s-t path given as the sequence of edge ids walked, in order.
// Empty only when source == sink.
struct PathTrace {
    std::vector<EdgeId> edge_ids;

    bool operator==(const PathTrace&) const = default;
};

struct Budget {
    Weight value = 0;
};

enum class ViolationKind {
    BadVertexCount,
    BadSource,
    BadSink,
    SourceEqualsSink,
    SelfLoop,
    DanglingEndpoint,
    BadLabel,
    LabelWeightMismatch,
    Cycle,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks every structural rule and reports all violations, one per finding:
// positive vertex count, endpoints in range, source != sink unless the
// instance has a single vertex, no self-loops, positive labels, equal labels
// implying equal weights, and acyclicity.
ValidationReport validate_instance(const Instance& g);

// Same checks minus the equal-label-equal-weight rule. Used for inputs whose
// weights are not meaningful, such as colored graphs.
ValidationReport validate_structure(const Instance& g);

// Deterministic topological order: repeatedly removes the smallest-id vertex
// with no remaining incoming edge. Throws Error(Validation) on a cycle.
std::vector<Vertex> topological_order(const Instance& g);

// Throws Error(InvalidPath) unless `p` is a chained s-t path of `g`.
void check_path(const Instance& g, const PathTrace& p);

// Sum of weights over the path, counting each label's weight once no matter
// how often the label occurs. Two passes: collect the path's labels, then
// charge each label at its first occurrence. Throws Error(InvalidPath).
Weight reuse_length(const Instance& g, const PathTrace& p);

// Whether reuse_length(g, p) <= k.value. The bound is inclusive.
bool verify_budget(const Instance& g, const PathTrace& p, Budget k);

// Out-edge ids per vertex, each list in ascending edge-id order.
std::vector<std::vector<EdgeId>> out_edges(const Instance& g);

// In-edge ids per vertex, each list in ascending edge-id order.
std::vector<std::vector<EdgeId>> in_edges(const Instance& g);

} // namespace reusesp

#endif
