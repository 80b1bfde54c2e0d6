#include "reusesp.h"

#include <cstring>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "error.hpp"
#include "formats.hpp"
#include "generate.hpp"
#include "instance.hpp"
#include "mincolor.hpp"
#include "partition.hpp"
#include "sat.hpp"
#include "solver.hpp"

struct rsp_error {
    rsp_code code;
    std::string message;
    int line;
};

struct rsp_instance {
    reusesp::Instance g;
};

struct rsp_path {
    reusesp::PathTrace p;
};

struct rsp_cnf {
    reusesp::CnfFormula f;
};

struct rsp_sat_reduction {
    reusesp::SatReduction red;
    rsp_instance instance_view;
    rsp_cnf formula_view;
};

struct rsp_solve_result {
    reusesp::SolveResult res;
    rsp_path witness;
};

namespace {

using reusesp::Error;
using reusesp::ErrorCode;

void set_error(rsp_error** err, rsp_code code, std::string message, int line = 0) {
    if (err) *err = new rsp_error{code, std::move(message), line};
}

rsp_code code_of(ErrorCode code) { return static_cast<rsp_code>(static_cast<int>(code)); }

// Exceptions never cross the C boundary: failures land in *err.
template <class F>
auto wrap_ptr(rsp_error** err, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        set_error(err, code_of(e.code()), e.what(), e.line());
    } catch (const std::exception& e) {
        set_error(err, RSP_ERR_INTERNAL, e.what());
    }
    return nullptr;
}

template <class F>
int wrap_status(rsp_error** err, F&& f) {
    try {
        f();
        return 0;
    } catch (const Error& e) {
        set_error(err, code_of(e.code()), e.what(), e.line());
    } catch (const std::exception& e) {
        set_error(err, RSP_ERR_INTERNAL, e.what());
    }
    return 1;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_valid(const reusesp::Instance& g) {
    reusesp::ValidationReport report = reusesp::validate_instance(g);
    if (!report.ok()) throw Error(ErrorCode::Validation, report.to_string());
}

reusesp::DominanceMode mode_of(rsp_dominance mode) {
    switch (mode) {
        case RSP_DOMINANCE_SIMPLE: return reusesp::DominanceMode::Simple;
        case RSP_DOMINANCE_OFF: return reusesp::DominanceMode::Off;
        case RSP_DOMINANCE_FULL: break;
    }
    return reusesp::DominanceMode::Full;
}

rsp_solve_result* make_result(reusesp::SolveResult res) {
    auto* out = new rsp_solve_result;
    out->res = std::move(res);
    if (out->res.witness) out->witness.p = *out->res.witness;
    return out;
}

rsp_sat_reduction* make_reduction(reusesp::SatReduction red) {
    auto* out = new rsp_sat_reduction;
    out->red = std::move(red);
    out->instance_view.g = out->red.instance;
    out->formula_view.f = out->red.map.formula;
    return out;
}

reusesp::PartitionInstance make_partition(const uint64_t* item_weights, size_t num_items) {
    if (!item_weights && num_items > 0)
        throw Error(ErrorCode::InvalidArgument, "item_weights must not be NULL");
    return reusesp::PartitionInstance{
        std::vector<reusesp::Weight>(item_weights, item_weights + num_items)};
}

std::string_view view_of(const char* text, size_t len) {
    if (!text && len > 0)
        throw Error(ErrorCode::InvalidArgument, "text must not be NULL");
    return std::string_view(text ? text : "", len);
}

} // namespace

extern "C" {

rsp_code rsp_error_code(const rsp_error* err) { return err->code; }

const char* rsp_error_message(const rsp_error* err) { return err->message.c_str(); }

int rsp_error_line(const rsp_error* err) { return err->line; }

void rsp_error_free(rsp_error* err) { delete err; }

void rsp_string_free(char* s) { delete[] s; }

const char* rsp_version(void) { return "1.0.0"; }

/* ---- instances ------------------------------------------------------- */

rsp_instance* rsp_instance_create(uint32_t vertex_count, uint32_t source, uint32_t sink) {
    auto* g = new rsp_instance;
    g->g.vertex_count = vertex_count;
    g->g.source = source;
    g->g.sink = sink;
    return g;
}

int64_t rsp_instance_add_edge(rsp_instance* g, uint32_t tail, uint32_t head,
                              uint64_t weight, uint64_t label) {
    g->g.edges.push_back(reusesp::Edge{tail, head, weight, label});
    return static_cast<int64_t>(g->g.edges.size()) - 1;
}

void rsp_instance_free(rsp_instance* g) { delete g; }

uint32_t rsp_instance_vertex_count(const rsp_instance* g) { return g->g.vertex_count; }

size_t rsp_instance_edge_count(const rsp_instance* g) { return g->g.edges.size(); }

uint32_t rsp_instance_source(const rsp_instance* g) { return g->g.source; }

uint32_t rsp_instance_sink(const rsp_instance* g) { return g->g.sink; }

int rsp_instance_edge(const rsp_instance* g, uint32_t edge_id, uint32_t* tail,
                      uint32_t* head, uint64_t* weight, uint64_t* label) {
    if (edge_id >= g->g.edges.size()) return 1;
    const reusesp::Edge& e = g->g.edges[edge_id];
    if (tail) *tail = e.tail;
    if (head) *head = e.head;
    if (weight) *weight = e.weight;
    if (label) *label = e.label;
    return 0;
}

char* rsp_instance_validate(const rsp_instance* g) {
    reusesp::ValidationReport report = reusesp::validate_instance(g->g);
    if (report.ok()) return nullptr;
    return copy_string(report.to_string());
}

rsp_instance* rsp_instance_parse(const char* text, size_t len, rsp_error** err) {
    return wrap_ptr(err, [&]() -> rsp_instance* {
        auto* g = new rsp_instance;
        try {
            g->g = reusesp::parse_instance(view_of(text, len));
        } catch (...) {
            delete g;
            throw;
        }
        return g;
    });
}

char* rsp_instance_serialize(const rsp_instance* g) {
    return copy_string(reusesp::serialize_instance(g->g));
}

/* ---- paths and certificates ------------------------------------------ */

rsp_path* rsp_path_create(const uint32_t* edge_ids, size_t count) {
    auto* p = new rsp_path;
    if (edge_ids) p->p.edge_ids.assign(edge_ids, edge_ids + count);
    return p;
}

void rsp_path_free(rsp_path* p) { delete p; }

size_t rsp_path_edge_count(const rsp_path* p) { return p->p.edge_ids.size(); }

int rsp_path_edge_at(const rsp_path* p, size_t index, uint32_t* edge_id) {
    if (index >= p->p.edge_ids.size()) return 1;
    if (edge_id) *edge_id = p->p.edge_ids[index];
    return 0;
}

int rsp_reuse_length(const rsp_instance* g, const rsp_path* p, uint64_t* out_length,
                     rsp_error** err) {
    return wrap_status(err, [&] {
        reusesp::Weight r = reusesp::reuse_length(g->g, p->p);
        if (out_length) *out_length = r;
    });
}

int rsp_verify_budget(const rsp_instance* g, const rsp_path* p, uint64_t budget,
                      int* out_within, rsp_error** err) {
    return wrap_status(err, [&] {
        bool within = reusesp::verify_budget(g->g, p->p, reusesp::Budget{budget});
        if (out_within) *out_within = within ? 1 : 0;
    });
}

char* rsp_certificate_serialize(const rsp_path* p, uint64_t budget) {
    return copy_string(reusesp::serialize_certificate(p->p, reusesp::Budget{budget}));
}

int rsp_certificate_parse(const char* text, size_t len, rsp_path** out_path,
                          uint64_t* out_budget, rsp_error** err) {
    return wrap_status(err, [&] {
        auto [path, budget] = reusesp::parse_certificate(view_of(text, len));
        if (out_path) *out_path = new rsp_path{std::move(path)};
        if (out_budget) *out_budget = budget.value;
    });
}

/* ---- solving --------------------------------------------------------- */

rsp_solve_result* rsp_solve(const rsp_instance* g, rsp_dominance mode, rsp_error** err) {
    return wrap_ptr(err, [&] {
        require_valid(g->g);
        return make_result(reusesp::solve_labelset(g->g, mode_of(mode)));
    });
}

rsp_solve_result* rsp_solve_bruteforce(const rsp_instance* g, uint64_t max_paths,
                                       rsp_error** err) {
    return wrap_ptr(err, [&] {
        require_valid(g->g);
        return make_result(reusesp::solve_bruteforce(g->g, max_paths));
    });
}

void rsp_solve_result_free(rsp_solve_result* r) { delete r; }

int rsp_solve_result_reachable(const rsp_solve_result* r) {
    return r->res.reachable() ? 1 : 0;
}

uint64_t rsp_solve_result_optimal_length(const rsp_solve_result* r) {
    return r->res.optimal_length.value_or(0);
}

const rsp_path* rsp_solve_result_witness(const rsp_solve_result* r) {
    return r->res.witness ? &r->witness : nullptr;
}

uint64_t rsp_solve_result_states_expanded(const rsp_solve_result* r) {
    return r->res.stats.states_expanded;
}

uint64_t rsp_solve_result_states_pruned(const rsp_solve_result* r) {
    return r->res.stats.states_pruned;
}

int rsp_decide(const rsp_instance* g, uint64_t budget, rsp_dominance mode, int* out_yes,
               rsp_path** out_witness, rsp_error** err) {
    return wrap_status(err, [&] {
        require_valid(g->g);
        reusesp::DecideResult d =
            reusesp::decide(g->g, reusesp::Budget{budget}, mode_of(mode));
        if (out_yes) *out_yes = d.yes ? 1 : 0;
        if (out_witness) *out_witness = d.witness ? new rsp_path{std::move(*d.witness)} : nullptr;
    });
}

/* ---- 3-CNF formulas --------------------------------------------------- */

rsp_cnf* rsp_cnf_create(uint32_t num_vars, const int32_t* literals, size_t num_clauses,
                        rsp_error** err) {
    return wrap_ptr(err, [&]() -> rsp_cnf* {
        if (!literals && num_clauses > 0)
            throw Error(ErrorCode::InvalidArgument, "literals must not be NULL");
        reusesp::CnfFormula f;
        f.num_vars = num_vars;
        for (size_t j = 0; j < num_clauses; ++j) {
            reusesp::Clause c;
            for (size_t k = 0; k < 3; ++k) {
                int32_t lit = literals[3 * j + k];
                if (lit == 0)
                    throw Error(ErrorCode::InvalidArgument, "literal must not be 0");
                c[k] = reusesp::Literal{
                    static_cast<uint32_t>(lit > 0 ? lit - 1 : -static_cast<int64_t>(lit) - 1),
                    lit < 0};
            }
            f.clauses.push_back(c);
        }
        reusesp::check_formula(f);
        return new rsp_cnf{std::move(f)};
    });
}

void rsp_cnf_free(rsp_cnf* f) { delete f; }

uint32_t rsp_cnf_num_vars(const rsp_cnf* f) { return f->f.num_vars; }

size_t rsp_cnf_num_clauses(const rsp_cnf* f) { return f->f.clauses.size(); }

int rsp_cnf_literal(const rsp_cnf* f, size_t clause, size_t slot, int32_t* out_literal) {
    if (clause >= f->f.clauses.size() || slot >= 3) return 1;
    const reusesp::Literal& lit = f->f.clauses[clause][slot];
    if (out_literal)
        *out_literal = lit.negated ? -static_cast<int32_t>(lit.var) - 1
                                   : static_cast<int32_t>(lit.var) + 1;
    return 0;
}

rsp_cnf* rsp_cnf_parse_dimacs(const char* text, size_t len, int pad_to_3, rsp_error** err) {
    return wrap_ptr(err, [&] {
        return new rsp_cnf{reusesp::parse_dimacs_cnf(view_of(text, len), pad_to_3 != 0)};
    });
}

char* rsp_cnf_serialize_dimacs(const rsp_cnf* f) {
    return copy_string(reusesp::serialize_dimacs_cnf(f->f));
}

int rsp_cnf_evaluate(const rsp_cnf* f, const uint8_t* values, int* out_satisfied,
                     int64_t* out_first_unsatisfied, rsp_error** err) {
    return wrap_status(err, [&] {
        if (!values) throw Error(ErrorCode::InvalidArgument, "values must not be NULL");
        reusesp::Assignment a;
        a.values.reserve(f->f.num_vars);
        for (uint32_t i = 0; i < f->f.num_vars; ++i) a.values.push_back(values[i] != 0);
        int64_t first_unsat = -1;
        for (size_t j = 0; j < f->f.clauses.size(); ++j)
            if (!reusesp::clause_satisfied(f->f.clauses[j], a)) {
                first_unsat = static_cast<int64_t>(j);
                break;
            }
        if (out_satisfied) *out_satisfied = first_unsat < 0 ? 1 : 0;
        if (out_first_unsatisfied) *out_first_unsatisfied = first_unsat;
    });
}

int rsp_brute_force_sat(const rsp_cnf* f, uint8_t* out_values, int* out_satisfiable,
                        rsp_error** err) {
    return wrap_status(err, [&] {
        auto witness = reusesp::brute_force_sat(f->f);
        if (out_satisfiable) *out_satisfiable = witness ? 1 : 0;
        if (witness && out_values)
            for (uint32_t i = 0; i < f->f.num_vars; ++i)
                out_values[i] = witness->values[i] ? 1 : 0;
    });
}

/* ---- 3SAT as a reuse instance ----------------------------------------- */

rsp_sat_reduction* rsp_reduce_3sat(const rsp_cnf* f, rsp_error** err) {
    return wrap_ptr(err, [&] { return make_reduction(reusesp::reduce_3sat(f->f)); });
}

void rsp_sat_reduction_free(rsp_sat_reduction* red) { delete red; }

const rsp_instance* rsp_sat_reduction_instance(const rsp_sat_reduction* red) {
    return &red->instance_view;
}

const rsp_cnf* rsp_sat_reduction_formula(const rsp_sat_reduction* red) {
    return &red->formula_view;
}

char* rsp_sat_reduction_serialize_map(const rsp_sat_reduction* red) {
    return copy_string(reusesp::serialize_sat_map(red->red));
}

rsp_sat_reduction* rsp_sat_reduction_parse_map(const char* text, size_t len,
                                               rsp_error** err) {
    return wrap_ptr(err, [&] {
        return make_reduction(reusesp::parse_sat_map(view_of(text, len)));
    });
}

int rsp_extract_assignment(const rsp_sat_reduction* red, const rsp_path* p,
                           uint8_t* out_values, rsp_error** err) {
    return wrap_status(err, [&] {
        reusesp::Assignment a = reusesp::extract_assignment(red->red, p->p);
        if (out_values)
            for (size_t i = 0; i < a.values.size(); ++i) out_values[i] = a.values[i] ? 1 : 0;
    });
}

int rsp_assignment_to_path(const rsp_sat_reduction* red, const uint8_t* values,
                           rsp_path** out_path, int64_t* out_unsatisfied_clause,
                           rsp_error** err) {
    return wrap_status(err, [&] {
        if (!values) throw Error(ErrorCode::InvalidArgument, "values must not be NULL");
        reusesp::Assignment a;
        const uint32_t n = red->red.map.formula.num_vars;
        a.values.reserve(n);
        for (uint32_t i = 0; i < n; ++i) a.values.push_back(values[i] != 0);
        reusesp::AssignmentPathOutcome outcome = reusesp::assignment_to_path(red->red, a);
        if (out_path)
            *out_path = outcome.path ? new rsp_path{std::move(*outcome.path)} : nullptr;
        if (out_unsatisfied_clause)
            *out_unsatisfied_clause =
                outcome.unsatisfied_clause
                    ? static_cast<int64_t>(*outcome.unsatisfied_clause)
                    : -1;
    });
}

/* ---- min-color embedding ---------------------------------------------- */

rsp_instance* rsp_reduce_mincolor(const rsp_instance* colored, rsp_error** err) {
    return wrap_ptr(err, [&] {
        return new rsp_instance{reusesp::reduce_mincolor(colored->g)};
    });
}

/* ---- the flawed PARTITION construction -------------------------------- */

rsp_instance* rsp_reduce_partition(const uint64_t* item_weights, size_t num_items,
                                   rsp_error** err) {
    return wrap_ptr(err, [&] {
        reusesp::PartitionReduction red =
            reusesp::reduce_partition(make_partition(item_weights, num_items));
        return new rsp_instance{std::move(red.instance)};
    });
}

int rsp_brute_force_partition(const uint64_t* item_weights, size_t num_items,
                              uint32_t* out_subset_mask, int* out_feasible,
                              rsp_error** err) {
    return wrap_status(err, [&] {
        auto subset = reusesp::brute_force_partition(make_partition(item_weights, num_items));
        if (out_feasible) *out_feasible = subset ? 1 : 0;
        if (out_subset_mask) {
            uint32_t mask = 0;
            if (subset)
                for (uint32_t i : *subset) mask |= uint32_t{1} << i;
            *out_subset_mask = mask;
        }
    });
}

char* rsp_demo_flaw(const uint64_t* item_weights, size_t num_items, int* out_refuted,
                    rsp_error** err) {
    return wrap_ptr(err, [&]() -> char* {
        reusesp::FlawReport report =
            reusesp::demonstrate_flaw(make_partition(item_weights, num_items));
        if (out_refuted) *out_refuted = report.refuted ? 1 : 0;
        return copy_string(reusesp::render_flaw_report(report));
    });
}

/* ---- seeded generators ------------------------------------------------ */

rsp_instance* rsp_generate_instance(uint64_t seed, uint32_t max_vertices,
                                    uint32_t max_edges, uint32_t max_shared_labels) {
    return new rsp_instance{
        reusesp::generate_instance(seed, max_vertices, max_edges, max_shared_labels)};
}

rsp_cnf* rsp_generate_cnf(uint64_t seed, uint32_t max_vars, uint32_t max_clauses) {
    return new rsp_cnf{reusesp::generate_cnf(seed, max_vars, max_clauses)};
}

rsp_instance* rsp_generate_colored(uint64_t seed, uint32_t max_vertices,
                                   uint32_t max_colors) {
    return new rsp_instance{reusesp::generate_colored(seed, max_vertices, max_colors)};
}

} // extern "C"
