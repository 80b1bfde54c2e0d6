#include "sat.hpp"

#include <string>

#include "error.hpp"

namespace reusesp {

void check_formula(const CnfFormula& f) {
    if (f.num_vars == 0)
        throw Error(ErrorCode::InvalidArgument, "formula must have at least one variable");
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        for (const Literal& lit : f.clauses[j])
            if (lit.var >= f.num_vars)
                throw Error(ErrorCode::InvalidArgument,
                            "clause " + std::to_string(j) + " references variable " +
                                std::to_string(lit.var) + ", formula has " +
                                std::to_string(f.num_vars));
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
    for (const Literal& lit : c)
        if (a.values[lit.var] != lit.negated) return true;
    return false;
}

bool formula_satisfied(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses)
        if (!clause_satisfied(c, a)) return false;
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    check_formula(f);
    if (f.num_vars > 24)
        throw Error(ErrorCode::TooLarge, "exhaustive satisfiability check capped at 24 "
                                         "variables, formula has " +
                                             std::to_string(f.num_vars));
    const std::uint32_t n = f.num_vars;
    Assignment a;
    a.values.assign(n, false);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        // Variable 0 is the most significant digit, so x counts assignments
        // in lexicographic order with false before true.
        for (std::uint32_t i = 0; i < n; ++i)
            a.values[i] = (x >> (n - 1 - i)) & 1;
        if (formula_satisfied(f, a)) return a;
    }
    return std::nullopt;
}

namespace {

Label branch_label(std::uint32_t var, bool negated) {
    return negated ? 2 * std::uint64_t{var} + 2 : 2 * std::uint64_t{var} + 1;
}

} // namespace

SatReduction reduce_3sat(const CnfFormula& f) {
    check_formula(f);
    const std::uint32_t n = f.num_vars;
    const std::uint32_t m = static_cast<std::uint32_t>(f.clauses.size());

    SatReduction red;
    Instance& g = red.instance;
    SatReductionMap& map = red.map;
    map.formula = f;

    // Vertices: u_i = 3i, branches 3i+1 and 3i+2 for each variable, then the
    // clause spine v_j = 3n+1+4j with branches in between. Sink is v_m.
    g.vertex_count = 3 * n + 4 * m + 2;
    g.source = 0;
    g.sink = g.vertex_count - 1;
    auto u = [&](std::uint32_t i) { return 3 * i; };
    auto v = [&](std::uint32_t j) { return 3 * n + 1 + 4 * j; };

    Label next_private = 2 * std::uint64_t{n} + 1;
    auto add_edge = [&](Vertex tail, Vertex head, Weight w, Label l) {
        g.edges.push_back(Edge{tail, head, w, l});
        return static_cast<EdgeId>(g.edges.size() - 1);
    };

    for (std::uint32_t i = 0; i < n; ++i) {
        VariableGadget gd;
        gd.entry = u(i);
        gd.branch_true = u(i) + 1;
        gd.branch_false = u(i) + 2;
        gd.exit = u(i + 1);
        gd.edge_true = add_edge(gd.entry, gd.branch_true, 1, branch_label(i, false));
        gd.edge_false = add_edge(gd.entry, gd.branch_false, 1, branch_label(i, true));
        gd.exit_true = add_edge(gd.branch_true, gd.exit, 0, next_private++);
        gd.exit_false = add_edge(gd.branch_false, gd.exit, 0, next_private++);
        map.variables.push_back(gd);
    }

    map.connector = add_edge(u(n), v(0), 0, next_private++);

    for (std::uint32_t j = 0; j < m; ++j) {
        ClauseGadget gd;
        gd.entry = v(j);
        gd.exit = v(j + 1);
        for (std::uint32_t k = 0; k < 3; ++k) {
            gd.branch[k] = v(j) + 1 + k;
            const Literal& lit = f.clauses[j][k];
            gd.literal_edge[k] =
                add_edge(gd.entry, gd.branch[k], 1, branch_label(lit.var, lit.negated));
        }
        for (std::uint32_t k = 0; k < 3; ++k)
            gd.exit_edge[k] = add_edge(gd.branch[k], gd.exit, 0, next_private++);
        map.clauses.push_back(gd);
    }

    return red;
}

Assignment extract_assignment(const SatReduction& red, const PathTrace& p) {
    try {
        check_path(red.instance, p);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidPath,
                    std::string("path is not an s-t path of the reduced instance: ") +
                        e.what());
    }
    std::vector<char> on_path(red.instance.edges.size(), 0);
    for (EdgeId id : p.edge_ids) on_path[id] = 1;

    Assignment a;
    a.values.reserve(red.map.variables.size());
    for (const VariableGadget& gd : red.map.variables) {
        bool took_true = on_path[gd.edge_true];
        bool took_false = on_path[gd.edge_false];
        if (took_true == took_false)
            throw Error(ErrorCode::Internal,
                        "s-t path does not commit a variable gadget exactly once");
        a.values.push_back(took_true);
    }
    return a;
}

AssignmentPathOutcome assignment_to_path(const SatReduction& red, const Assignment& a) {
    const CnfFormula& f = red.map.formula;
    if (a.values.size() != f.num_vars)
        throw Error(ErrorCode::InvalidArgument,
                    "assignment has " + std::to_string(a.values.size()) +
                        " values, formula has " + std::to_string(f.num_vars) +
                        " variables");

    AssignmentPathOutcome outcome;
    PathTrace path;
    for (std::uint32_t i = 0; i < f.num_vars; ++i) {
        const VariableGadget& gd = red.map.variables[i];
        path.edge_ids.push_back(a.values[i] ? gd.edge_true : gd.edge_false);
        path.edge_ids.push_back(a.values[i] ? gd.exit_true : gd.exit_false);
    }
    path.edge_ids.push_back(red.map.connector);
    for (std::uint32_t j = 0; j < f.clauses.size(); ++j) {
        std::optional<std::uint32_t> slot;
        for (std::uint32_t k = 0; k < 3; ++k) {
            const Literal& lit = f.clauses[j][k];
            if (a.values[lit.var] != lit.negated) {
                slot = k;
                break;
            }
        }
        if (!slot) {
            outcome.unsatisfied_clause = j;
            return outcome;
        }
        const ClauseGadget& gd = red.map.clauses[j];
        path.edge_ids.push_back(gd.literal_edge[*slot]);
        path.edge_ids.push_back(gd.exit_edge[*slot]);
    }
    outcome.path = std::move(path);
    return outcome;
}

IffReport check_3sat_iff(const CnfFormula& f) {
    IffReport report;
    report.num_vars = f.num_vars;
    auto witness = brute_force_sat(f);
    report.formula_satisfiable = witness.has_value();
    report.sat_witness = std::move(witness);

    SatReduction red = reduce_3sat(f);
    SolveResult solved = solve_labelset(red.instance);
    report.optimal_length = *solved.optimal_length;
    report.optimum_equals_num_vars = report.optimal_length == f.num_vars;
    report.agree = report.formula_satisfiable == report.optimum_equals_num_vars;
    return report;
}

} // namespace reusesp
