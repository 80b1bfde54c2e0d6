#ifndef REUSESP_SAT_HPP
#define REUSESP_SAT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "instance.hpp"
#include "solver.hpp"

namespace reusesp {

struct Literal {
    std::uint32_t var = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

// 3-CNF: every clause has exactly three literals. Duplicate literals within
// a clause are allowed; that is how shorter clauses are padded.
struct CnfFormula {
    std::uint32_t num_vars = 0;
    std::vector<Clause> clauses;

    bool operator==(const CnfFormula&) const = default;
};

struct Assignment {
    std::vector<bool> values; // values[i] is variable i

    bool operator==(const Assignment&) const = default;
};

// Throws Error(InvalidArgument) unless num_vars >= 1 and every literal's
// variable is in range.
void check_formula(const CnfFormula& f);

bool clause_satisfied(const Clause& c, const Assignment& a);
bool formula_satisfied(const CnfFormula& f, const Assignment& a);

// First satisfying assignment, ordered lexicographically with variable 0
// most significant and false before true; nullopt when unsatisfiable.
// A formula with no clauses is satisfied by the all-false assignment.
// Throws Error(TooLarge) beyond 24 variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

// Bookkeeping for one variable gadget: a diamond that forces every s-t path
// to commit to the true or the false branch.
struct VariableGadget {
    Vertex entry = 0;        // u_i
    Vertex branch_true = 0;  // visited when the variable is set true
    Vertex branch_false = 0; // visited when the variable is set false
    Vertex exit = 0;         // u_{i+1}
    EdgeId edge_true = 0;    // weight 1; label shared with matching clause edges
    EdgeId edge_false = 0;   // weight 1; label shared with matching clause edges
    EdgeId exit_true = 0;    // weight 0, private label
    EdgeId exit_false = 0;   // weight 0, private label
};

// Bookkeeping for one clause gadget: a three-way fork, one branch per
// literal slot.
struct ClauseGadget {
    Vertex entry = 0; // v_j
    std::array<Vertex, 3> branch{};
    Vertex exit = 0; // v_{j+1}
    std::array<EdgeId, 3> literal_edge{}; // weight 1; label copied from the literal's branch
    std::array<EdgeId, 3> exit_edge{};    // weight 0, private label
};

struct SatReductionMap {
    CnfFormula formula;
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
    EdgeId connector = 0; // weight-0 bridge from the last variable exit to v_0
};

// A formula embedded as a reuse instance. A satisfying assignment walks the
// matching variable branches for free reuse in the clause gadgets, giving a
// path of reuse length exactly num_vars; every s-t path costs at least
// num_vars, and only satisfying assignments attain it.
struct SatReduction {
    Instance instance;
    SatReductionMap map;
};

// Builds the gadget graph: 3n + 4m + 2 vertices and 4n + 6m + 1 edges for
// n variables and m clauses. The branch edge of variable i and the clause
// edge of a slot share a label exactly when the slot's literal is that
// variable with the matching polarity.
SatReduction reduce_3sat(const CnfFormula& f);

// Reads the assignment off a path: variable i is true when the path visits
// branch_true of its gadget. Total on s-t paths, since every such path
// commits each gadget one way. Throws Error(InvalidPath) when the path is
// not an s-t path of the reduced instance.
Assignment extract_assignment(const SatReduction& red, const PathTrace& p);

struct AssignmentPathOutcome {
    // Present when the assignment satisfies the formula; the path then has
    // reuse length exactly num_vars.
    std::optional<PathTrace> path;
    // Index of the first clause the assignment leaves unsatisfied, otherwise.
    std::optional<std::uint32_t> unsatisfied_clause;
};

// Routes the assignment through the gadgets, taking in each clause the
// lowest slot whose literal the assignment satisfies.
AssignmentPathOutcome assignment_to_path(const SatReduction& red, const Assignment& a);

struct IffReport {
    std::uint32_t num_vars = 0;
    bool formula_satisfiable = false; // exhaustive check on the formula
    std::optional<Assignment> sat_witness;
    Weight optimal_length = 0; // solver result on the reduced instance
    bool optimum_equals_num_vars = false;
    bool agree = false; // satisfiable exactly when the optimum is num_vars
};

// Runs both sides of the equivalence on one formula and reports whether they
// agree. Throws Error(TooLarge) beyond 24 variables.
IffReport check_3sat_iff(const CnfFormula& f);

} // namespace reusesp

#endif
