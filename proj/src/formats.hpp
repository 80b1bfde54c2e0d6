#ifndef REUSESP_FORMATS_HPP
#define REUSESP_FORMATS_HPP

#include <string>
#include <string_view>
#include <utility>

#include "instance.hpp"
#include "sat.hpp"

namespace reusesp {

// All parsers are total on arbitrary bytes: they either return a value or
// throw Error with a 1-based line number; they never crash. Lines end in LF
// or CRLF, tokens are separated by runs of spaces or tabs, blank lines are
// skipped, and lines starting with 'c' are comments.

// Instance files:
//   p reuse <vertex_count> <edge_count> <source> <sink>
//   e <tail> <head> <weight> <label>     (one per edge; ids follow file order)
// Header counts must match exactly; the parsed instance must also pass
// validation. Bounds keep hostile headers from forcing huge allocations:
// vertex and edge counts up to 1e6, weights up to 1e9, labels up to 1e18.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& g);

// Certificate files:
//   p cert <edge_count> <budget>
//   x <edge_id>                          (one per path edge, in walk order)
std::pair<PathTrace, Budget> parse_certificate(std::string_view text);
std::string serialize_certificate(const PathTrace& p, Budget k);

// DIMACS CNF:
//   p cnf <num_vars> <num_clauses>
//   <lit> ... <lit> 0                    (clauses may span or share lines)
// Clauses must have exactly three literals; with pad_to_3, one- and
// two-literal clauses are widened by repeating their last literal.
CnfFormula parse_dimacs_cnf(std::string_view text, bool pad_to_3 = false);
std::string serialize_dimacs_cnf(const CnfFormula& f);

// Reduction map files tie a reduced instance back to its formula:
//   p map3sat <num_vars> <num_clauses>
//   v <i> <branch_true> <branch_false> <edge_true> <edge_false>
//   l <j> <k> <dimacs_literal> <literal_edge>
// Parsing rebuilds the reduction from the recorded literals and rejects the
// file unless every recorded vertex and edge id matches the rebuilt gadgets.
SatReduction parse_sat_map(std::string_view text);
std::string serialize_sat_map(const SatReduction& red);

} // namespace reusesp

#endif
