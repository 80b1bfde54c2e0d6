#ifndef REUSESP_GENERATE_HPP
#define REUSESP_GENERATE_HPP

#include <cstdint>

#include "instance.hpp"
#include "partition.hpp"
#include "sat.hpp"

namespace reusesp {

// Seeded generators for the random test suites and the CLI. All of them are
// deterministic functions of their arguments: the engine is mt19937_64,
// whose output sequence is fixed by the standard, so equal seeds give equal
// results on every platform.

// Random valid instance: forward edges only, a mix of shared and private
// labels, weights 0..8. Most seeds include a source-to-sink backbone; a few
// leave the sink unreachable or produce the single-vertex instance.
Instance generate_instance(std::uint64_t seed, std::uint32_t max_vertices = 12,
                           std::uint32_t max_edges = 20,
                           std::uint32_t max_shared_labels = 6);

// Random 3-CNF with 1..max_vars variables and 1..max_clauses clauses.
CnfFormula generate_cnf(std::uint64_t seed, std::uint32_t max_vars = 8,
                        std::uint32_t max_clauses = 12);

// Random colored instance: always source-to-sink connected, labels drawn
// from 1..max_colors, and weight set equal to the label so the file form
// passes full validation.
Instance generate_colored(std::uint64_t seed, std::uint32_t max_vertices = 10,
                          std::uint32_t max_colors = 4);

// Random item list: 1..max_items items with weights 1..6.
PartitionInstance generate_partition(std::uint64_t seed, std::uint32_t max_items = 10);

} // namespace reusesp

#endif
