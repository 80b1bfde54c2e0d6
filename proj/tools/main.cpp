// Command-line front end; talks to the library through the C API only.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reusesp.h"

namespace {

[[noreturn]] void fail(rsp_error* err) {
    if (err) {
        std::cerr << "error: " << rsp_error_message(err) << '\n';
        rsp_error_free(err);
    } else {
        std::cerr << "error: unknown failure\n";
    }
    std::exit(1);
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            std::exit(1);
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        std::exit(1);
    }
    out << text;
}

rsp_instance* parse_instance_or_fail(const std::string& path) {
    std::string text = read_input(path);
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_instance_parse(text.data(), text.size(), &err);
    if (!g) fail(err);
    return g;
}

struct DominanceFlags {
    bool off = false;
    bool simple = false;

    rsp_dominance mode() const {
        if (off) return RSP_DOMINANCE_OFF;
        if (simple) return RSP_DOMINANCE_SIMPLE;
        return RSP_DOMINANCE_FULL;
    }
};

void add_dominance_flags(CLI::App* cmd, DominanceFlags& flags) {
    auto* off = cmd->add_flag("--no-dominance", flags.off, "disable state pruning");
    cmd->add_flag("--simple-dominance", flags.simple,
                  "prune on whole label sets instead of reachable-label sets")
        ->excludes(off);
}

int cmd_solve(const std::string& instance_path, const DominanceFlags& flags, bool brute,
              std::uint64_t max_brute, const std::string& out_path) {
    rsp_instance* g = parse_instance_or_fail(instance_path);
    rsp_error* err = nullptr;
    rsp_solve_result* res = brute ? rsp_solve_bruteforce(g, max_brute, &err)
                                  : rsp_solve(g, flags.mode(), &err);
    if (!res) fail(err);
    if (!rsp_solve_result_reachable(res)) {
        std::cout << "UNREACHABLE\n";
        rsp_solve_result_free(res);
        rsp_instance_free(g);
        return 2;
    }
    std::uint64_t optimal = rsp_solve_result_optimal_length(res);
    std::cout << "OPTIMAL " << optimal << '\n';
    std::cout << "STATS expanded=" << rsp_solve_result_states_expanded(res)
              << " pruned=" << rsp_solve_result_states_pruned(res) << '\n';
    char* cert = rsp_certificate_serialize(rsp_solve_result_witness(res), optimal);
    write_output(out_path, cert);
    rsp_string_free(cert);
    rsp_solve_result_free(res);
    rsp_instance_free(g);
    return 0;
}

int cmd_decide(const std::string& instance_path, std::uint64_t budget,
               const DominanceFlags& flags, const std::string& out_path) {
    rsp_instance* g = parse_instance_or_fail(instance_path);
    rsp_error* err = nullptr;
    int yes = 0;
    rsp_path* witness = nullptr;
    if (rsp_decide(g, budget, flags.mode(), &yes, &witness, &err) != 0) fail(err);
    if (!yes) {
        std::cout << "NO\n";
        rsp_instance_free(g);
        return 3;
    }
    std::cout << "YES\n";
    char* cert = rsp_certificate_serialize(witness, budget);
    write_output(out_path, cert);
    rsp_string_free(cert);
    rsp_path_free(witness);
    rsp_instance_free(g);
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& cert_path) {
    rsp_instance* g = parse_instance_or_fail(instance_path);
    std::string cert_text = read_input(cert_path);
    rsp_error* err = nullptr;
    rsp_path* path = nullptr;
    std::uint64_t budget = 0;
    if (rsp_certificate_parse(cert_text.data(), cert_text.size(), &path, &budget, &err) != 0)
        fail(err);
    std::uint64_t r = 0;
    if (rsp_reuse_length(g, path, &r, &err) != 0) {
        if (rsp_error_code(err) == RSP_ERR_INVALID_PATH) {
            std::cout << "INVALID " << rsp_error_message(err) << '\n';
            rsp_error_free(err);
            rsp_path_free(path);
            rsp_instance_free(g);
            return 3;
        }
        fail(err);
    }
    int result;
    if (r <= budget) {
        std::cout << "VALID r=" << r << " within K=" << budget << '\n';
        result = 0;
    } else {
        std::cout << "INVALID r=" << r << " exceeds K=" << budget << '\n';
        result = 3;
    }
    rsp_path_free(path);
    rsp_instance_free(g);
    return result;
}

int cmd_reduce_3sat(const std::string& cnf_path, bool pad, const std::string& out_path,
                    const std::string& map_path) {
    std::string text = read_input(cnf_path);
    rsp_error* err = nullptr;
    rsp_cnf* f = rsp_cnf_parse_dimacs(text.data(), text.size(), pad ? 1 : 0, &err);
    if (!f) fail(err);
    rsp_sat_reduction* red = rsp_reduce_3sat(f, &err);
    if (!red) fail(err);
    const rsp_instance* g = rsp_sat_reduction_instance(red);
    char* serialized = rsp_instance_serialize(g);
    write_output(out_path, serialized);
    rsp_string_free(serialized);
    if (!map_path.empty()) {
        char* map_text = rsp_sat_reduction_serialize_map(red);
        write_output(map_path, map_text);
        rsp_string_free(map_text);
    }
    std::cerr << "reduced " << rsp_cnf_num_vars(f) << " variable(s), "
              << rsp_cnf_num_clauses(f) << " clause(s) -> " << rsp_instance_vertex_count(g)
              << " vertices, " << rsp_instance_edge_count(g) << " edges\n";
    rsp_sat_reduction_free(red);
    rsp_cnf_free(f);
    return 0;
}

int cmd_extract(const std::string& map_path, const std::string& cert_path) {
    std::string map_text = read_input(map_path);
    rsp_error* err = nullptr;
    rsp_sat_reduction* red = rsp_sat_reduction_parse_map(map_text.data(), map_text.size(), &err);
    if (!red) fail(err);
    std::string cert_text = read_input(cert_path);
    rsp_path* path = nullptr;
    if (rsp_certificate_parse(cert_text.data(), cert_text.size(), &path, nullptr, &err) != 0)
        fail(err);
    const rsp_cnf* f = rsp_sat_reduction_formula(red);
    std::uint32_t n = rsp_cnf_num_vars(f);
    std::vector<std::uint8_t> values(n, 0);
    if (rsp_extract_assignment(red, path, values.data(), &err) != 0) fail(err);
    std::cout << "ASSIGNMENT";
    for (std::uint32_t i = 0; i < n; ++i)
        std::cout << ' ' << (values[i] ? static_cast<std::int64_t>(i) + 1
                                       : -static_cast<std::int64_t>(i) - 1);
    std::cout << '\n';
    int satisfied = 0;
    std::int64_t first_unsat = -1;
    if (rsp_cnf_evaluate(f, values.data(), &satisfied, &first_unsat, &err) != 0) fail(err);
    if (satisfied)
        std::cout << "SATISFIES YES\n";
    else
        std::cout << "SATISFIES NO clause=" << first_unsat << '\n';
    rsp_path_free(path);
    rsp_sat_reduction_free(red);
    return 0;
}

int cmd_reduce_partition(const std::vector<std::uint64_t>& weights,
                         const std::string& out_path) {
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_reduce_partition(weights.data(), weights.size(), &err);
    if (!g) fail(err);
    char* serialized = rsp_instance_serialize(g);
    write_output(out_path, serialized);
    rsp_string_free(serialized);
    std::cerr << "reduced " << weights.size() << " item(s) -> "
              << rsp_instance_vertex_count(g) << " vertices, " << rsp_instance_edge_count(g)
              << " edges\n";
    rsp_instance_free(g);
    return 0;
}

int cmd_reduce_mincolor(const std::string& instance_path, const std::string& out_path) {
    rsp_instance* colored = parse_instance_or_fail(instance_path);
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_reduce_mincolor(colored, &err);
    if (!g) fail(err);
    char* serialized = rsp_instance_serialize(g);
    write_output(out_path, serialized);
    rsp_string_free(serialized);
    rsp_instance_free(g);
    rsp_instance_free(colored);
    return 0;
}

int cmd_demo_flaw(const std::vector<std::uint64_t>& weights) {
    rsp_error* err = nullptr;
    int refuted = 0;
    char* report = rsp_demo_flaw(weights.data(), weights.size(), &refuted, &err);
    if (!report) fail(err);
    std::cout << report;
    rsp_string_free(report);
    return 0;
}

int cmd_gen_random(const std::string& kind, std::uint64_t seed, std::uint32_t vertices,
                   std::uint32_t edges, std::uint32_t labels, std::uint32_t vars,
                   std::uint32_t clauses, std::uint32_t colors, const std::string& out_path) {
    char* serialized = nullptr;
    if (kind == "instance") {
        rsp_instance* g = rsp_generate_instance(seed, vertices, edges, labels);
        serialized = rsp_instance_serialize(g);
        rsp_instance_free(g);
    } else if (kind == "cnf") {
        rsp_cnf* f = rsp_generate_cnf(seed, vars, clauses);
        serialized = rsp_cnf_serialize_dimacs(f);
        rsp_cnf_free(f);
    } else {
        rsp_instance* g = rsp_generate_colored(seed, vertices, colors);
        serialized = rsp_instance_serialize(g);
        rsp_instance_free(g);
    }
    write_output(out_path, serialized);
    rsp_string_free(serialized);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest paths with edge information reuse"};
    app.require_subcommand(1);

    std::string instance_path, cert_path, cnf_path, map_path, out_path, map_out, kind;
    std::vector<std::uint64_t> weights;
    DominanceFlags flags;
    bool brute = false, pad = false;
    std::uint64_t budget = 0, max_brute = 100000, seed = 1;
    std::uint32_t vertices = 12, edges = 20, labels = 6, vars = 8, clauses = 12, colors = 4;

    auto* solve = app.add_subcommand("solve", "minimum reuse length and a witness path");
    solve->add_option("instance", instance_path, "instance file, or - for stdin")->required();
    add_dominance_flags(solve, flags);
    solve->add_flag("--brute", brute, "solve by exhaustive path enumeration");
    solve->add_option("--max-brute", max_brute, "path cap for --brute");
    solve->add_option("-o,--output", out_path, "write the certificate here");

    auto* decide = app.add_subcommand("decide", "is there a path within the budget");
    decide->add_option("instance", instance_path, "instance file, or - for stdin")->required();
    decide->add_option("-k,--budget", budget, "inclusive budget")->required();
    add_dominance_flags(decide, flags);
    decide->add_option("-o,--output", out_path, "write the certificate here");

    auto* verify = app.add_subcommand("verify", "check a certificate against its budget");
    verify->add_option("instance", instance_path, "instance file, or - for stdin")->required();
    verify->add_option("certificate", cert_path, "certificate file, or - for stdin")
        ->required();

    auto* r3sat = app.add_subcommand("reduce-3sat", "embed a 3-CNF as a reuse instance");
    r3sat->add_option("cnf", cnf_path, "DIMACS CNF file, or - for stdin")->required();
    r3sat->add_flag("--pad-to-3", pad, "widen 1- and 2-literal clauses");
    r3sat->add_option("-o,--output", out_path, "write the instance here");
    r3sat->add_option("-m,--map", map_out, "write the reduction map here");

    auto* extract = app.add_subcommand("extract", "read an assignment off a certificate");
    extract->add_option("map", map_path, "reduction map file, or - for stdin")->required();
    extract->add_option("certificate", cert_path, "certificate file, or - for stdin")
        ->required();

    auto* rpart = app.add_subcommand("reduce-partition",
                                     "build the three-chain item graph");
    rpart->add_option("weights", weights, "item weights")->required()->expected(-1);
    rpart->add_option("-o,--output", out_path, "write the instance here");

    auto* rcolor = app.add_subcommand("reduce-mincolor",
                                      "turn a colored instance into a reuse instance");
    rcolor->add_option("instance", instance_path, "colored instance file, or - for stdin")
        ->required();
    rcolor->add_option("-o,--output", out_path, "write the instance here");

    auto* demo = app.add_subcommand("demo-flaw",
                                    "show that the item-graph construction fails");
    demo->add_option("weights", weights, "item weights")->required()->expected(-1);

    auto* gen = app.add_subcommand("gen-random", "seeded random inputs");
    gen->add_option("kind", kind, "instance, cnf, or colored")
        ->required()
        ->check(CLI::IsMember({"instance", "cnf", "colored"}));
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--vertices", vertices, "vertex bound");
    gen->add_option("--edges", edges, "edge bound");
    gen->add_option("--labels", labels, "shared-label bound");
    gen->add_option("--vars", vars, "variable bound");
    gen->add_option("--clauses", clauses, "clause bound");
    gen->add_option("--colors", colors, "color bound");
    gen->add_option("-o,--output", out_path, "write the output here");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return cmd_solve(instance_path, flags, brute, max_brute, out_path);
    if (decide->parsed()) return cmd_decide(instance_path, budget, flags, out_path);
    if (verify->parsed()) return cmd_verify(instance_path, cert_path);
    if (r3sat->parsed()) return cmd_reduce_3sat(cnf_path, pad, out_path, map_out);
    if (extract->parsed()) return cmd_extract(map_path, cert_path);
    if (rpart->parsed()) return cmd_reduce_partition(weights, out_path);
    if (rcolor->parsed()) return cmd_reduce_mincolor(instance_path, out_path);
    if (demo->parsed()) return cmd_demo_flaw(weights);
    if (gen->parsed())
        return cmd_gen_random(kind, seed, vertices, edges, labels, vars, clauses, colors,
                              out_path);
    return 1;
}
