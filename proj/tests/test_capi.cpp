#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "reusesp.h"

namespace {

rsp_instance* build_diamond() {
    rsp_instance* g = rsp_instance_create(4, 0, 3);
    REQUIRE(g != nullptr);
    CHECK(rsp_instance_add_edge(g, 0, 1, 3, 9) == 0);
    CHECK(rsp_instance_add_edge(g, 1, 3, 3, 9) == 1);
    CHECK(rsp_instance_add_edge(g, 0, 2, 2, 1) == 2);
    CHECK(rsp_instance_add_edge(g, 2, 3, 2, 2) == 3);
    return g;
}

std::string take_string(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    rsp_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version string is present") {
    const char* v = rsp_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
}

TEST_CASE("instances build up and read back") {
    rsp_instance* g = build_diamond();
    CHECK(rsp_instance_vertex_count(g) == 4);
    CHECK(rsp_instance_edge_count(g) == 4);
    CHECK(rsp_instance_source(g) == 0);
    CHECK(rsp_instance_sink(g) == 3);

    uint32_t tail = 0, head = 0;
    uint64_t weight = 0, label = 0;
    REQUIRE(rsp_instance_edge(g, 1, &tail, &head, &weight, &label) == 0);
    CHECK(tail == 1);
    CHECK(head == 3);
    CHECK(weight == 3);
    CHECK(label == 9);
    CHECK(rsp_instance_edge(g, 99, &tail, &head, &weight, &label) != 0);

    char* report = rsp_instance_validate(g);
    CHECK(report == nullptr);
    rsp_instance_free(g);
}

TEST_CASE("validation reports come back as text") {
    rsp_instance* g = rsp_instance_create(2, 0, 1);
    rsp_instance_add_edge(g, 0, 1, 2, 5);
    rsp_instance_add_edge(g, 0, 1, 3, 5);
    std::string report = take_string(rsp_instance_validate(g));
    CHECK(report.find("label 5 has weights {2,3}") != std::string::npos);
    rsp_instance_free(g);
}

TEST_CASE("parse and serialize round trip through the C surface") {
    const char text[] = "p reuse 2 1 0 1\ne 0 1 4 1\n";
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_instance_parse(text, sizeof text - 1, &err);
    REQUIRE(g != nullptr);
    CHECK(err == nullptr);
    CHECK(take_string(rsp_instance_serialize(g)) == text);
    rsp_instance_free(g);
}

TEST_CASE("parse failures fill the error object") {
    const char text[] = "p reuse 2 1 0 1\ne 0 1 4 x\n";
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_instance_parse(text, sizeof text - 1, &err);
    CHECK(g == nullptr);
    REQUIRE(err != nullptr);
    CHECK(rsp_error_code(err) == RSP_ERR_PARSE);
    CHECK(rsp_error_line(err) == 2);
    CHECK(std::string(rsp_error_message(err)).find("invalid") != std::string::npos);
    rsp_error_free(err);

    const char cyclic[] = "p reuse 2 2 0 1\ne 0 1 1 1\ne 1 0 1 2\n";
    err = nullptr;
    g = rsp_instance_parse(cyclic, sizeof cyclic - 1, &err);
    CHECK(g == nullptr);
    REQUIRE(err != nullptr);
    CHECK(rsp_error_code(err) == RSP_ERR_VALIDATION);
    rsp_error_free(err);
}

TEST_CASE("paths and reuse length work across the boundary") {
    rsp_instance* g = build_diamond();
    const uint32_t ids[] = {0, 1};
    rsp_path* p = rsp_path_create(ids, 2);
    REQUIRE(p != nullptr);
    CHECK(rsp_path_edge_count(p) == 2);
    uint32_t id = 99;
    REQUIRE(rsp_path_edge_at(p, 1, &id) == 0);
    CHECK(id == 1);
    CHECK(rsp_path_edge_at(p, 2, &id) != 0);

    uint64_t length = 0;
    rsp_error* err = nullptr;
    REQUIRE(rsp_reuse_length(g, p, &length, &err) == 0);
    CHECK(length == 3);

    int within = 0;
    REQUIRE(rsp_verify_budget(g, p, 3, &within, &err) == 0);
    CHECK(within == 1);
    REQUIRE(rsp_verify_budget(g, p, 2, &within, &err) == 0);
    CHECK(within == 0);

    rsp_path_free(p);
    rsp_instance_free(g);
}

TEST_CASE("invalid paths produce INVALID_PATH errors") {
    rsp_instance* g = build_diamond();
    const uint32_t ids[] = {0, 3};
    rsp_path* p = rsp_path_create(ids, 2);
    uint64_t length = 0;
    rsp_error* err = nullptr;
    CHECK(rsp_reuse_length(g, p, &length, &err) != 0);
    REQUIRE(err != nullptr);
    CHECK(rsp_error_code(err) == RSP_ERR_INVALID_PATH);
    CHECK(rsp_error_line(err) == 0);
    rsp_error_free(err);
    rsp_path_free(p);
    rsp_instance_free(g);
}

TEST_CASE("certificates round trip") {
    const uint32_t ids[] = {0, 1};
    rsp_path* p = rsp_path_create(ids, 2);
    std::string text = take_string(rsp_certificate_serialize(p, 7));
    CHECK(text == "p cert 2 7\nx 0\nx 1\n");

    rsp_path* back = nullptr;
    uint64_t budget = 0;
    rsp_error* err = nullptr;
    REQUIRE(rsp_certificate_parse(text.c_str(), text.size(), &back, &budget, &err) == 0);
    REQUIRE(back != nullptr);
    CHECK(budget == 7);
    CHECK(rsp_path_edge_count(back) == 2);
    rsp_path_free(back);
    rsp_path_free(p);
}

TEST_CASE("the solver returns optimum, witness, and stats") {
    rsp_instance* g = build_diamond();
    for (rsp_dominance mode : {RSP_DOMINANCE_FULL, RSP_DOMINANCE_SIMPLE, RSP_DOMINANCE_OFF}) {
        rsp_error* err = nullptr;
        rsp_solve_result* r = rsp_solve(g, mode, &err);
        REQUIRE(r != nullptr);
        CHECK(rsp_solve_result_reachable(r) == 1);
        CHECK(rsp_solve_result_optimal_length(r) == 3);
        const rsp_path* w = rsp_solve_result_witness(r);
        REQUIRE(w != nullptr);
        REQUIRE(rsp_path_edge_count(w) == 2);
        uint32_t id = 99;
        rsp_path_edge_at(w, 0, &id);
        CHECK(id == 0);
        CHECK(rsp_solve_result_states_expanded(r) > 0);
        rsp_solve_result_free(r);
    }
    rsp_error* err = nullptr;
    rsp_solve_result* b = rsp_solve_bruteforce(g, 1000, &err);
    REQUIRE(b != nullptr);
    CHECK(rsp_solve_result_optimal_length(b) == 3);
    rsp_solve_result_free(b);
    rsp_instance_free(g);
}

TEST_CASE("solving an invalid instance fails cleanly") {
    rsp_instance* g = rsp_instance_create(2, 0, 1);
    rsp_instance_add_edge(g, 0, 1, 1, 1);
    rsp_instance_add_edge(g, 1, 0, 1, 2);
    rsp_error* err = nullptr;
    rsp_solve_result* r = rsp_solve(g, RSP_DOMINANCE_FULL, &err);
    CHECK(r == nullptr);
    REQUIRE(err != nullptr);
    CHECK(rsp_error_code(err) == RSP_ERR_VALIDATION);
    rsp_error_free(err);
    rsp_instance_free(g);
}

TEST_CASE("decide answers both ways") {
    rsp_instance* g = build_diamond();
    int yes = -1;
    rsp_path* w = nullptr;
    rsp_error* err = nullptr;
    REQUIRE(rsp_decide(g, 3, RSP_DOMINANCE_FULL, &yes, &w, &err) == 0);
    CHECK(yes == 1);
    REQUIRE(w != nullptr);
    uint64_t length = 0;
    REQUIRE(rsp_reuse_length(g, w, &length, &err) == 0);
    CHECK(length <= 3);
    rsp_path_free(w);

    w = nullptr;
    REQUIRE(rsp_decide(g, 2, RSP_DOMINANCE_FULL, &yes, &w, &err) == 0);
    CHECK(yes == 0);
    CHECK(w == nullptr);
    rsp_instance_free(g);
}

TEST_CASE("cnf objects build, evaluate, and round trip") {
    const int32_t lits[] = {1, -2, 3, -1, 2, 3};
    rsp_error* err = nullptr;
    rsp_cnf* f = rsp_cnf_create(3, lits, 2, &err);
    REQUIRE(f != nullptr);
    CHECK(rsp_cnf_num_vars(f) == 3);
    CHECK(rsp_cnf_num_clauses(f) == 2);
    int32_t lit = 0;
    REQUIRE(rsp_cnf_literal(f, 1, 0, &lit) == 0);
    CHECK(lit == -1);
    CHECK(rsp_cnf_literal(f, 2, 0, &lit) != 0);

    const uint8_t good[] = {0, 0, 1};
    int satisfied = -1;
    int64_t first_bad = -2;
    REQUIRE(rsp_cnf_evaluate(f, good, &satisfied, &first_bad, &err) == 0);
    CHECK(satisfied == 1);
    CHECK(first_bad == -1);

    const uint8_t bad[] = {0, 1, 0};
    REQUIRE(rsp_cnf_evaluate(f, bad, &satisfied, &first_bad, &err) == 0);
    CHECK(satisfied == 0);
    CHECK(first_bad == 0);

    std::string text = take_string(rsp_cnf_serialize_dimacs(f));
    rsp_cnf* back = rsp_cnf_parse_dimacs(text.c_str(), text.size(), 0, &err);
    REQUIRE(back != nullptr);
    CHECK(take_string(rsp_cnf_serialize_dimacs(back)) == text);
    rsp_cnf_free(back);

    uint8_t model[3] = {9, 9, 9};
    int satisfiable = -1;
    REQUIRE(rsp_brute_force_sat(f, model, &satisfiable, &err) == 0);
    CHECK(satisfiable == 1);
    CHECK(model[0] == 0);
    rsp_cnf_free(f);
}

TEST_CASE("cnf creation rejects bad literals") {
    const int32_t lits[] = {1, 0, 2};
    rsp_error* err = nullptr;
    rsp_cnf* f = rsp_cnf_create(2, lits, 1, &err);
    CHECK(f == nullptr);
    REQUIRE(err != nullptr);
    CHECK(rsp_error_code(err) == RSP_ERR_INVALID_ARGUMENT);
    rsp_error_free(err);
}

TEST_CASE("the 3sat reduction works end to end over the C surface") {
    const int32_t lits[] = {1, -2, 3, -1, 2, 3};
    rsp_error* err = nullptr;
    rsp_cnf* f = rsp_cnf_create(3, lits, 2, &err);
    REQUIRE(f != nullptr);
    rsp_sat_reduction* red = rsp_reduce_3sat(f, &err);
    REQUIRE(red != nullptr);

    const rsp_instance* g = rsp_sat_reduction_instance(red);
    REQUIRE(g != nullptr);
    CHECK(rsp_instance_vertex_count(g) == 3 * 3 + 4 * 2 + 2);
    CHECK(rsp_instance_edge_count(g) == 4 * 3 + 6 * 2 + 1);
    const rsp_cnf* back = rsp_sat_reduction_formula(red);
    CHECK(rsp_cnf_num_vars(back) == 3);

    rsp_solve_result* r = rsp_solve(g, RSP_DOMINANCE_FULL, &err);
    REQUIRE(r != nullptr);
    CHECK(rsp_solve_result_optimal_length(r) == 3);

    uint8_t values[3] = {9, 9, 9};
    REQUIRE(rsp_extract_assignment(red, rsp_solve_result_witness(r), values, &err) == 0);
    int satisfied = 0;
    int64_t first_bad = -2;
    REQUIRE(rsp_cnf_evaluate(f, values, &satisfied, &first_bad, &err) == 0);
    CHECK(satisfied == 1);

    rsp_path* routed = nullptr;
    int64_t unsat_clause = -2;
    REQUIRE(rsp_assignment_to_path(red, values, &routed, &unsat_clause, &err) == 0);
    REQUIRE(routed != nullptr);
    CHECK(unsat_clause == -1);
    uint64_t length = 0;
    REQUIRE(rsp_reuse_length(g, routed, &length, &err) == 0);
    CHECK(length == 3);
    rsp_path_free(routed);

    std::string map_text = take_string(rsp_sat_reduction_serialize_map(red));
    rsp_sat_reduction* reparsed = rsp_sat_reduction_parse_map(map_text.c_str(),
                                                              map_text.size(), &err);
    REQUIRE(reparsed != nullptr);
    CHECK(take_string(rsp_sat_reduction_serialize_map(reparsed)) == map_text);
    rsp_sat_reduction_free(reparsed);

    rsp_solve_result_free(r);
    rsp_sat_reduction_free(red);
    rsp_cnf_free(f);
}

TEST_CASE("routing a falsifying assignment reports the clause") {
    const int32_t lits[] = {1, 1, 1};
    rsp_error* err = nullptr;
    rsp_cnf* f = rsp_cnf_create(1, lits, 1, &err);
    REQUIRE(f != nullptr);
    rsp_sat_reduction* red = rsp_reduce_3sat(f, &err);
    REQUIRE(red != nullptr);
    const uint8_t values[] = {0};
    rsp_path* routed = nullptr;
    int64_t unsat_clause = -2;
    REQUIRE(rsp_assignment_to_path(red, values, &routed, &unsat_clause, &err) == 0);
    CHECK(routed == nullptr);
    CHECK(unsat_clause == 0);
    rsp_sat_reduction_free(red);
    rsp_cnf_free(f);
}

TEST_CASE("min-color reduction flattens weights") {
    rsp_error* err = nullptr;
    rsp_instance* colored = rsp_instance_create(3, 0, 2);
    rsp_instance_add_edge(colored, 0, 1, 70, 4);
    rsp_instance_add_edge(colored, 1, 2, 90, 4);
    rsp_instance* g = rsp_reduce_mincolor(colored, &err);
    REQUIRE(g != nullptr);
    rsp_solve_result* r = rsp_solve(g, RSP_DOMINANCE_FULL, &err);
    REQUIRE(r != nullptr);
    CHECK(rsp_solve_result_optimal_length(r) == 1);
    rsp_solve_result_free(r);
    rsp_instance_free(g);
    rsp_instance_free(colored);
}

TEST_CASE("the partition pieces agree with the library behavior") {
    const uint64_t weights[] = {3, 5};
    rsp_error* err = nullptr;
    rsp_instance* g = rsp_reduce_partition(weights, 2, &err);
    REQUIRE(g != nullptr);
    CHECK(rsp_instance_vertex_count(g) == 8);
    CHECK(rsp_instance_edge_count(g) == 10);
    rsp_solve_result* r = rsp_solve(g, RSP_DOMINANCE_FULL, &err);
    REQUIRE(r != nullptr);
    CHECK(rsp_solve_result_optimal_length(r) == 8);
    rsp_solve_result_free(r);
    rsp_instance_free(g);

    uint32_t mask = 77;
    int feasible = -1;
    REQUIRE(rsp_brute_force_partition(weights, 2, &mask, &feasible, &err) == 0);
    CHECK(feasible == 0);

    const uint64_t even[] = {1, 1, 2};
    REQUIRE(rsp_brute_force_partition(even, 3, &mask, &feasible, &err) == 0);
    CHECK(feasible == 1);
    CHECK(mask == 0b011);
}

TEST_CASE("the flaw demo refutes over the C surface") {
    const uint64_t weights[] = {3, 5};
    rsp_error* err = nullptr;
    int refuted = -1;
    std::string text = take_string(rsp_demo_flaw(weights, 2, &refuted, &err));
    CHECK(refuted == 1);
    REQUIRE(text.size() > 0);
    auto last = text.find_last_not_of('\n');
    auto start = text.rfind('\n', last);
    CHECK(text.substr(start + 1, last - start) == "VERDICT REDUCTION REFUTED");

    const uint64_t balanced[] = {2, 2};
    refuted = -1;
    std::string ok = take_string(rsp_demo_flaw(balanced, 2, &refuted, &err));
    CHECK(refuted == 0);
    CHECK(ok.find("VERDICT NOT REFUTED BY THIS INPUT") != std::string::npos);
}

TEST_CASE("generators match across repeated calls") {
    rsp_instance* a = rsp_generate_instance(7, 12, 20, 6);
    rsp_instance* b = rsp_generate_instance(7, 12, 20, 6);
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    std::string sa = take_string(rsp_instance_serialize(a));
    std::string sb = take_string(rsp_instance_serialize(b));
    CHECK(sa == sb);
    CHECK(rsp_instance_validate(a) == nullptr);
    rsp_instance_free(a);
    rsp_instance_free(b);

    rsp_cnf* f = rsp_generate_cnf(7, 8, 12);
    REQUIRE(f != nullptr);
    CHECK(rsp_cnf_num_vars(f) >= 1);
    rsp_cnf_free(f);

    rsp_instance* c = rsp_generate_colored(7, 10, 4);
    REQUIRE(c != nullptr);
    CHECK(rsp_instance_validate(c) == nullptr);
    rsp_instance_free(c);
}

TEST_CASE("error objects survive NULL-tolerant calls") {
    // err == NULL must be accepted everywhere failure can happen.
    rsp_instance* g = rsp_instance_parse("garbage", 7, nullptr);
    CHECK(g == nullptr);

    const char text[] = "p reuse 1 0 0 0\n";
    g = rsp_instance_parse(text, sizeof text - 1, nullptr);
    REQUIRE(g != nullptr);
    rsp_solve_result* r = rsp_solve(g, RSP_DOMINANCE_FULL, nullptr);
    REQUIRE(r != nullptr);
    CHECK(rsp_solve_result_reachable(r) == 1);
    CHECK(rsp_solve_result_optimal_length(r) == 0);
    const rsp_path* w = rsp_solve_result_witness(r);
    REQUIRE(w != nullptr);
    CHECK(rsp_path_edge_count(w) == 0);
    rsp_solve_result_free(r);
    rsp_instance_free(g);
}
