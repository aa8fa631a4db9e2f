// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include "arb/arb.h"
#include "doctest.h"

namespace {

std::string take(char* text) {
    std::string out(text);
    arb_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("status names and versions") {
    CHECK(std::string(arb_version()) == "1.0.0");
    CHECK(std::string(arb_status_name(ARB_OK)) == "ok");
    CHECK(std::string(arb_status_name(ARB_ERR_DECODE)) == "decode failure");
}

TEST_CASE("networks through the C API") {
    const arb_link links[] = {{0, 1, 2}, {1, 2, 3}, {2, 0, 4}};
    arb_network* n = nullptr;
    REQUIRE(arb_network_from_links(3, links, 3, &n) == ARB_OK);
    CHECK(arb_network_node_count(n) == 3);
    char* b = nullptr;
    REQUIRE(arb_network_bandwidth(n, 1, 2, &b) == ARB_OK);
    CHECK(take(b) == "3");
    CHECK(std::string(arb_network_text(n)) == "K 3\n0 1 2\n1 2 3\n2 0 4\n");

    arb_network* generated = nullptr;
    REQUIRE(arb_gen_three_cycle(2, 3, 4, &generated) == ARB_OK);
    CHECK(arb_network_equal(n, generated) == 1);

    arb_network* parsed = nullptr;
    REQUIRE(arb_network_parse(arb_network_text(n), &parsed) == ARB_OK);
    CHECK(arb_network_equal(n, parsed) == 1);

    arb_network_destroy(parsed);
    arb_network_destroy(generated);
    arb_network_destroy(n);
}

TEST_CASE("errors map to status codes") {
    const arb_link loop[] = {{0, 0, 1}};
    arb_network* n = reinterpret_cast<arb_network*>(0x1);
    CHECK(arb_network_from_links(3, loop, 1, &n) == ARB_ERR_INVALID_ARGUMENT);
    CHECK(n == nullptr);
    CHECK(std::string(arb_last_error()).find("self-loop") != std::string::npos);
    CHECK(arb_network_parse("K 3\n0 1\n", &n) == ARB_ERR_PARSE);
    CHECK(arb_network_load("/nonexistent/file.net", &n) == ARB_ERR_IO);
    CHECK(arb_gen_cycle(2, &n) == ARB_ERR_INVALID_ARGUMENT);
    CHECK(arb_network_parse(nullptr, &n) == ARB_ERR_INVALID_ARGUMENT);

    REQUIRE(arb_gen_complete(3, &n) == ARB_OK);
    CHECK(std::string(arb_last_error()).empty());
    char* flow = nullptr;
    CHECK(arb_max_flow(n, 1, 1, &flow) == ARB_ERR_INVALID_ARGUMENT);
    arb_network_destroy(n);

    arb_network* big = nullptr;
    REQUIRE(arb_gen_cycle(6, &big) == ARB_OK);
    arb_lp_solution* lp = nullptr;
    CHECK(arb_lp_solve(big, ARB_LP_EXHAUSTIVE, 0, &lp) == ARB_ERR_TOO_LARGE);
    REQUIRE(arb_lp_solve(big, ARB_LP_EXHAUSTIVE, 1, &lp) == ARB_OK);
    CHECK(std::string(arb_lp_value(lp)) == "3/5");
    arb_lp_destroy(lp);
    arb_network_destroy(big);
}

TEST_CASE("cuts") {
    arb_network* n = nullptr;
    REQUIRE(arb_gen_complete(5, &n) == ARB_OK);
    for (arb_cut_method m : {ARB_CUT_AUTO, ARB_CUT_BRUTE_FORCE, ARB_CUT_MAX_FLOW}) {
        arb_cut* cut = nullptr;
        REQUIRE(arb_cutset_bound(n, m, &cut) == ARB_OK);
        CHECK(std::string(arb_cut_value(cut)) == "4");
        CHECK(arb_cut_size(cut) >= 1);
        arb_cut_destroy(cut);
    }
    char* flow = nullptr;
    REQUIRE(arb_max_flow(n, 0, 3, &flow) == ARB_OK);
    CHECK(take(flow) == "4");
    char* cap = nullptr;
    REQUIRE(arb_corollary_cap(n, &cap) == ARB_OK);
    CHECK(take(cap) == "5/2");
    arb_network_destroy(n);
}

TEST_CASE("packings, LP and report") {
    arb_network* cube = nullptr;
    REQUIRE(arb_gen_hypercube(2, &cube) == ARB_OK);
    arb_packing* packing = nullptr;
    REQUIRE(arb_pack_hypercube(2, &packing) == ARB_OK);
    CHECK(std::string(arb_packing_rate(packing)) == "4/3");
    CHECK(arb_packing_column_count(packing) == 8);
    int feasible = 0;
    int tight = 0;
    REQUIRE(arb_packing_check(cube, packing, &feasible, &tight) == ARB_OK);
    CHECK(feasible == 1);
    CHECK(tight == 1);

    arb_packing* copy = nullptr;
    REQUIRE(arb_packing_parse(arb_packing_text(packing), &copy) == ARB_OK);
    CHECK(std::string(arb_packing_text(copy)) == arb_packing_text(packing));

    arb_lp_solution* lp = nullptr;
    REQUIRE(arb_lp_solve(cube, ARB_LP_COLGEN, 0, &lp) == ARB_OK);
    CHECK(std::string(arb_lp_value(lp)) == "4/3");
    arb_packing* optimal = nullptr;
    REQUIRE(arb_lp_packing(lp, &optimal) == ARB_OK);
    CHECK(std::string(arb_packing_rate(optimal)) == "4/3");

    arb_report* report = nullptr;
    REQUIRE(arb_report_create(cube, ARB_LP_EXHAUSTIVE, &report) == ARB_OK);
    CHECK(std::string(arb_report_lower(report)) == "4/3");
    CHECK(std::string(arb_report_upper(report)) == "2");
    CHECK(std::string(arb_report_gap(report)) == "3/2");
    CHECK(std::string(arb_report_lower_source(report)) == "lp-exhaustive");
    CHECK(arb_report_gap_double(report) == doctest::Approx(1.5));
    CHECK(arb_report_cut_node(report, 0) == 0);

    int64_t count = 0;
    REQUIRE(arb_hypercube_edge_count(3, 0, 1, &count) == ARB_OK);
    CHECK(count == 28);

    arb_report_destroy(report);
    arb_packing_destroy(optimal);
    arb_lp_destroy(lp);
    arb_packing_destroy(copy);
    arb_packing_destroy(packing);
    arb_network_destroy(cube);
}

TEST_CASE("simulation") {
    arb_network* n = nullptr;
    REQUIRE(arb_gen_complete(3, &n) == ARB_OK);
    arb_packing* p = nullptr;
    REQUIRE(arb_pack_complete(3, &p) == ARB_OK);
    arb_simulation* sim = nullptr;
    REQUIRE(arb_simulate(n, p, 100, 257, 1, 0, &sim) == ARB_OK);
    CHECK(std::string(arb_simulation_per_scaled_use(sim)) == "300/103");
    CHECK(std::string(arb_simulation_throughput(sim)) == "150/103");
    CHECK(std::string(arb_simulation_scale(sim)) == "2");
    CHECK(arb_simulation_rounds(sim) == 103);
    CHECK(arb_simulation_instances(sim) == 300);
    CHECK(std::string(arb_simulation_transcript(sim)).find("decoded=ok") != std::string::npos);
    arb_simulation_destroy(sim);

    arb_simulation* bad = nullptr;
    CHECK(arb_simulate(n, p, 10, 4, 1, 0, &bad) == ARB_ERR_INVALID_ARGUMENT);

    arb_network* cycle = nullptr;
    REQUIRE(arb_gen_cycle(3, &cycle) == ARB_OK);
    CHECK(arb_simulate(cycle, p, 10, 257, 1, 0, &bad) == ARB_ERR_CAPACITY);
    arb_network_destroy(cycle);
    arb_packing_destroy(p);
    arb_network_destroy(n);
}
