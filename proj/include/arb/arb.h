/*
 * Copyright 2026 The arbound Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface to the All-Reduce rate bounds library.
 *
 * Every object is an opaque handle released with its matching *_destroy
 * function. Functions return an arb_status; on failure a message for the
 * calling thread is available from arb_last_error(). Strings returned by
 * getters are owned by the handle and stay valid until it is destroyed.
 * Rates and bandwidths are exact and travel as decimal text ("12/7", "3").
 */

#ifndef ARB_ARB_H
#define ARB_ARB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARB_BUILDING_LIBRARY)
#    define ARB_API __declspec(dllexport)
#  else
#    define ARB_API __declspec(dllimport)
#  endif
#else
#  define ARB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arb_status {
    ARB_OK = 0,
    ARB_ERR_INVALID_ARGUMENT = 1,
    ARB_ERR_PARSE = 2,
    ARB_ERR_IO = 3,
    ARB_ERR_TOO_LARGE = 4,
    ARB_ERR_INFEASIBLE = 5,
    ARB_ERR_NOT_CONVERGED = 6,
    ARB_ERR_CAPACITY = 7,
    ARB_ERR_CAUSALITY = 8,
    ARB_ERR_DECODE = 9,
    ARB_ERR_VERIFICATION = 10,
    ARB_ERR_INTERNAL = 11
} arb_status;

typedef struct arb_network arb_network;
typedef struct arb_cut arb_cut;
typedef struct arb_packing arb_packing;
typedef struct arb_lp_solution arb_lp_solution;
typedef struct arb_report arb_report;
typedef struct arb_simulation arb_simulation;

ARB_API const char* arb_version(void);
/* Message for the last failed call on this thread ("" if none). */
ARB_API const char* arb_last_error(void);
ARB_API const char* arb_status_name(arb_status status);

/* ---- networks ---------------------------------------------------------- */

typedef struct arb_link {
    int from;
    int to;
    int64_t bandwidth;
} arb_link;

ARB_API arb_status arb_network_from_links(int node_count, const arb_link* links, size_t link_count,
                                          arb_network** out);
ARB_API arb_status arb_network_parse(const char* text, arb_network** out);
ARB_API arb_status arb_network_load(const char* path, arb_network** out);
ARB_API arb_status arb_network_save(const arb_network* network, const char* path);
/* Text form; owned by the network handle. */
ARB_API const char* arb_network_text(const arb_network* network);
ARB_API int arb_network_node_count(const arb_network* network);
/* Decimal bandwidth of from -> to; release with arb_string_free. */
ARB_API arb_status arb_network_bandwidth(const arb_network* network, int from, int to, char** out);
ARB_API int arb_network_equal(const arb_network* a, const arb_network* b);
ARB_API void arb_network_destroy(arb_network* network);

ARB_API arb_status arb_gen_complete(int node_count, arb_network** out);
ARB_API arb_status arb_gen_cycle(int node_count, arb_network** out);
ARB_API arb_status arb_gen_ring(int node_count, arb_network** out);
ARB_API arb_status arb_gen_three_cycle(int64_t a, int64_t b, int64_t c, arb_network** out);
ARB_API arb_status arb_gen_hypercube(int dimension, arb_network** out);
/* parent[v] is v's tree neighbour, -1 for the single root; bandwidth[v]
 * applies to both directions of edge v -- parent[v]. */
ARB_API arb_status arb_gen_bidirected_tree(int node_count, const int* parent, const int64_t* bandwidth,
                                           arb_network** out);

/* ---- cut-set upper bound ----------------------------------------------- */

typedef enum arb_cut_method {
    ARB_CUT_AUTO = 0,
    ARB_CUT_BRUTE_FORCE = 1,
    ARB_CUT_MAX_FLOW = 2
} arb_cut_method;

ARB_API arb_status arb_cutset_bound(const arb_network* network, arb_cut_method method, arb_cut** out);
ARB_API const char* arb_cut_value(const arb_cut* cut);
ARB_API size_t arb_cut_size(const arb_cut* cut);
ARB_API int arb_cut_node(const arb_cut* cut, size_t index);
ARB_API void arb_cut_destroy(arb_cut* cut);
/* Maximum source -> sink flow as decimal text; release with arb_string_free. */
ARB_API arb_status arb_max_flow(const arb_network* network, int source, int sink, char** out);
ARB_API void arb_string_free(char* text);

/* ---- packings ---------------------------------------------------------- */

ARB_API arb_status arb_pack_complete(int node_count, arb_packing** out);
ARB_API arb_status arb_pack_cycle(int node_count, arb_packing** out);
ARB_API arb_status arb_pack_ring(int node_count, arb_packing** out);
ARB_API arb_status arb_pack_three_cycle(int64_t a, int64_t b, int64_t c, arb_packing** out);
ARB_API arb_status arb_pack_hypercube(int dimension, arb_packing** out);
ARB_API arb_status arb_packing_parse(const char* text, arb_packing** out);
ARB_API arb_status arb_packing_load(const char* path, arb_packing** out);
ARB_API const char* arb_packing_text(const arb_packing* packing);
ARB_API const char* arb_packing_rate(const arb_packing* packing);
ARB_API size_t arb_packing_column_count(const arb_packing* packing);
/* *feasible: load <= bandwidth on every link; *cap_tight: rate equals the
 * total-bandwidth cap of the network. */
ARB_API arb_status arb_packing_check(const arb_network* network, const arb_packing* packing,
                                     int* feasible, int* cap_tight);
ARB_API void arb_packing_destroy(arb_packing* packing);
/* Total bandwidth / (2(K - 1)) as decimal text; release with arb_string_free. */
ARB_API arb_status arb_corollary_cap(const arb_network* network, char** out);
ARB_API arb_status arb_hypercube_edge_count(int dimension, int from, int to, int64_t* out);

/* ---- LP lower bound ---------------------------------------------------- */

typedef enum arb_lp_method {
    ARB_LP_COLGEN = 0,
    ARB_LP_EXHAUSTIVE = 1
} arb_lp_method;

/* force lifts the K <= 5 limit of the exhaustive method. */
ARB_API arb_status arb_lp_solve(const arb_network* network, arb_lp_method method, int force,
                                arb_lp_solution** out);
ARB_API const char* arb_lp_value(const arb_lp_solution* solution);
ARB_API size_t arb_lp_columns_considered(const arb_lp_solution* solution);
ARB_API size_t arb_lp_pivots(const arb_lp_solution* solution);
/* Copy of the optimal packing; caller owns it. */
ARB_API arb_status arb_lp_packing(const arb_lp_solution* solution, arb_packing** out);
ARB_API void arb_lp_destroy(arb_lp_solution* solution);

/* ---- combined report --------------------------------------------------- */

ARB_API arb_status arb_report_create(const arb_network* network, arb_lp_method method,
                                     arb_report** out);
ARB_API const char* arb_report_lower(const arb_report* report);
/* "closed-form", "lp-exhaustive" or "lp-colgen". */
ARB_API const char* arb_report_lower_source(const arb_report* report);
ARB_API const char* arb_report_upper(const arb_report* report);
/* upper / lower, or "" when both bounds are zero. */
ARB_API const char* arb_report_gap(const arb_report* report);
ARB_API const char* arb_report_cap(const arb_report* report);
ARB_API size_t arb_report_cut_size(const arb_report* report);
ARB_API int arb_report_cut_node(const arb_report* report, size_t index);
ARB_API size_t arb_report_columns(const arb_report* report);
/* Decimal approximations for human-readable tables. */
ARB_API double arb_report_lower_double(const arb_report* report);
ARB_API double arb_report_gap_double(const arb_report* report);
ARB_API void arb_report_destroy(arb_report* report);

/* ---- protocol simulation ----------------------------------------------- */

/* Runs every column of the packing as scale * weight concurrent streams of
 * `instances` sum instances over GF(q) with SplitMix64 inputs from `seed`.
 * scale == 0 picks the LCM of the weight denominators. Capacity, causality
 * and decode failures return ARB_ERR_CAPACITY / _CAUSALITY / _DECODE. */
ARB_API arb_status arb_simulate(const arb_network* network, const arb_packing* packing,
                                uint64_t instances, uint64_t q, uint64_t seed, uint64_t scale,
                                arb_simulation** out);
ARB_API uint64_t arb_simulation_instances(const arb_simulation* sim);
ARB_API uint64_t arb_simulation_rounds(const arb_simulation* sim);
ARB_API uint64_t arb_simulation_streams(const arb_simulation* sim);
ARB_API const char* arb_simulation_scale(const arb_simulation* sim);
/* Instances per use of the original network. */
ARB_API const char* arb_simulation_throughput(const arb_simulation* sim);
/* Instances per round of the scale-multiplied network. */
ARB_API const char* arb_simulation_per_scaled_use(const arb_simulation* sim);
/* Transmission dump plus summary line. */
ARB_API const char* arb_simulation_transcript(const arb_simulation* sim);
ARB_API void arb_simulation_destroy(arb_simulation* sim);

#ifdef __cplusplus
}
#endif

#endif /* ARB_ARB_H */
