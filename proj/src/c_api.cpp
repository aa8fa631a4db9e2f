// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/arb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arb/cut.hpp"
#include "arb/error.hpp"
#include "arb/network.hpp"
#include "arb/packing.hpp"
#include "arb/rate_lp.hpp"
#include "arb/schemes.hpp"
#include "arb/simulator.hpp"

struct arb_network {
    arb::Network value;
    std::string text;
};

struct arb_cut {
    arb::Cut value;
    std::string text;
};

struct arb_packing {
    arb::Packing value;
    std::string text;
    std::string rate;
};

struct arb_lp_solution {
    arb::LpSolution value;
    std::string text;
};

struct arb_report {
    arb::BoundsReport value;
    std::string lower;
    std::string upper;
    std::string gap;
    std::string cap;
};

struct arb_simulation {
    arb::PackingRun value;
    std::string scale;
    std::string throughput;
    std::string per_scaled_use;
    std::string transcript;
};

namespace {

thread_local std::string last_error;

arb_status to_status(arb::ErrorCode code) {
    using arb::ErrorCode;
    switch (code) {
        case ErrorCode::kInvalidArgument: return ARB_ERR_INVALID_ARGUMENT;
        case ErrorCode::kParse: return ARB_ERR_PARSE;
        case ErrorCode::kIo: return ARB_ERR_IO;
        case ErrorCode::kTooLarge: return ARB_ERR_TOO_LARGE;
        case ErrorCode::kInfeasible: return ARB_ERR_INFEASIBLE;
        case ErrorCode::kNotConverged: return ARB_ERR_NOT_CONVERGED;
        case ErrorCode::kCapacityViolation: return ARB_ERR_CAPACITY;
        case ErrorCode::kCausalityViolation: return ARB_ERR_CAUSALITY;
        case ErrorCode::kDecodeFailure: return ARB_ERR_DECODE;
        case ErrorCode::kVerificationFailure: return ARB_ERR_VERIFICATION;
        case ErrorCode::kInternal: return ARB_ERR_INTERNAL;
    }
    return ARB_ERR_INTERNAL;
}

template <typename Body>
arb_status guarded(Body&& body) {
    try {
        body();
        last_error.clear();
        return ARB_OK;
    } catch (const arb::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return ARB_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return ARB_ERR_INTERNAL;
    }
}

void need(const void* pointer, const char* what) {
    if (!pointer) arb::fail(arb::ErrorCode::kInvalidArgument, std::string(what) + " must not be null");
}

char* duplicate(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

arb_network* wrap(arb::Network network) {
    std::string text = arb::serialize(network);
    return new arb_network{std::move(network), std::move(text)};
}

arb_packing* wrap(arb::Packing packing) {
    std::string text = arb::serialize(packing);
    std::string rate = arb::to_string(packing.rate());
    return new arb_packing{std::move(packing), std::move(text), std::move(rate)};
}

template <typename Make>
arb_status make_network(arb_network** out, Make&& make) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(make());
    });
}

template <typename Make>
arb_status make_packing(arb_packing** out, Make&& make) {
    return guarded([&] {
        need(out, "out");
        *out = nullptr;
        *out = wrap(make());
    });
}

}  // namespace

extern "C" {

const char* arb_version(void) { return "1.0.0"; }
const char* arb_last_error(void) { return last_error.c_str(); }

const char* arb_status_name(arb_status status) {
    switch (status) {
        case ARB_OK: return "ok";
        case ARB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case ARB_ERR_PARSE: return "parse error";
        case ARB_ERR_IO: return "i/o error";
        case ARB_ERR_TOO_LARGE: return "too large";
        case ARB_ERR_INFEASIBLE: return "infeasible";
        case ARB_ERR_NOT_CONVERGED: return "not converged";
        case ARB_ERR_CAPACITY: return "capacity violation";
        case ARB_ERR_CAUSALITY: return "causality violation";
        case ARB_ERR_DECODE: return "decode failure";
        case ARB_ERR_VERIFICATION: return "verification failure";
        case ARB_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

void arb_string_free(char* text) { std::free(text); }

arb_status arb_network_from_links(int node_count, const arb_link* links, size_t link_count,
                                  arb_network** out) {
    return make_network(out, [&] {
        if (link_count > 0) need(links, "links");
        std::vector<arb::Link> converted;
        converted.reserve(link_count);
        for (size_t i = 0; i < link_count; ++i) {
            converted.push_back({links[i].from, links[i].to, arb::Integer(static_cast<long>(links[i].bandwidth))});
        }
        return arb::Network::from_links(node_count, converted);
    });
}

arb_status arb_network_parse(const char* text, arb_network** out) {
    return make_network(out, [&] {
        need(text, "text");
        return arb::parse_network(text);
    });
}

arb_status arb_network_load(const char* path, arb_network** out) {
    return make_network(out, [&] {
        need(path, "path");
        return arb::load_network(path);
    });
}

arb_status arb_network_save(const arb_network* network, const char* path) {
    return guarded([&] {
        need(network, "network");
        need(path, "path");
        arb::save_network(network->value, path);
    });
}

const char* arb_network_text(const arb_network* network) { return network ? network->text.c_str() : ""; }
int arb_network_node_count(const arb_network* network) { return network ? network->value.node_count() : 0; }

arb_status arb_network_bandwidth(const arb_network* network, int from, int to, char** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        const int k = network->value.node_count();
        arb::require(from >= 0 && from < k && to >= 0 && to < k, "node id out of range");
        *out = duplicate(network->value.bandwidth(from, to).get_str());
    });
}

int arb_network_equal(const arb_network* a, const arb_network* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

void arb_network_destroy(arb_network* network) { delete network; }

arb_status arb_gen_complete(int node_count, arb_network** out) {
    return make_network(out, [&] { return arb::gen_complete(node_count); });
}
arb_status arb_gen_cycle(int node_count, arb_network** out) {
    return make_network(out, [&] { return arb::gen_cycle(node_count); });
}
arb_status arb_gen_ring(int node_count, arb_network** out) {
    return make_network(out, [&] { return arb::gen_ring(node_count); });
}
arb_status arb_gen_three_cycle(int64_t a, int64_t b, int64_t c, arb_network** out) {
    return make_network(out, [&] {
        return arb::gen_three_cycle(arb::Integer(static_cast<long>(a)), arb::Integer(static_cast<long>(b)),
                                    arb::Integer(static_cast<long>(c)));
    });
}
arb_status arb_gen_hypercube(int dimension, arb_network** out) {
    return make_network(out, [&] { return arb::gen_hypercube(dimension); });
}
arb_status arb_gen_bidirected_tree(int node_count, const int* parent, const int64_t* bandwidth,
                                   arb_network** out) {
    return make_network(out, [&] {
        need(parent, "parent");
        need(bandwidth, "bandwidth");
        arb::require(node_count >= 2, "tree needs at least 2 nodes");
        std::vector<arb::NodeId> parents(parent, parent + node_count);
        std::vector<arb::Integer> bw;
        for (int v = 0; v < node_count; ++v) {
            bw.emplace_back(parent[v] == -1 ? 1L : static_cast<long>(bandwidth[v]));
        }
        return arb::gen_bidirected_tree(parents, bw);
    });
}

arb_status arb_cutset_bound(const arb_network* network, arb_cut_method method, arb_cut** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        *out = nullptr;
        arb::Cut cut;
        switch (method) {
            case ARB_CUT_BRUTE_FORCE: cut = arb::cutset_bound_bruteforce(network->value); break;
            case ARB_CUT_MAX_FLOW: cut = arb::cutset_bound_maxflow(network->value); break;
            case ARB_CUT_AUTO: cut = arb::cutset_bound(network->value); break;
            default: arb::fail(arb::ErrorCode::kInvalidArgument, "unknown cut method");
        }
        std::string text = cut.value.get_str();
        *out = new arb_cut{std::move(cut), std::move(text)};
    });
}

const char* arb_cut_value(const arb_cut* cut) { return cut ? cut->text.c_str() : ""; }
size_t arb_cut_size(const arb_cut* cut) { return cut ? cut->value.subset.size() : 0; }
int arb_cut_node(const arb_cut* cut, size_t index) {
    return cut && index < cut->value.subset.size() ? cut->value.subset[index] : -1;
}
void arb_cut_destroy(arb_cut* cut) { delete cut; }

arb_status arb_max_flow(const arb_network* network, int source, int sink, char** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        *out = duplicate(arb::max_flow(network->value, source, sink).value.get_str());
    });
}

arb_status arb_pack_complete(int node_count, arb_packing** out) {
    return make_packing(out, [&] { return arb::pack_complete(node_count); });
}
arb_status arb_pack_cycle(int node_count, arb_packing** out) {
    return make_packing(out, [&] { return arb::pack_cycle(node_count); });
}
arb_status arb_pack_ring(int node_count, arb_packing** out) {
    return make_packing(out, [&] { return arb::pack_ring(node_count); });
}
arb_status arb_pack_three_cycle(int64_t a, int64_t b, int64_t c, arb_packing** out) {
    return make_packing(out, [&] {
        return arb::pack_three_cycle(arb::Rational(static_cast<long>(a)), arb::Rational(static_cast<long>(b)),
                                     arb::Rational(static_cast<long>(c)));
    });
}
arb_status arb_pack_hypercube(int dimension, arb_packing** out) {
    return make_packing(out, [&] { return arb::pack_hypercube(dimension); });
}
arb_status arb_packing_parse(const char* text, arb_packing** out) {
    return make_packing(out, [&] {
        need(text, "text");
        return arb::parse_packing(text);
    });
}
arb_status arb_packing_load(const char* path, arb_packing** out) {
    return make_packing(out, [&] {
        need(path, "path");
        return arb::load_packing(path);
    });
}

const char* arb_packing_text(const arb_packing* packing) { return packing ? packing->text.c_str() : ""; }
const char* arb_packing_rate(const arb_packing* packing) { return packing ? packing->rate.c_str() : ""; }
size_t arb_packing_column_count(const arb_packing* packing) {
    return packing ? packing->value.columns.size() : 0;
}

arb_status arb_packing_check(const arb_network* network, const arb_packing* packing, int* feasible,
                             int* cap_tight) {
    return guarded([&] {
        need(network, "network");
        need(packing, "packing");
        for (const auto& column : packing->value.columns) {
            arb::require(column.node_count() == network->value.node_count(),
                         "packing and network differ in node count");
        }
        const bool ok = arb::is_feasible(network->value, packing->value);
        if (feasible) *feasible = ok ? 1 : 0;
        if (cap_tight) *cap_tight = packing->value.rate() == arb::corollary_cap(network->value) ? 1 : 0;
    });
}

void arb_packing_destroy(arb_packing* packing) { delete packing; }

arb_status arb_corollary_cap(const arb_network* network, char** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        *out = duplicate(arb::to_string(arb::corollary_cap(network->value)));
    });
}

arb_status arb_hypercube_edge_count(int dimension, int from, int to, int64_t* out) {
    return guarded([&] {
        need(out, "out");
        *out = arb::hypercube_edge_count(dimension, {from, to}).get_si();
    });
}

arb_status arb_lp_solve(const arb_network* network, arb_lp_method method, int force,
                        arb_lp_solution** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        *out = nullptr;
        arb::LpSolution solution;
        if (method == ARB_LP_EXHAUSTIVE) {
            arb::ExhaustiveOptions options;
            options.force = force != 0;
            solution = arb::lp_exhaustive(network->value, options);
        } else if (method == ARB_LP_COLGEN) {
            solution = arb::lp_colgen(network->value);
        } else {
            arb::fail(arb::ErrorCode::kInvalidArgument, "unknown LP method");
        }
        std::string text = arb::to_string(solution.value);
        *out = new arb_lp_solution{std::move(solution), std::move(text)};
    });
}

const char* arb_lp_value(const arb_lp_solution* solution) { return solution ? solution->text.c_str() : ""; }
size_t arb_lp_columns_considered(const arb_lp_solution* solution) {
    return solution ? solution->value.columns_considered : 0;
}
size_t arb_lp_pivots(const arb_lp_solution* solution) { return solution ? solution->value.pivots : 0; }

arb_status arb_lp_packing(const arb_lp_solution* solution, arb_packing** out) {
    return make_packing(out, [&] {
        need(solution, "solution");
        return solution->value.packing;
    });
}

void arb_lp_destroy(arb_lp_solution* solution) { delete solution; }

arb_status arb_report_create(const arb_network* network, arb_lp_method method, arb_report** out) {
    return guarded([&] {
        need(network, "network");
        need(out, "out");
        *out = nullptr;
        auto source = method == ARB_LP_EXHAUSTIVE ? arb::LowerBoundSource::kLpExhaustive
                                                  : arb::LowerBoundSource::kLpColgen;
        arb::BoundsReport report = arb::bounds_report(network->value, source);
        auto* handle = new arb_report{std::move(report), {}, {}, {}, {}};
        handle->lower = arb::to_string(handle->value.lower);
        handle->upper = handle->value.upper.get_str();
        handle->gap = handle->value.gap_ratio ? arb::to_string(*handle->value.gap_ratio) : "";
        handle->cap = arb::to_string(handle->value.cap);
        *out = handle;
    });
}

const char* arb_report_lower(const arb_report* report) { return report ? report->lower.c_str() : ""; }
const char* arb_report_lower_source(const arb_report* report) {
    return report ? arb::to_string(report->value.lower_source) : "";
}
const char* arb_report_upper(const arb_report* report) { return report ? report->upper.c_str() : ""; }
const char* arb_report_gap(const arb_report* report) { return report ? report->gap.c_str() : ""; }
const char* arb_report_cap(const arb_report* report) { return report ? report->cap.c_str() : ""; }
size_t arb_report_cut_size(const arb_report* report) { return report ? report->value.cut.subset.size() : 0; }
int arb_report_cut_node(const arb_report* report, size_t index) {
    return report && index < report->value.cut.subset.size() ? report->value.cut.subset[index] : -1;
}
size_t arb_report_columns(const arb_report* report) {
    return report ? report->value.lp.columns_considered : 0;
}
double arb_report_lower_double(const arb_report* report) {
    return report ? arb::to_double(report->value.lower) : 0.0;
}
double arb_report_gap_double(const arb_report* report) {
    return report && report->value.gap_ratio ? arb::to_double(*report->value.gap_ratio) : 0.0;
}
void arb_report_destroy(arb_report* report) { delete report; }

arb_status arb_simulate(const arb_network* network, const arb_packing* packing, uint64_t instances,
                        uint64_t q, uint64_t seed, uint64_t scale, arb_simulation** out) {
    return guarded([&] {
        need(network, "network");
        need(packing, "packing");
        need(out, "out");
        *out = nullptr;
        const arb::PrimeField field(q);
        auto run = arb::execute_packing(network->value, packing->value, instances, field, seed,
                                        arb::Integer(static_cast<unsigned long>(scale)));
        auto* handle = new arb_simulation{std::move(run), {}, {}, {}, {}};
        handle->scale = handle->value.scale.get_str();
        handle->throughput = arb::to_string(handle->value.throughput);
        handle->per_scaled_use = arb::to_string(handle->value.per_scaled_use);
        handle->transcript = arb::dump(handle->value.schedule);
        *out = handle;
    });
}

uint64_t arb_simulation_instances(const arb_simulation* sim) { return sim ? sim->value.instances : 0; }
uint64_t arb_simulation_rounds(const arb_simulation* sim) { return sim ? sim->value.rounds : 0; }
uint64_t arb_simulation_streams(const arb_simulation* sim) { return sim ? sim->value.streams : 0; }
const char* arb_simulation_scale(const arb_simulation* sim) { return sim ? sim->scale.c_str() : ""; }
const char* arb_simulation_throughput(const arb_simulation* sim) { return sim ? sim->throughput.c_str() : ""; }
const char* arb_simulation_per_scaled_use(const arb_simulation* sim) {
    return sim ? sim->per_scaled_use.c_str() : "";
}
const char* arb_simulation_transcript(const arb_simulation* sim) { return sim ? sim->transcript.c_str() : ""; }
void arb_simulation_destroy(arb_simulation* sim) { delete sim; }

}  // extern "C"
