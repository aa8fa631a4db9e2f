// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

// arbound: command-line front end over the arb C API.
//
// Exit codes: 0 ok, 1 usage, 2 I/O or parse error, 3 verification failure,
// 4 internal invariant breach.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arb/arb.h"
#include "json.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kVerification = 3, kInternal = 4 };

int exit_code(arb_status status) {
    switch (status) {
        case ARB_OK: return kOk;
        case ARB_ERR_INVALID_ARGUMENT:
        case ARB_ERR_TOO_LARGE: return kUsage;
        case ARB_ERR_PARSE:
        case ARB_ERR_IO: return kIo;
        case ARB_ERR_CAPACITY:
        case ARB_ERR_CAUSALITY:
        case ARB_ERR_DECODE:
        case ARB_ERR_VERIFICATION: return kVerification;
        default: return kInternal;
    }
}

// Carries a failed C API call up to main.
struct Failure {
    int code;
};

void check(arb_status status) {
    if (status == ARB_OK) return;
    std::cerr << "arbound: " << arb_status_name(status) << ": " << arb_last_error() << '\n';
    throw Failure{exit_code(status)};
}

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "arbound: " << message << '\n';
    throw Failure{code};
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};
using Network = std::unique_ptr<arb_network, Deleter<arb_network, arb_network_destroy>>;
using Cut = std::unique_ptr<arb_cut, Deleter<arb_cut, arb_cut_destroy>>;
using PackingHandle = std::unique_ptr<arb_packing, Deleter<arb_packing, arb_packing_destroy>>;
using Lp = std::unique_ptr<arb_lp_solution, Deleter<arb_lp_solution, arb_lp_destroy>>;
using Report = std::unique_ptr<arb_report, Deleter<arb_report, arb_report_destroy>>;
using Simulation = std::unique_ptr<arb_simulation, Deleter<arb_simulation, arb_simulation_destroy>>;

std::string take(char* text) {
    std::string out(text);
    arb_string_free(text);
    return out;
}

Network load(const std::string& path) {
    arb_network* n = nullptr;
    check(arb_network_load(path.c_str(), &n));
    return Network(n);
}

std::string subset_text(size_t size, auto&& node) {
    std::string out = "{";
    for (size_t i = 0; i < size; ++i) {
        if (i) out += ',';
        out += std::to_string(node(i));
    }
    return out + "}";
}

std::vector<long long> parse_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(kUsage, std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) fail(kIo, "cannot open '" + path + "' for writing");
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) fail(kIo, "cannot write '" + path + "'");
}

struct TopologyArgs {
    std::string name;
    int k = 0;
    int dim = 0;
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    std::string parents;
    std::string bandwidths;
    std::string out;
};

void add_topology_options(CLI::App* cmd, TopologyArgs& args, bool with_tree) {
    cmd->add_option("topology", args.name, "complete|cycle|ring|cyc3|hypercube" + std::string(with_tree ? "|tree" : ""))
        ->required();
    cmd->add_option("--k", args.k, "node count");
    cmd->add_option("--dim", args.dim, "hypercube dimension");
    cmd->add_option("--a", args.a, "3-cycle bandwidth of 0->1");
    cmd->add_option("--b", args.b, "3-cycle bandwidth of 1->2");
    cmd->add_option("--c", args.c, "3-cycle bandwidth of 2->0");
    if (with_tree) {
        cmd->add_option("--parents", args.parents, "tree parent list, root marked -1 (e.g. --parents=-1,0,0)");
        cmd->add_option("--bandwidths", args.bandwidths, "per-node bandwidth of the link to its parent");
    }
    cmd->add_option("--out", args.out, "output file (default: stdout)");
}

int run_gen(const TopologyArgs& args) {
    arb_network* raw = nullptr;
    if (args.name == "complete") {
        check(arb_gen_complete(args.k, &raw));
    } else if (args.name == "cycle") {
        check(arb_gen_cycle(args.k, &raw));
    } else if (args.name == "ring") {
        check(arb_gen_ring(args.k, &raw));
    } else if (args.name == "cyc3") {
        check(arb_gen_three_cycle(args.a, args.b, args.c, &raw));
    } else if (args.name == "hypercube") {
        check(arb_gen_hypercube(args.dim, &raw));
    } else if (args.name == "tree") {
        const auto parents = parse_list(args.parents, "--parents");
        auto bandwidths = args.bandwidths.empty() ? std::vector<long long>(parents.size(), 1)
                                                  : parse_list(args.bandwidths, "--bandwidths");
        if (bandwidths.size() != parents.size()) fail(kUsage, "--bandwidths needs one entry per node");
        std::vector<int> p(parents.begin(), parents.end());
        std::vector<int64_t> b(bandwidths.begin(), bandwidths.end());
        check(arb_gen_bidirected_tree(static_cast<int>(p.size()), p.data(), b.data(), &raw));
    } else {
        fail(kUsage, "unknown topology '" + args.name + "'");
    }
    Network network(raw);
    write_output(arb_network_text(network.get()), args.out);
    return kOk;
}

std::string cut_line(const arb_cut* cut) {
    return std::string("upper=") + arb_cut_value(cut) + " cut=" +
           subset_text(arb_cut_size(cut), [&](size_t i) { return arb_cut_node(cut, i); });
}

int run_bounds(const std::string& path, const std::string& method) {
    Network network = load(path);
    auto bound = [&](arb_cut_method m) {
        arb_cut* raw = nullptr;
        check(arb_cutset_bound(network.get(), m, &raw));
        return Cut(raw);
    };
    if (method == "brute") {
        std::cout << cut_line(bound(ARB_CUT_BRUTE_FORCE).get()) << '\n';
    } else if (method == "flow") {
        std::cout << cut_line(bound(ARB_CUT_MAX_FLOW).get()) << '\n';
    } else {
        Cut brute = bound(ARB_CUT_BRUTE_FORCE);
        Cut flow = bound(ARB_CUT_MAX_FLOW);
        if (std::string(arb_cut_value(brute.get())) != arb_cut_value(flow.get())) {
            fail(kVerification, std::string("cut-set methods disagree: brute force ") + arb_cut_value(brute.get()) +
                                    ", max flow " + arb_cut_value(flow.get()));
        }
        std::cout << cut_line(brute.get()) << " agree=brute,flow\n";
    }
    return kOk;
}

int run_lp(const std::string& path, const std::string& mode, bool force, const std::string& emit) {
    Network network = load(path);
    arb_lp_solution* raw = nullptr;
    check(arb_lp_solve(network.get(), mode == "exhaustive" ? ARB_LP_EXHAUSTIVE : ARB_LP_COLGEN, force ? 1 : 0, &raw));
    Lp lp(raw);
    std::cout << "lower=" << arb_lp_value(lp.get()) << " mode=" << mode
              << " columns=" << arb_lp_columns_considered(lp.get()) << " pivots=" << arb_lp_pivots(lp.get()) << '\n';
    if (!emit.empty()) {
        arb_packing* packing = nullptr;
        check(arb_lp_packing(lp.get(), &packing));
        PackingHandle owned(packing);
        write_output(arb_packing_text(owned.get()), emit);
    }
    return kOk;
}

int run_pack(const TopologyArgs& args) {
    arb_packing* raw = nullptr;
    if (args.name == "complete") {
        check(arb_pack_complete(args.k, &raw));
    } else if (args.name == "cycle") {
        check(arb_pack_cycle(args.k, &raw));
    } else if (args.name == "ring") {
        check(arb_pack_ring(args.k, &raw));
    } else if (args.name == "cyc3") {
        check(arb_pack_three_cycle(args.a, args.b, args.c, &raw));
    } else if (args.name == "hypercube") {
        check(arb_pack_hypercube(args.dim, &raw));
    } else {
        fail(kUsage, "no closed-form packing for topology '" + args.name + "'");
    }
    PackingHandle packing(raw);

    // Verify against the matching generated network.
    arb_network* net = nullptr;
    if (args.name == "complete") check(arb_gen_complete(args.k, &net));
    if (args.name == "cycle") check(arb_gen_cycle(args.k, &net));
    if (args.name == "ring") check(arb_gen_ring(args.k, &net));
    if (args.name == "cyc3") check(arb_gen_three_cycle(args.a, args.b, args.c, &net));
    if (args.name == "hypercube") check(arb_gen_hypercube(args.dim, &net));
    Network network(net);
    int feasible = 0;
    int tight = 0;
    check(arb_packing_check(network.get(), packing.get(), &feasible, &tight));
    const std::string cap = take([&] {
        char* text = nullptr;
        check(arb_corollary_cap(network.get(), &text));
        return text;
    }());

    write_output(arb_packing_text(packing.get()), args.out);
    std::cout << "rate=" << arb_packing_rate(packing.get()) << " columns=" << arb_packing_column_count(packing.get())
              << " feasible=" << (feasible ? "yes" : "no") << " cap=" << cap
              << " cap_tight=" << (tight ? "yes" : "no") << '\n';
    if (!feasible) fail(kVerification, "packing violates a link capacity");
    return kOk;
}

int run_simulate(const std::string& net_path, const std::string& packing_path, uint64_t length, uint64_t q,
                 uint64_t seed, uint64_t scale, bool transcript) {
    Network network = load(net_path);
    arb_packing* raw = nullptr;
    check(arb_packing_load(packing_path.c_str(), &raw));
    PackingHandle packing(raw);
    std::cout << "seed=" << seed << " q=" << q << " L=" << length << '\n';
    arb_simulation* sim_raw = nullptr;
    check(arb_simulate(network.get(), packing.get(), length, q, seed, scale, &sim_raw));
    Simulation sim(sim_raw);
    if (transcript) std::cout << arb_simulation_transcript(sim.get());
    std::cout << "decoded=ok rate=" << arb_simulation_throughput(sim.get())
              << " packing_rate=" << arb_packing_rate(packing.get()) << " scale=" << arb_simulation_scale(sim.get())
              << " streams=" << arb_simulation_streams(sim.get())
              << " instances=" << arb_simulation_instances(sim.get())
              << " rounds=" << arb_simulation_rounds(sim.get())
              << " per_scaled_use=" << arb_simulation_per_scaled_use(sim.get()) << '\n';
    return kOk;
}

std::string decimal(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

int run_report(const std::string& path, bool json, const std::string& mode) {
    Network network = load(path);
    arb_report* raw = nullptr;
    check(arb_report_create(network.get(), mode == "exhaustive" ? ARB_LP_EXHAUSTIVE : ARB_LP_COLGEN, &raw));
    Report report(raw);
    const arb_report* r = report.get();
    const std::string gap = arb_report_gap(r);
    std::vector<int> cut;
    for (size_t i = 0; i < arb_report_cut_size(r); ++i) cut.push_back(arb_report_cut_node(r, i));

    if (json) {
        nlohmann::ordered_json doc;
        doc["network"] = {{"file", path}, {"nodes", arb_network_node_count(network.get())}};
        doc["lower"] = arb_report_lower(r);
        doc["lower_source"] = arb_report_lower_source(r);
        doc["upper"] = arb_report_upper(r);
        doc["cut"] = cut;
        doc["gap"] = gap.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(gap);
        doc["cap"] = arb_report_cap(r);
        doc["columns"] = arb_report_columns(r);
        std::cout << doc.dump(2) << '\n';
        return kOk;
    }
    const auto node = [&](size_t i) { return cut[i]; };
    std::cout << "network  " << path << " (K=" << arb_network_node_count(network.get()) << ")\n"
              << "lower    " << arb_report_lower(r) << " (" << decimal(arb_report_lower_double(r)) << ") "
              << arb_report_lower_source(r) << ", " << arb_report_columns(r) << " columns\n"
              << "upper    " << arb_report_upper(r) << " cut=" << subset_text(cut.size(), node) << '\n'
              << "gap      " << (gap.empty() ? "undefined" : gap + " (" + decimal(arb_report_gap_double(r)) + ")")
              << '\n'
              << "cap      " << arb_report_cap(r) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the All-Reduce computation rate of a network"};
    app.require_subcommand(1);
    app.set_version_flag("--version", arb_version());

    TopologyArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a network file for a standard topology");
    add_topology_options(gen, gen_args, true);

    std::string bounds_file;
    std::string bounds_method = "brute";
    auto* bounds = app.add_subcommand("bounds", "cut-set upper bound");
    bounds->add_option("network", bounds_file)->required();
    bounds->add_option("--method", bounds_method)->check(CLI::IsMember({"brute", "flow", "both"}));

    std::string lp_file;
    std::string lp_mode = "colgen";
    bool lp_force = false;
    std::string lp_emit;
    auto* lp = app.add_subcommand("lp", "LP lower bound over rooted MAC-BC tree packings");
    lp->add_option("network", lp_file)->required();
    lp->add_option("--mode", lp_mode)->check(CLI::IsMember({"exhaustive", "colgen"}));
    lp->add_flag("--force", lp_force, "allow exhaustive enumeration above K = 5");
    lp->add_option("--emit-packing", lp_emit, "write the optimal packing to this file");

    TopologyArgs pack_args;
    auto* pack = app.add_subcommand("pack", "closed-form packing for a standard topology");
    add_topology_options(pack, pack_args, false);

    std::string sim_net;
    std::string sim_packing;
    uint64_t sim_length = 64;
    uint64_t sim_q = 257;
    uint64_t sim_seed = 1;
    uint64_t sim_scale = 0;
    bool sim_transcript = false;
    auto* simulate = app.add_subcommand("simulate", "run a packing's Reduce-Broadcast protocol over F_q");
    simulate->add_option("network", sim_net)->required();
    simulate->add_option("packing", sim_packing)->required();
    simulate->add_option("--L", sim_length, "sum instances per stream");
    simulate->add_option("--q", sim_q, "field size (prime below 2^32)");
    simulate->add_option("--seed", sim_seed, "SplitMix64 seed for the inputs");
    simulate->add_option("--scale", sim_scale, "capacity scale D (default: LCM of weight denominators)");
    simulate->add_flag("--transcript", sim_transcript, "print every transmission");

    std::string report_file;
    bool report_json = false;
    std::string report_mode = "colgen";
    auto* report = app.add_subcommand("report", "lower and upper bounds with their gap");
    report->add_option("network", report_file)->required();
    report->add_flag("--json", report_json, "emit one JSON document");
    report->add_option("--lp", report_mode)->check(CLI::IsMember({"exhaustive", "colgen"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return run_gen(gen_args);
        if (*bounds) return run_bounds(bounds_file, bounds_method);
        if (*lp) return run_lp(lp_file, lp_mode, lp_force, lp_emit);
        if (*pack) return run_pack(pack_args);
        if (*simulate) {
            return run_simulate(sim_net, sim_packing, sim_length, sim_q, sim_seed, sim_scale, sim_transcript);
        }
        if (*report) return run_report(report_file, report_json, report_mode);
    } catch (const Failure& f) {
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "arbound: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
