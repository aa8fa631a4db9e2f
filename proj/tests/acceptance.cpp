// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, details for every
// failing case, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arb/cut.hpp"
#include "arb/error.hpp"
#include "arb/packing.hpp"
#include "arb/rate_lp.hpp"
#include "arb/schemes.hpp"
#include "arb/simulator.hpp"
#include "support.hpp"

using namespace arb;

namespace {

struct Criterion {
    int failures = 0;
    int checks = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failures <= 20) notes.push_back("  fail: " + what);
        }
    }
    void note(const std::string& line) { notes.push_back("  note: " + line); }
};

struct NamedNetwork {
    std::string name;
    Network network;
};

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& z) { return z.get_str(); }

Rational lower_bound(const Network& n) {
    return n.node_count() <= kMaxExhaustiveNodes ? lp_exhaustive(n).value : lp_colgen(n).value;
}

Integer power_of_two(int u) { return Integer(1) << u; }

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Checks lower and upper bound values and records the network for the gap check.
void check_bounds(Criterion& c, std::vector<NamedNetwork>& seen, const std::string& name, const Network& n,
                  const Rational& lower, const Integer& upper) {
    const Cut cut = cutset_bound(n);
    const Rational lp = lower_bound(n);
    c.expect(cut.value == upper, name + ": upper " + str(cut.value) + " expected " + str(upper));
    c.expect(lp == lower, name + ": lower " + str(lp) + " expected " + str(lower));
    seen.push_back({name, n});
}

Criterion bound_values(std::vector<NamedNetwork>& seen) {
    Criterion c;
    for (int k = 2; k <= 8; ++k) {
        check_bounds(c, seen, "complete K=" + std::to_string(k), gen_complete(k), ratio(k, 2), k - 1);
    }
    for (int k = 3; k <= 8; ++k) {
        check_bounds(c, seen, "cycle K=" + std::to_string(k), gen_cycle(k), ratio(k, 2 * (k - 1)), 1);
        check_bounds(c, seen, "ring K=" + std::to_string(k), gen_ring(k), ratio(k, k - 1), 2);
    }
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int cc = 1; cc <= 4; ++cc) {
                const int lo = std::min({a, b, cc});
                const Rational quarter = ratio(a + b + cc, 4);
                const Rational lower = lo <= quarter ? Rational(lo) : quarter;
                std::ostringstream name;
                name << "cyc3(" << a << "," << b << "," << cc << ")";
                check_bounds(c, seen, name.str(), gen_three_cycle(a, b, cc), lower, lo);
            }
        }
    }
    for (int u = 1; u <= 3; ++u) {
        const Rational lower = ratio(power_of_two(u - 1) * u, power_of_two(u) - 1);
        check_bounds(c, seen, "hypercube U=" + std::to_string(u), gen_hypercube(u), lower, u);
    }
    SplitMix64 rng(20261016);
    for (int t = 0; t < 5; ++t) {
        const int k = 4 + t;
        const std::vector<NodeId> parent = testing::random_tree(rng, k);
        std::vector<Integer> bandwidth(k, 0);
        long lo = 6;
        for (int v = 0; v < k; ++v) {
            if (parent[v] == -1) continue;
            bandwidth[v] = static_cast<long>(1 + rng.below(5));
            lo = std::min(lo, bandwidth[v].get_si());
        }
        for (int v = 0; v < k; ++v)
            if (parent[v] == -1) bandwidth[v] = 1;
        check_bounds(c, seen, "bidirected tree #" + std::to_string(t) + " K=" + std::to_string(k),
                     gen_bidirected_tree(parent, bandwidth), Rational(lo), lo);
    }
    return c;
}

Criterion edge_counts() {
    Criterion c;
    for (int u = 1; u <= 3; ++u) {
        const Integer expected = 2 * (power_of_two(u) - 1) * factorial(u - 1);
        for (const Edge& e : gen_hypercube(u).support()) {
            const Integer count = hypercube_edge_count(u, e);
            c.expect(count == expected, "U=" + std::to_string(u) + " edge " + hypercube_label(e.from, u) + "->" +
                                            hypercube_label(e.to, u) + " count " + str(count) + " expected " +
                                            str(expected));
        }
    }
    const Integer worked = hypercube_edge_count(3, {0, 1});
    c.expect(worked == 28, "U=3 edge 000->001 count " + str(worked) + " expected 28");
    return c;
}

Criterion oracles() {
    Criterion c;
    SplitMix64 rng(7001);
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + static_cast<int>(rng.below(9));
        const Network n = testing::random_network(rng, k, 4);
        const Cut brute = cutset_bound_bruteforce(n);
        const Cut flow = cutset_bound_maxflow(n);
        c.expect(brute.value == flow.value, "cut #" + std::to_string(t) + ": brute " + str(brute.value) +
                                                " flow " + str(flow.value) + "\n" + serialize(n));
    }
    for (int t = 0; t < 50; ++t) {
        const Network n = testing::random_strong_network(rng, 4, 4, 50);
        const Rational exhaustive = lp_exhaustive(n).value;
        const Rational colgen = lp_colgen(n).value;
        c.expect(exhaustive == colgen, "LP #" + std::to_string(t) + ": exhaustive " + str(exhaustive) +
                                           " colgen " + str(colgen) + "\n" + serialize(n));
    }
    std::vector<NamedNetwork> topologies;
    for (int k = 2; k <= 5; ++k) topologies.push_back({"complete K=" + std::to_string(k), gen_complete(k)});
    for (int k = 3; k <= 5; ++k) {
        topologies.push_back({"cycle K=" + std::to_string(k), gen_cycle(k)});
        topologies.push_back({"ring K=" + std::to_string(k), gen_ring(k)});
    }
    topologies.push_back({"cyc3(2,3,4)", gen_three_cycle(2, 3, 4)});
    for (int u = 1; u <= 2; ++u) topologies.push_back({"hypercube U=" + std::to_string(u), gen_hypercube(u)});
    for (int t = 0; t < 10; ++t) {
        topologies.push_back({"random #" + std::to_string(t), testing::random_network(rng, 2 + t % 4, 2)});
    }
    for (const auto& [name, n] : topologies) {
        for (NodeId r = 0; r < n.node_count(); ++r) {
            for (Orientation o : {Orientation::kIn, Orientation::kOut}) {
                const Integer counted = count_arborescences(n, r, o);
                const std::size_t listed = enumerate_arborescences(n, r, o).size();
                c.expect(counted == listed, name + " root " + std::to_string(r) + ": matrix-tree " + str(counted) +
                                                " enumeration " + std::to_string(listed));
            }
        }
    }
    return c;
}

Criterion packings() {
    Criterion c;
    auto check = [&](const std::string& name, const Network& n, const Packing& p, bool tight,
                     std::optional<Rational> lp) {
        const auto excess = find_capacity_excess(n, p);
        c.expect(!excess, name + ": load exceeds capacity");
        if (tight) {
            c.expect(p.rate() == corollary_cap(n),
                     name + ": rate " + str(p.rate()) + " differs from cap " + str(corollary_cap(n)));
        }
        if (lp) c.expect(p.rate() == *lp, name + ": rate " + str(p.rate()) + " differs from LP " + str(*lp));
    };
    auto exhaustive_if_small = [](const Network& n) -> std::optional<Rational> {
        if (n.node_count() > kMaxExhaustiveNodes) return std::nullopt;
        return lp_exhaustive(n).value;
    };
    for (int k = 2; k <= 8; ++k) {
        check("complete K=" + std::to_string(k), gen_complete(k), pack_complete(k), true,
              exhaustive_if_small(gen_complete(k)));
    }
    for (int k = 3; k <= 8; ++k) {
        check("cycle K=" + std::to_string(k), gen_cycle(k), pack_cycle(k), true, exhaustive_if_small(gen_cycle(k)));
        check("ring K=" + std::to_string(k), gen_ring(k), pack_ring(k), true, exhaustive_if_small(gen_ring(k)));
    }
    for (int u = 1; u <= 3; ++u) {
        check("hypercube U=" + std::to_string(u), gen_hypercube(u), pack_hypercube(u), true,
              exhaustive_if_small(gen_hypercube(u)));
    }
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (int cc = 1; cc <= 4; ++cc) {
                const Network n = gen_three_cycle(a, b, cc);
                const int lo = std::min({a, b, cc});
                const bool second_case = Rational(lo) > ratio(a + b + cc, 4);
                std::ostringstream name;
                name << "cyc3(" << a << "," << b << "," << cc << ")";
                check(name.str(), n, pack_three_cycle(a, b, cc), second_case, lp_exhaustive(n).value);
            }
        }
    }
    return c;
}

Criterion simulator() {
    Criterion c;
    SplitMix64 rng(5005);
    const std::uint64_t moduli[] = {2, 3, 257};
    for (int t = 0; t < 1000; ++t) {
        const int k = 2 + static_cast<int>(rng.below(5));
        const std::uint64_t length = 1 + rng.below(64);
        const PrimeField field(moduli[t % 3]);
        const MacBcColumn column = testing::random_column(rng, k);
        const Schedule schedule = schedule_column(column, length);
        const InputAssignment inputs = random_inputs(k, length, field, rng.next());
        std::vector<Symbol> expected(length, 0);
        for (const auto& row : inputs.inputs)
            for (std::size_t s = 0; s < length; ++s) expected[s] = field.add(expected[s], row[s]);
        try {
            const Transcript transcript = execute(column.as_network(), schedule, inputs, field);
            bool decoded = true;
            for (const auto& out : transcript.outputs) decoded = decoded && out == expected;
            c.expect(decoded, "run #" + std::to_string(t) + ": wrong sum at some node");
        } catch (const SimulationError& e) {
            c.expect(false, "run #" + std::to_string(t) + ": " + e.what());
        }
        const Rational rate = measured_rate(schedule);
        const Rational want = ratio(length, length + 2 * k - 3);
        c.expect(rate == want, "run #" + std::to_string(t) + ": rate " + str(rate) + " expected " + str(want));
    }
    const std::uint64_t length = 256;
    const PrimeField field(257);
    const struct {
        const char* name;
        Network network;
        Packing packing;
    } cases[] = {{"pack_complete(4)", gen_complete(4), pack_complete(4)}, {"pack_cycle(5)", gen_cycle(5), pack_cycle(5)}};
    for (const auto& run_case : cases) {
        try {
            const PackingRun run = execute_packing(run_case.network, run_case.packing, length, field, 99);
            const int k = run_case.network.node_count();
            const Rational floor = (1 - ratio(2 * k - 3, length)) * run_case.packing.rate();
            c.expect(run.throughput >= floor, std::string(run_case.name) + ": throughput " + str(run.throughput) +
                                                  " below " + str(floor));
            c.note(std::string(run_case.name) + " throughput " + str(run.throughput) + " (packing rate " +
                   str(run_case.packing.rate()) + ", D=" + str(run.scale) + ")");
        } catch (const SimulationError& e) {
            c.expect(false, std::string(run_case.name) + ": " + e.what());
        }
    }
    return c;
}

Criterion gap(const std::vector<NamedNetwork>& regression) {
    Criterion c;
    std::vector<NamedNetwork> all = regression;
    SplitMix64 rng(6006);
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + static_cast<int>(rng.below(5));
        all.push_back({"random #" + std::to_string(t), testing::random_strong_network(rng, k, 4, 30 + t % 60)});
    }
    int within_two = 0;
    for (const auto& [name, n] : all) {
        const BoundsReport report = bounds_report(n);
        c.expect(report.lower <= report.upper,
                 name + ": lower " + str(report.lower) + " above upper " + str(report.upper));
        if (report.upper <= 2 * report.lower) {
            ++within_two;
        } else {
            c.note("upper > 2 lower on " + name + ": " + str(report.upper) + " vs " + str(report.lower) + "\n" +
                   serialize(n));
        }
    }
    c.note(std::to_string(within_two) + "/" + std::to_string(all.size()) + " networks have upper <= 2 lower");
    return c;
}

bool report(int id, const std::string& title, const std::function<Criterion()>& run) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
        c = run();
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (c.failures == 0 ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << c.checks
              << " checks, " << c.failures << " failed, " << timing << ")\n";
    for (const auto& line : c.notes) std::cout << line << '\n';
    return c.failures == 0;
}

}  // namespace

int main() {
    std::vector<NamedNetwork> regression;
    bool ok = true;
    ok &= report(1, "closed-form bound values", [&] { return bound_values(regression); });
    ok &= report(2, "hypercube edge multiplicity", edge_counts);
    ok &= report(3, "oracle equivalences", oracles);
    ok &= report(4, "packing feasibility and cap tightness", packings);
    ok &= report(5, "simulator decoding and rate", simulator);
    ok &= report(6, "lower <= upper at desk scale", [&] { return gap(regression); });
    std::cout << (ok ? "ALL PASS" : "SOME FAILED") << '\n';
    return ok ? 0 : 1;
}
