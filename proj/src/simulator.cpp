// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/simulator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

namespace arb {

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
    require(modulus < (std::uint64_t{1} << 32), "field modulus must be below 2^32");
    require(is_prime(modulus), "q must be prime, got " + std::to_string(modulus));
}

bool PrimeField::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

InputAssignment random_inputs(int node_count, std::size_t length, const PrimeField& field,
                              std::uint64_t seed) {
    SplitMix64 rng(seed);
    InputAssignment out;
    out.inputs.resize(static_cast<std::size_t>(node_count));
    for (auto& row : out.inputs) {
        SplitMix64 node_rng = rng.split();
        row.resize(length);
        for (auto& symbol : row) symbol = node_rng.below(field.modulus());
    }
    return out;
}

std::string Payload::describe() const {
    std::ostringstream out;
    if (forward) {
        out << "fwd";
    } else {
        out << (phase == Phase::kReduce ? "red" : "bc");
    }
    out << "(s=" << stream << ",l=" << instance;
    if (!forward && !folded.empty()) {
        out << ",fold=";
        for (std::size_t i = 0; i < folded.size(); ++i) out << (i ? "+" : "") << folded[i];
    }
    out << ')';
    return out.str();
}

namespace {

std::vector<std::vector<NodeId>> children_of(const Arborescence& tree) {
    std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(tree.node_count()));
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        if (v != tree.root) children[tree.parent[v]].push_back(v);
    }
    return children;
}

}  // namespace

void append_stream(Schedule& schedule, const MacBcColumn& column) {
    const int k = column.node_count();
    require(k == schedule.node_count, "stream node count differs from schedule");
    const std::uint64_t length = schedule.instances_per_stream;
    const std::uint32_t stream = schedule.streams++;
    const NodeId root = column.root();
    const auto mac_children = children_of(column.mac());

    for (std::uint64_t l = 0; l < length; ++l) {
        for (NodeId v = 0; v < k; ++v) {
            if (v == root) continue;
            const auto reduce_round = static_cast<std::size_t>(k - 1 - column.mac().depth(v)) + l;
            schedule.rounds[reduce_round].push_back(
                {v, column.mac().parent[v], {Phase::kReduce, stream, l, false, mac_children[v]}});

            const NodeId sender = column.bc().parent[v];
            const auto broadcast_round = static_cast<std::size_t>(k - 1 + column.bc().depth(v) - 1) + l;
            Payload payload{Phase::kBroadcast, stream, l, sender != root, {}};
            if (sender == root) payload.folded = mac_children[root];
            schedule.rounds[broadcast_round].push_back({sender, v, std::move(payload)});
        }
        for (NodeId v = 0; v < k; ++v) {
            DecodeRule rule{v, stream, l, v != root, {}};
            if (v == root) rule.folded = mac_children[root];
            schedule.decodes.push_back(std::move(rule));
        }
    }
}

Schedule schedule_column(const MacBcColumn& column, std::uint64_t instances) {
    require(instances >= 1, "need at least one sum instance");
    Schedule schedule;
    schedule.node_count = column.node_count();
    schedule.instances_per_stream = instances;
    schedule.rounds.resize(static_cast<std::size_t>(2 * (column.node_count() - 1)) + instances - 1);
    append_stream(schedule, column);
    return schedule;
}

namespace {

struct Stored {
    Symbol value;
    std::size_t round;
};

using ReduceKey = std::tuple<std::uint32_t, std::uint64_t, NodeId>;  // stream, instance, from
using BroadcastKey = std::pair<std::uint32_t, std::uint64_t>;

struct NodeState {
    std::map<ReduceKey, Stored> partials;
    std::map<BroadcastKey, Stored> totals;
};

[[noreturn]] void sim_fail(ErrorCode code, const std::string& what, long round, NodeId node) {
    throw SimulationError(code, what, round, node);
}

std::string at_round(std::size_t n) { return "round " + std::to_string(n + 1); }

Symbol fold(const PrimeField& field, const InputAssignment& inputs, const std::vector<NodeState>& state,
            NodeId node, std::uint32_t stream, std::uint64_t instance, std::size_t slot,
            const std::vector<NodeId>& folded, std::size_t before_round, bool* ok) {
    Symbol value = inputs.inputs[node][slot];
    for (NodeId child : folded) {
        auto it = state[node].partials.find({stream, instance, child});
        if (it == state[node].partials.end() || it->second.round >= before_round) {
            *ok = false;
            return 0;
        }
        value = field.add(value, it->second.value);
    }
    return value;
}

}  // namespace

Transcript execute(const Network& network, const Schedule& schedule, const InputAssignment& inputs,
                   const PrimeField& field, const Integer& capacity_scale) {
    const int k = schedule.node_count;
    require(network.node_count() == k, "schedule and network differ in node count");
    const std::uint64_t slots = schedule.total_instances();
    require(inputs.inputs.size() == static_cast<std::size_t>(k), "one input vector per node expected");
    for (const auto& row : inputs.inputs) {
        require(row.size() >= slots, "input vectors shorter than the schedule's instance count");
        for (Symbol s : row) require(s < field.modulus(), "input symbol outside the field");
    }

    Transcript transcript;
    transcript.node_count = k;
    transcript.modulus = field.modulus();
    transcript.rounds = schedule.round_count();
    transcript.instances = slots;
    transcript.received.assign(static_cast<std::size_t>(k),
                               std::vector<std::vector<Received>>(schedule.round_count()));
    std::vector<NodeState> state(static_cast<std::size_t>(k));
    const std::uint64_t length = schedule.instances_per_stream;

    for (std::size_t n = 0; n < schedule.round_count(); ++n) {
        const auto& round = schedule.rounds[n];
        std::map<std::pair<NodeId, NodeId>, Integer> usage;
        for (const auto& t : round) {
            if (t.from < 0 || t.from >= k || t.to < 0 || t.to >= k || t.from == t.to) {
                sim_fail(ErrorCode::kInvalidArgument, at_round(n) + ": bad link", static_cast<long>(n), t.from);
            }
            Integer& used = usage[{t.from, t.to}];
            used += 1;
            if (used > capacity_scale * network.bandwidth(t.from, t.to)) {
                sim_fail(ErrorCode::kCapacityViolation,
                         at_round(n) + ": link " + std::to_string(t.from) + "->" + std::to_string(t.to) +
                             " carries " + used.get_str() + " symbols, capacity " +
                             Integer(capacity_scale * network.bandwidth(t.from, t.to)).get_str(),
                         static_cast<long>(n), t.from);
            }
        }

        std::vector<Symbol> values;
        values.reserve(round.size());
        for (const auto& t : round) {
            const Payload& p = t.payload;
            if (p.stream >= schedule.streams || p.instance >= length) {
                sim_fail(ErrorCode::kInvalidArgument, at_round(n) + ": payload names an unknown instance",
                         static_cast<long>(n), t.from);
            }
            const std::size_t slot = p.stream * length + p.instance;
            bool ok = true;
            Symbol value = 0;
            if (p.forward) {
                auto it = state[t.from].totals.find({p.stream, p.instance});
                if (it == state[t.from].totals.end() || it->second.round >= n) {
                    ok = false;
                } else {
                    value = it->second.value;
                }
            } else {
                value = fold(field, inputs, state, t.from, p.stream, p.instance, slot, p.folded, n, &ok);
            }
            if (!ok) {
                sim_fail(ErrorCode::kCausalityViolation,
                         at_round(n) + ": node " + std::to_string(t.from) + " sends " + p.describe() +
                             " before holding its inputs",
                         static_cast<long>(n), t.from);
            }
            values.push_back(value);
        }

        for (std::size_t i = 0; i < round.size(); ++i) {
            const auto& t = round[i];
            const Payload& p = t.payload;
            if (p.phase == Phase::kReduce) {
                state[t.to].partials[{p.stream, p.instance, t.from}] = {values[i], n};
            } else {
                state[t.to].totals[{p.stream, p.instance}] = {values[i], n};
            }
            transcript.received[t.to][n].push_back({t.from, p, values[i]});
        }
    }

    // Decode and compare with the directly computed sum.
    constexpr Symbol kMissing = std::numeric_limits<Symbol>::max();
    transcript.outputs.assign(static_cast<std::size_t>(k), std::vector<Symbol>(slots, kMissing));
    const std::size_t end = schedule.round_count();
    for (const auto& rule : schedule.decodes) {
        if (rule.node < 0 || rule.node >= k || rule.stream >= schedule.streams || rule.instance >= length) {
            sim_fail(ErrorCode::kInvalidArgument, "decode rule out of range", -1, rule.node);
        }
        const std::size_t slot = rule.stream * length + rule.instance;
        bool ok = true;
        Symbol value = 0;
        if (rule.from_broadcast) {
            auto it = state[rule.node].totals.find({rule.stream, rule.instance});
            if (it == state[rule.node].totals.end()) {
                ok = false;
            } else {
                value = it->second.value;
            }
        } else {
            value = fold(field, inputs, state, rule.node, rule.stream, rule.instance, slot, rule.folded, end, &ok);
        }
        if (!ok) {
            sim_fail(ErrorCode::kDecodeFailure,
                     "node " + std::to_string(rule.node) + " lacks the data to decode instance " +
                         std::to_string(slot),
                     -1, rule.node);
        }
        transcript.outputs[rule.node][slot] = value;
    }
    for (std::size_t slot = 0; slot < slots; ++slot) {
        Symbol truth = 0;
        for (NodeId i = 0; i < k; ++i) truth = field.add(truth, inputs.inputs[i][slot]);
        for (NodeId j = 0; j < k; ++j) {
            if (transcript.outputs[j][slot] != truth) {
                sim_fail(ErrorCode::kDecodeFailure,
                         "node " + std::to_string(j) + " decodes instance " + std::to_string(slot) +
                             (transcript.outputs[j][slot] == kMissing ? " never" : " incorrectly"),
                         static_cast<long>(end) - 1, j);
            }
        }
    }
    return transcript;
}

void validate_causality(const Schedule& schedule) {
    // Zero inputs over GF(2) and unbounded links leave only the causality
    // and coverage checks active.
    std::vector<Integer> unbounded(static_cast<std::size_t>(schedule.node_count) * schedule.node_count, 0);
    for (NodeId i = 0; i < schedule.node_count; ++i) {
        for (NodeId j = 0; j < schedule.node_count; ++j) {
            if (i != j) unbounded[static_cast<std::size_t>(i) * schedule.node_count + j] = 1;
        }
    }
    const Network complete = Network::from_matrix(schedule.node_count, std::move(unbounded));
    std::size_t widest = 1;
    for (const auto& round : schedule.rounds) widest = std::max(widest, round.size());
    InputAssignment zeros;
    zeros.inputs.assign(static_cast<std::size_t>(schedule.node_count),
                        std::vector<Symbol>(schedule.total_instances(), 0));
    execute(complete, schedule, zeros, PrimeField(2), Integer(static_cast<unsigned long>(widest)));
}

Rational measured_rate(const Schedule& schedule) {
    require(schedule.round_count() > 0, "empty schedule");
    return ratio(Integer(static_cast<unsigned long>(schedule.total_instances())),
                    Integer(static_cast<unsigned long>(schedule.round_count())));
}

std::string dump(const Schedule& schedule) {
    std::ostringstream out;
    for (std::size_t n = 0; n < schedule.round_count(); ++n) {
        std::map<std::pair<NodeId, NodeId>, std::vector<const Payload*>> links;
        for (const auto& t : schedule.rounds[n]) links[{t.from, t.to}].push_back(&t.payload);
        for (const auto& [link, payloads] : links) {
            out << "n=" << n + 1 << ' ' << link.first << "->" << link.second << " len=" << payloads.size()
                << " desc=";
            for (std::size_t i = 0; i < payloads.size(); ++i) out << (i ? ";" : "") << payloads[i]->describe();
            out << '\n';
        }
    }
    out << "decoded=ok rate=" << schedule.total_instances() << '/' << schedule.round_count() << '\n';
    return out.str();
}

PackingRun execute_packing(const Network& network, const Packing& packing, std::uint64_t instances,
                           const PrimeField& field, std::uint64_t seed, const Integer& scale) {
    require(!packing.columns.empty(), "packing has no columns");
    require(instances >= 1, "need at least one sum instance");
    require(packing.columns.size() == packing.weights.size(), "packing: columns and weights differ");
    const int k = network.node_count();

    PackingRun run;
    run.scale = sgn(scale) > 0 ? scale : packing.scale();
    Schedule& schedule = run.schedule;
    schedule.node_count = k;
    schedule.instances_per_stream = instances;
    schedule.rounds.resize(static_cast<std::size_t>(2 * (k - 1)) + instances - 1);
    for (std::size_t z = 0; z < packing.columns.size(); ++z) {
        const Rational copies = packing.weights[z] * run.scale;
        require(copies.get_den() == 1, "scale times weight must be an integer for every column");
        require(packing.columns[z].node_count() == k, "packing and network differ in node count");
        require(copies.get_num() <= 1 << 20, "too many streams");
        for (long c = 0; c < copies.get_num().get_si(); ++c) append_stream(schedule, packing.columns[z]);
    }
    require(schedule.streams > 0, "packing has zero total weight");

    const auto inputs = random_inputs(k, schedule.total_instances(), field, seed);
    run.transcript = execute(network, schedule, inputs, field, run.scale);
    run.streams = schedule.streams;
    run.instances = schedule.total_instances();
    run.rounds = schedule.round_count();
    run.per_scaled_use = measured_rate(schedule);
    run.throughput = run.per_scaled_use / run.scale;
    return run;
}

}  // namespace arb
