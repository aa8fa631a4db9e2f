// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_SIMULATOR_HPP
#define ARB_SIMULATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arb/error.hpp"
#include "arb/packing.hpp"

namespace arb {

using Symbol = std::uint64_t;

/// Integers mod a prime q < 2^32.
class PrimeField {
public:
    /// Throws kInvalidArgument unless q is prime.
    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return modulus_; }
    Symbol add(Symbol a, Symbol b) const noexcept {
        Symbol s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    Symbol neg(Symbol a) const noexcept { return a == 0 ? 0 : modulus_ - a; }

    static bool is_prime(std::uint64_t n);

private:
    std::uint64_t modulus_;
};

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by the golden
/// gamma, output through a two-round xor-shift-multiply mix.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);
    /// Independent generator derived from the next output.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

/// inputs[i][slot]: node i's symbol for sum instance `slot`. Stream s,
/// instance l lives in slot s * L + l.
struct InputAssignment {
    std::vector<std::vector<Symbol>> inputs;
};

InputAssignment random_inputs(int node_count, std::size_t length, const PrimeField& field,
                              std::uint64_t seed);

enum class Phase { kReduce, kBroadcast };

/// Names the value a sender emits. A folded payload is the sender's own
/// input plus the Reduce partial sums it received from `folded`; a forward
/// payload relays the Broadcast value the sender received earlier.
struct Payload {
    Phase phase = Phase::kReduce;
    std::uint32_t stream = 0;
    std::uint64_t instance = 0;
    bool forward = false;
    std::vector<NodeId> folded;

    std::string describe() const;
};

struct Transmission {
    NodeId from = 0;
    NodeId to = 0;
    Payload payload;
};

/// How a node obtains its final sum for one (stream, instance): from the
/// Broadcast value it received, or by folding its own input with Reduce
/// partial sums (the root).
struct DecodeRule {
    NodeId node = 0;
    std::uint32_t stream = 0;
    std::uint64_t instance = 0;
    bool from_broadcast = true;
    std::vector<NodeId> folded;
};

struct Schedule {
    int node_count = 0;
    std::uint32_t streams = 0;
    std::uint64_t instances_per_stream = 0;  // L
    std::vector<std::vector<Transmission>> rounds;  // rounds[n], 0-based
    std::vector<DecodeRule> decodes;

    std::size_t round_count() const noexcept { return rounds.size(); }
    std::uint64_t total_instances() const noexcept { return streams * instances_per_stream; }
};

/// Pipelined Reduce-then-Broadcast on one column: 2(K - 1) + L - 1 rounds.
/// A node at Reduce depth d sends instance l in round (K-1-d) + l; a node
/// at Broadcast depth e receives it in round (K-1) + (e-1) + l.
Schedule schedule_column(const MacBcColumn& column, std::uint64_t instances);

/// Adds one more independent stream of `column` to a schedule built for
/// the same K and L.
void append_stream(Schedule& schedule, const MacBcColumn& column);

struct Received {
    NodeId from = 0;
    Payload payload;
    Symbol value = 0;
};

struct Transcript {
    int node_count = 0;
    std::uint64_t modulus = 0;
    /// received[j][n] is Y_j(n): every symbol delivered to j in round n.
    std::vector<std::vector<std::vector<Received>>> received;
    /// outputs[j][slot]: node j's decoded sum.
    std::vector<std::vector<Symbol>> outputs;
    std::uint64_t instances = 0;
    std::size_t rounds = 0;
};

/// Failure raised by execute(); `round` is 0-based (-1 when not tied to a round).
class SimulationError : public Error {
public:
    SimulationError(ErrorCode code, const std::string& what, long round, NodeId node)
        : Error(code, what), round_(round), node_(node) {}
    long round() const noexcept { return round_; }
    NodeId node() const noexcept { return node_; }

private:
    long round_;
    NodeId node_;
};

/// Replays a schedule symbol by symbol. Per-round link usage must fit
/// `capacity_scale` * beta, every payload must only use data the sender
/// held before the round, and every node must decode the true sum.
/// Throws SimulationError (capacity, causality or decode) otherwise.
Transcript execute(const Network& network, const Schedule& schedule, const InputAssignment& inputs,
                   const PrimeField& field, const Integer& capacity_scale = 1);

/// Structural causality check of a schedule, independent of any network.
void validate_causality(const Schedule& schedule);

/// instances / rounds.
Rational measured_rate(const Schedule& schedule);

/// Text dump: `n=<round> <from>-><to> len=<symbols> desc=<payloads>` per
/// used link per round (rounds 1-based), then `decoded=ok rate=<L>/<N>`.
std::string dump(const Schedule& schedule);

struct PackingRun {
    Integer scale;                 // D
    std::uint32_t streams = 0;     // sum_z D * weight_z
    std::uint64_t instances = 0;   // streams * L
    std::size_t rounds = 0;        // 2(K - 1) + L - 1
    /// instances per round of the D-scaled network.
    Rational per_scaled_use;
    /// instances per use of the original network: per_scaled_use / D.
    Rational throughput;
    Transcript transcript;
    Schedule schedule;
};

/// Runs D * weight_z streams of every column at once over a network with
/// per-round capacity D * beta. `scale` defaults to the LCM of the weight
/// denominators; D * weight_z must be an integer for every column.
PackingRun execute_packing(const Network& network, const Packing& packing, std::uint64_t instances,
                           const PrimeField& field, std::uint64_t seed,
                           const Integer& scale = 0);

}  // namespace arb

#endif  // ARB_SIMULATOR_HPP
