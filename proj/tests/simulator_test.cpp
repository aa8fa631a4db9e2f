// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>
#include <vector>

#include "arb/error.hpp"
#include "arb/schemes.hpp"
#include "arb/simulator.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arb;

namespace {

std::vector<Symbol> direct_sum(const InputAssignment& inputs, const PrimeField& field) {
    std::vector<Symbol> sum(inputs.inputs.front().size(), 0);
    for (const auto& row : inputs.inputs)
        for (std::size_t s = 0; s < row.size(); ++s) sum[s] = field.add(sum[s], row[s]);
    return sum;
}

SimulationError simulation_error(auto&& body) {
    try {
        body();
    } catch (const SimulationError& e) {
        return e;
    }
    FAIL("expected a SimulationError");
    return SimulationError(ErrorCode::kInternal, "", -1, -1);
}

}  // namespace

TEST_CASE("prime field") {
    const PrimeField f(257);
    CHECK(f.add(200, 100) == 43);
    CHECK(f.neg(0) == 0);
    CHECK(f.add(f.neg(5), 5) == 0);
    CHECK(PrimeField::is_prime(2));
    CHECK(PrimeField::is_prime(4294967291ULL));
    CHECK_FALSE(PrimeField::is_prime(1));
    CHECK_FALSE(PrimeField::is_prime(4));
    CHECK_THROWS_AS(PrimeField(4), Error);
    CHECK_THROWS_AS(PrimeField(4294967311ULL), Error);
}

TEST_CASE("splitmix64 is deterministic") {
    SplitMix64 a(42);
    SplitMix64 b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xe220a8397b1dcdafULL);
    SplitMix64 r(1);
    for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
}

TEST_CASE("column schedule length") {
    const MacBcColumn k3 = pack_complete(3).columns[0];
    CHECK(schedule_column(k3, 1).round_count() == 4);
    CHECK(schedule_column(k3, 5).round_count() == 8);
    CHECK(measured_rate(schedule_column(k3, 5)) == Rational(5, 8));
    CHECK(measured_rate(schedule_column(k3, 1)) == Rational(1, 4));
    CHECK(measured_rate(schedule_column(k3, 997)) == Rational(997, 1000));
    const MacBcColumn k2 = pack_complete(2).columns[1];
    CHECK(schedule_column(k2, 1).round_count() == 2);
    CHECK(measured_rate(schedule_column(k2, 1)) == Rational(1, 2));
    CHECK_THROWS_AS(schedule_column(k3, 0), Error);
}

TEST_CASE("execution decodes the sum at every node") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = 2 + trial % 5;
        const MacBcColumn column = testing::random_column(rng, k);
        const std::uint64_t length = 1 + rng.below(16);
        const PrimeField field(trial % 2 ? 257 : 2);
        const Schedule schedule = schedule_column(column, length);
        validate_causality(schedule);
        CHECK(measured_rate(schedule) == ratio(length, length + 2 * k - 3));
        const InputAssignment inputs = random_inputs(k, length, field, rng.next());
        const Transcript t = execute(column.as_network(), schedule, inputs, field);
        const auto expected = direct_sum(inputs, field);
        for (int v = 0; v < k; ++v) CHECK(t.outputs[v] == expected);
    }
}

TEST_CASE("zero inputs decode to zero") {
    const MacBcColumn column = pack_cycle(4).columns[2];
    const Schedule schedule = schedule_column(column, 6);
    InputAssignment zeros;
    zeros.inputs.assign(4, std::vector<Symbol>(6, 0));
    const Transcript t = execute(column.as_network(), schedule, zeros, PrimeField(3));
    for (const auto& out : t.outputs) CHECK(out == std::vector<Symbol>(6, 0));
}

TEST_CASE("received symbols are exactly the round's transmissions") {
    const MacBcColumn column = pack_complete(4).columns[1];
    const Schedule schedule = schedule_column(column, 3);
    const PrimeField field(257);
    const Transcript t = execute(gen_complete(4), schedule, random_inputs(4, 3, field, 9), field);
    for (std::size_t n = 0; n < schedule.round_count(); ++n) {
        std::vector<std::size_t> per_node(4, 0);
        for (const Transmission& x : schedule.rounds[n]) ++per_node[x.to];
        for (int j = 0; j < 4; ++j) CHECK(t.received[j][n].size() == per_node[j]);
    }
}

TEST_CASE("execution is linear in the inputs") {
    const MacBcColumn column = pack_ring(5).columns[7];
    const Schedule schedule = schedule_column(column, 8);
    const PrimeField field(257);
    const InputAssignment w = random_inputs(5, 8, field, 1);
    const InputAssignment v = random_inputs(5, 8, field, 2);
    InputAssignment sum = w;
    for (int i = 0; i < 5; ++i)
        for (int s = 0; s < 8; ++s) sum.inputs[i][s] = field.add(w.inputs[i][s], v.inputs[i][s]);
    const Network ring = column.as_network();
    const Transcript tw = execute(ring, schedule, w, field);
    const Transcript tv = execute(ring, schedule, v, field);
    const Transcript ts = execute(ring, schedule, sum, field);
    for (int j = 0; j < 5; ++j) {
        for (std::size_t n = 0; n < schedule.round_count(); ++n) {
            REQUIRE(ts.received[j][n].size() == tw.received[j][n].size());
            for (std::size_t m = 0; m < ts.received[j][n].size(); ++m) {
                CHECK(ts.received[j][n][m].value == field.add(tw.received[j][n][m].value, tv.received[j][n][m].value));
            }
        }
    }
}

TEST_CASE("forged early payload is a causality violation") {
    const MacBcColumn column = pack_cycle(3).columns[0];
    Schedule schedule = schedule_column(column, 2);
    // Move the first Broadcast transmission to round 0, before any Reduce
    // data has reached the root.
    std::size_t from_round = 0;
    std::size_t index = 0;
    for (std::size_t n = 0; n < schedule.round_count() && from_round == 0; ++n) {
        for (std::size_t m = 0; m < schedule.rounds[n].size(); ++m) {
            if (schedule.rounds[n][m].payload.phase == Phase::kBroadcast) {
                from_round = n;
                index = m;
                break;
            }
        }
    }
    REQUIRE(from_round > 0);
    const Transmission forged = schedule.rounds[from_round][index];
    schedule.rounds[from_round].erase(schedule.rounds[from_round].begin() + static_cast<long>(index));
    schedule.rounds[0].push_back(forged);

    const PrimeField field(3);
    const SimulationError e = simulation_error(
        [&] { execute(gen_cycle(3), schedule, random_inputs(3, 2, field, 5), field); });
    CHECK(e.code() == ErrorCode::kCausalityViolation);
    CHECK(e.round() == 0);
    CHECK(e.node() == forged.from);
    CHECK_THROWS_AS(validate_causality(schedule), SimulationError);
}

TEST_CASE("capacity violation") {
    const MacBcColumn column = pack_complete(3).columns[0];
    Schedule schedule = schedule_column(column, 4);
    append_stream(schedule, column);
    const PrimeField field(2);
    const InputAssignment inputs = random_inputs(3, 8, field, 1);
    const SimulationError e = simulation_error([&] { execute(gen_complete(3), schedule, inputs, field); });
    CHECK(e.code() == ErrorCode::kCapacityViolation);
    CHECK(e.round() >= 0);
    const Transcript t = execute(gen_complete(3), schedule, inputs, field, 2);
    CHECK(t.instances == 8);
}

TEST_CASE("packing execution") {
    const PrimeField field(257);
    const PackingRun complete = execute_packing(gen_complete(3), pack_complete(3), 100, field, 7);
    CHECK(complete.scale == 2);
    CHECK(complete.streams == 3);
    CHECK(complete.rounds == 103);
    CHECK(complete.per_scaled_use == Rational(300, 103));
    CHECK(complete.throughput == Rational(150, 103));

    const PackingRun cycle = execute_packing(gen_cycle(3), pack_cycle(3), 50, field, 7, 4);
    CHECK(cycle.scale == 4);
    CHECK(cycle.streams == 3);
    CHECK(cycle.throughput == ratio(150, 4 * 53));

    const MacBcColumn single = pack_cycle(4).columns[0];
    Packing one;
    one.columns.push_back(single);
    one.weights.emplace_back(1);
    const PackingRun direct = execute_packing(single.as_network(), one, 10, field, 1);
    CHECK_THROWS_AS(execute_packing(gen_cycle(4), one, 10, field, 1), SimulationError);
    CHECK(direct.throughput == measured_rate(schedule_column(single, 10)));

    Packing too_heavy = pack_complete(3);
    too_heavy.weights[0] = 1;
    CHECK_THROWS_AS(execute_packing(gen_complete(3), too_heavy, 4, field, 1), SimulationError);
    CHECK_THROWS_AS(execute_packing(gen_complete(3), pack_complete(3), 4, field, 1, 3), Error);
}

TEST_CASE("transcript dump") {
    const Schedule schedule = schedule_column(pack_complete(2).columns[0], 1);
    const std::string text = dump(schedule);
    std::istringstream lines(text);
    std::string first;
    std::getline(lines, first);
    CHECK(first.rfind("n=1 1->0 len=1 desc=", 0) == 0);
    CHECK(text.find("decoded=ok rate=1/2") != std::string::npos);
}
