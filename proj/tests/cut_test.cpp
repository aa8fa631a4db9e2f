// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "arb/cut.hpp"
#include "arb/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arb;

namespace {

// Smallest cut separating s from t, by enumerating every subset that holds
// s and not t.
Integer min_separating_cut(const Network& n, NodeId s, NodeId t) {
    const int k = n.node_count();
    Integer best = -1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (!(mask >> s & 1) || (mask >> t & 1)) continue;
        Integer value = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if ((mask >> i & 1) && !(mask >> j & 1)) value += n.bandwidth(i, j);
        if (best < 0 || value < best) best = value;
    }
    return best;
}

}  // namespace

TEST_CASE("brute-force cut-set bound") {
    CHECK(cutset_bound_bruteforce(gen_complete(4)).value == 3);
    CHECK(cutset_bound_bruteforce(gen_complete(4)).subset == std::vector<NodeId>{0});
    CHECK(cutset_bound_bruteforce(gen_cycle(5)).value == 1);
    CHECK(cutset_bound_bruteforce(gen_three_cycle(2, 3, 4)).value == 2);
    CHECK(cutset_bound_bruteforce(gen_three_cycle(4, 3, 2)).subset == std::vector<NodeId>{1, 2});
    CHECK(cutset_bound_bruteforce(gen_hypercube(3)).value == 3);

    const Network isolated = Network::from_matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
    const Cut cut = cutset_bound_bruteforce(isolated);
    CHECK(cut.value == 0);
    CHECK(cut_capacity(isolated, cut.subset) == 0);
}

TEST_CASE("brute force refuses large networks") {
    try {
        cutset_bound_bruteforce(gen_cycle(kMaxBruteForceNodes + 1));
        FAIL("expected kTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kTooLarge);
    }
}

TEST_CASE("max flow") {
    CHECK(max_flow(gen_ring(4), 0, 2).value == 2);
    CHECK(max_flow(gen_hypercube(3), 0, 7).value == 3);
    CHECK(max_flow(gen_complete(2), 0, 1).value == 1);
    CHECK(max_flow(gen_three_cycle(2, 3, 4), 1, 0).value == 3);
    CHECK_THROWS_AS(max_flow(gen_complete(3), 1, 1), Error);

    CHECK(min_separating_cut(gen_ring(4), 0, 2) == 2);
    CHECK(min_separating_cut(gen_hypercube(3), 0, 7) == 3);

    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Network n = testing::random_network(rng, 2 + trial % 7, 4);
        const NodeId s = static_cast<NodeId>(rng.below(n.node_count()));
        NodeId t = static_cast<NodeId>(rng.below(n.node_count() - 1));
        if (t >= s) ++t;
        const Flow flow = max_flow(n, s, t);
        CHECK(flow.value == min_separating_cut(n, s, t));
        CHECK(cut_capacity(n, flow.source_side) == flow.value);
    }
}

TEST_CASE("max-flow cut-set bound") {
    CHECK(cutset_bound_maxflow(gen_ring(6)).value == 2);
    CHECK(cutset_bound_maxflow(gen_hypercube(3)).value == 3);
    const Network isolated = Network::from_matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
    CHECK(cutset_bound_maxflow(isolated).value == 0);
    CHECK(cutset_bound(gen_hypercube(4)).value == 4);
}

TEST_CASE("both cut-set methods agree and report a minimizing subset") {
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 150; ++trial) {
        const Network n = testing::random_network(rng, 2 + trial % 9, 4);
        const Cut brute = cutset_bound_bruteforce(n);
        const Cut flow = cutset_bound_maxflow(n);
        CHECK(brute.value == flow.value);
        CHECK(cut_capacity(n, brute.subset) == brute.value);
        CHECK(cut_capacity(n, flow.subset) == flow.value);
        CHECK(is_strongly_connected(n) == (brute.value > 0));
    }
}

TEST_CASE("rational cut capacity") {
    const RationalNetwork half = [] {
        RationalNetwork r = to_rational(gen_three_cycle(1, 2, 3));
        for (auto& b : r.bandwidth) b /= 2;
        return r;
    }();
    CHECK(cutset_bound_bruteforce(half) == Rational(1, 2));
    const std::vector<NodeId> subset{1};
    CHECK(cut_capacity(half, subset) == 1);
    const std::vector<NodeId> repeated{1, 1};
    CHECK_THROWS_AS(cut_capacity(half, repeated), Error);
}
