// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/cut.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "arb/error.hpp"

namespace arb {
namespace {

std::vector<NodeId> mask_to_subset(std::uint32_t mask, int k) {
    std::vector<NodeId> subset;
    for (NodeId v = 0; v < k; ++v) {
        if (mask & (1u << v)) subset.push_back(v);
    }
    return subset;
}

bool fits_in_int64(const Network& network) {
    // Any cut value is bounded by the total bandwidth.
    return network.total_bandwidth() < Integer(std::numeric_limits<std::int64_t>::max() / 2);
}

// Enumerates every nonempty proper subset and keeps the first minimum in
// lexicographic order of the sorted subset. `Value` is int64 or Integer.
template <typename Value, typename At>
std::pair<std::vector<NodeId>, Value> brute_force_min(int k, At at) {
    const std::uint32_t full = (1u << k) - 1;
    bool have = false;
    Value best{};
    std::vector<NodeId> best_subset;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        Value value{};
        for (NodeId i = 0; i < k; ++i) {
            if (!(mask & (1u << i))) continue;
            for (NodeId j = 0; j < k; ++j) {
                if (!(mask & (1u << j))) value += at(i, j);
            }
        }
        if (!have || value < best) {
            have = true;
            best = value;
            best_subset = mask_to_subset(mask, k);
        } else if (value == best) {
            auto subset = mask_to_subset(mask, k);
            if (subset < best_subset) best_subset = std::move(subset);
        }
    }
    return {std::move(best_subset), std::move(best)};
}

void check_subset(int k, std::span<const NodeId> subset) {
    std::vector<bool> inside(static_cast<std::size_t>(k), false);
    for (NodeId v : subset) {
        require(v >= 0 && v < k, "cut subset: node id out of range");
        require(!inside[static_cast<std::size_t>(v)], "cut subset: repeated node id");
        inside[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

Integer cut_capacity(const Network& network, std::span<const NodeId> subset) {
    const int k = network.node_count();
    check_subset(k, subset);
    std::vector<bool> inside(static_cast<std::size_t>(k), false);
    for (NodeId v : subset) inside[static_cast<std::size_t>(v)] = true;
    Integer value = 0;
    for (NodeId i = 0; i < k; ++i) {
        if (!inside[i]) continue;
        for (NodeId j = 0; j < k; ++j) {
            if (!inside[j]) value += network.bandwidth(i, j);
        }
    }
    return value;
}

Rational cut_capacity(const RationalNetwork& network, std::span<const NodeId> subset) {
    const int k = network.node_count;
    check_subset(k, subset);
    std::vector<bool> inside(static_cast<std::size_t>(k), false);
    for (NodeId v : subset) inside[static_cast<std::size_t>(v)] = true;
    Rational value = 0;
    for (NodeId i = 0; i < k; ++i) {
        if (!inside[i]) continue;
        for (NodeId j = 0; j < k; ++j) {
            if (!inside[j]) value += network.at(i, j);
        }
    }
    return value;
}

Cut cutset_bound_bruteforce(const Network& network) {
    const int k = network.node_count();
    if (k > kMaxBruteForceNodes) {
        fail(ErrorCode::kTooLarge, "brute-force cut enumeration limited to K <= " +
                                       std::to_string(kMaxBruteForceNodes) + "; use max-flow");
    }
    if (fits_in_int64(network)) {
        std::vector<std::int64_t> beta;
        beta.reserve(network.matrix().size());
        for (const Integer& b : network.matrix()) beta.push_back(b.get_si());
        auto [subset, value] = brute_force_min<std::int64_t>(
            k, [&](NodeId i, NodeId j) { return beta[network.index(i, j)]; });
        return {std::move(subset), Integer(static_cast<long>(value))};
    }
    auto [subset, value] = brute_force_min<Integer>(
        k, [&](NodeId i, NodeId j) -> const Integer& { return network.bandwidth(i, j); });
    return {std::move(subset), std::move(value)};
}

Rational cutset_bound_bruteforce(const RationalNetwork& network) {
    if (network.node_count > kMaxBruteForceNodes) {
        fail(ErrorCode::kTooLarge, "brute-force cut enumeration limited to K <= 20");
    }
    return brute_force_min<Rational>(network.node_count, [&](NodeId i, NodeId j) -> const Rational& {
               return network.at(i, j);
           }).second;
}

Flow max_flow(const Network& network, NodeId source, NodeId sink) {
    const int k = network.node_count();
    require(source >= 0 && source < k && sink >= 0 && sink < k, "max_flow: node id out of range");
    require(source != sink, "max_flow: source and sink must differ");

    std::vector<Integer> residual(network.matrix());
    auto at = [k](NodeId i, NodeId j) { return static_cast<std::size_t>(i) * k + j; };

    Flow flow{0, {}};
    std::vector<NodeId> parent(static_cast<std::size_t>(k));
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::queue<NodeId> frontier;
        frontier.push(source);
        while (!frontier.empty() && parent[sink] == -1) {
            NodeId u = frontier.front();
            frontier.pop();
            for (NodeId v = 0; v < k; ++v) {
                if (parent[v] == -1 && sgn(residual[at(u, v)]) > 0) {
                    parent[v] = u;
                    frontier.push(v);
                }
            }
        }
        if (parent[sink] == -1) break;

        Integer bottleneck = residual[at(parent[sink], sink)];
        for (NodeId v = sink; v != source; v = parent[v]) {
            if (residual[at(parent[v], v)] < bottleneck) bottleneck = residual[at(parent[v], v)];
        }
        for (NodeId v = sink; v != source; v = parent[v]) {
            residual[at(parent[v], v)] -= bottleneck;
            residual[at(v, parent[v])] += bottleneck;
        }
        flow.value += bottleneck;
    }
    for (NodeId v = 0; v < k; ++v) {
        if (parent[v] != -1) flow.source_side.push_back(v);
    }
    return flow;
}

Cut cutset_bound_maxflow(const Network& network) {
    const int k = network.node_count();
    bool have = false;
    Cut best;
    auto consider = [&](Flow flow) {
        if (!have || flow.value < best.value ||
            (flow.value == best.value && flow.source_side < best.subset)) {
            have = true;
            best = {std::move(flow.source_side), std::move(flow.value)};
        }
    };
    for (NodeId t = 1; t < k; ++t) {
        consider(max_flow(network, 0, t));
        consider(max_flow(network, t, 0));
    }
    return best;
}

Cut cutset_bound(const Network& network) {
    if (network.node_count() <= kDefaultBruteForceNodes) return cutset_bound_bruteforce(network);
    return cutset_bound_maxflow(network);
}

bool is_strongly_connected(const Network& network) {
    const int k = network.node_count();
    auto reaches_all = [k](auto has_link) {
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        std::vector<NodeId> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId v = 0; v < k; ++v) {
                if (!seen[v] && has_link(u, v)) {
                    seen[v] = true;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == k;
    };
    return reaches_all([&](NodeId u, NodeId v) { return network.has_link(u, v); }) &&
           reaches_all([&](NodeId u, NodeId v) { return network.has_link(v, u); });
}

}  // namespace arb
