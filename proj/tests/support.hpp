// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the test binaries: seeded random networks and the
// two-component 1-MAC-BC example used by the combination tests.

#ifndef ARB_TESTS_SUPPORT_HPP
#define ARB_TESTS_SUPPORT_HPP

#include <algorithm>
#include <vector>

#include "arb/arborescence.hpp"
#include "arb/cut.hpp"
#include "arb/network.hpp"
#include "arb/simulator.hpp"

namespace arb::testing {

/// Every off-diagonal entry uniform in [0, max_bandwidth].
inline Network random_network(SplitMix64& rng, int node_count, int max_bandwidth) {
    std::vector<Integer> matrix(static_cast<std::size_t>(node_count) * node_count);
    for (int i = 0; i < node_count; ++i) {
        for (int j = 0; j < node_count; ++j) {
            if (i != j) matrix[static_cast<std::size_t>(i) * node_count + j] = static_cast<long>(rng.below(max_bandwidth + 1));
        }
    }
    return Network::from_matrix(node_count, std::move(matrix));
}

/// Random network resampled until strongly connected. `density` is the
/// percentage of ordered pairs that get a link.
inline Network random_strong_network(SplitMix64& rng, int node_count, int max_bandwidth, int density = 50) {
    for (;;) {
        std::vector<Integer> matrix(static_cast<std::size_t>(node_count) * node_count);
        for (int i = 0; i < node_count; ++i) {
            for (int j = 0; j < node_count; ++j) {
                if (i == j || static_cast<int>(rng.below(100)) >= density) continue;
                matrix[static_cast<std::size_t>(i) * node_count + j] = static_cast<long>(1 + rng.below(max_bandwidth));
            }
        }
        Network network = Network::from_matrix(node_count, std::move(matrix));
        if (is_strongly_connected(network)) return network;
    }
}

/// Random rooted parent map on node_count nodes (root 0, parent[v] < v
/// after a random relabelling).
inline std::vector<NodeId> random_tree(SplitMix64& rng, int node_count) {
    std::vector<NodeId> order(node_count);
    for (int i = 0; i < node_count; ++i) order[i] = i;
    for (int i = node_count - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    std::vector<NodeId> parent(node_count, -1);
    for (int i = 1; i < node_count; ++i) parent[order[i]] = order[rng.below(i)];
    return parent;
}

inline Arborescence tree(NodeId root, Orientation orientation, std::vector<NodeId> parent) {
    return Arborescence{root, orientation, std::move(parent)};
}

/// Column on the complete network with independent random mac and bc
/// shapes sharing one root.
inline MacBcColumn random_column(SplitMix64& rng, int node_count) {
    const std::vector<NodeId> mac = random_tree(rng, node_count);
    const NodeId root = static_cast<NodeId>(std::find(mac.begin(), mac.end(), -1) - mac.begin());
    const std::vector<NodeId> shape = random_tree(rng, node_count);
    const NodeId shape_root = static_cast<NodeId>(std::find(shape.begin(), shape.end(), -1) - shape.begin());
    // Swap labels so the second shape is rooted where the first one is.
    auto relabel = [&](NodeId v) { return v == root ? shape_root : v == shape_root ? root : v; };
    std::vector<NodeId> bc(node_count);
    for (NodeId v = 0; v < node_count; ++v) bc[relabel(v)] = shape[v] == -1 ? -1 : relabel(shape[v]);
    return MacBcColumn(tree(root, Orientation::kIn, mac), tree(root, Orientation::kOut, std::move(bc)));
}

/// Components sharing cut-edge 0 -> 1 (the only link entering node 1).
/// first: rooted at 0, mac 1->0 2->0 3->2, bc 0->1 0->2 2->3, with links
/// 2->0 and 2->3 widened to 2 and 3.
/// second: rooted at 2, mac 1->2 0->2 3->2, bc 2->0 0->1 2->3, with link
/// 1->2 widened to 2.
inline MacBcColumn first_component_column() {
    return MacBcColumn(tree(0, Orientation::kIn, {-1, 0, 0, 2}), tree(0, Orientation::kOut, {-1, 0, 0, 2}));
}

inline MacBcColumn second_component_column() {
    return MacBcColumn(tree(2, Orientation::kIn, {2, 2, -1, 2}), tree(2, Orientation::kOut, {2, 0, -1, 2}));
}

inline Network widen(const MacBcColumn& column, std::initializer_list<Link> overrides) {
    std::vector<Integer> matrix = column.as_network().matrix();
    const int k = column.node_count();
    for (const Link& link : overrides) matrix[static_cast<std::size_t>(link.from) * k + link.to] = link.bandwidth;
    return Network::from_matrix(k, std::move(matrix));
}

inline Network first_component() { return widen(first_component_column(), {{2, 0, 2}, {2, 3, 3}}); }
inline Network second_component() { return widen(second_component_column(), {{1, 2, 2}}); }

}  // namespace arb::testing

#endif  // ARB_TESTS_SUPPORT_HPP
