// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/schemes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "arb/cut.hpp"
#include "arb/error.hpp"

namespace arb {
namespace {

Arborescence tree(NodeId root, Orientation orientation, std::vector<NodeId> parent) {
    return {root, orientation, std::move(parent)};
}

// Column on the directed cycle 0 -> 1 -> ... -> K-1 -> 0 (or its reverse
// when step == -1) rooted at k: the Reduce path ends at k, the Broadcast
// path starts at k.
MacBcColumn cycle_column(int k_nodes, NodeId root, int step) {
    std::vector<NodeId> mac(static_cast<std::size_t>(k_nodes), -1);
    std::vector<NodeId> bc(static_cast<std::size_t>(k_nodes), -1);
    for (NodeId v = 0; v < k_nodes; ++v) {
        if (v == root) continue;
        mac[v] = (v + step + k_nodes) % k_nodes;
        bc[v] = (v - step + k_nodes) % k_nodes;
    }
    return MacBcColumn(tree(root, Orientation::kIn, std::move(mac)),
                       tree(root, Orientation::kOut, std::move(bc)));
}

Integer factorial(int n) {
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

int weighted_in_degree(const MacBcColumn& column, NodeId v) {
    int total = 0;
    for (NodeId i = 0; i < column.node_count(); ++i) total += column.beta(i, v);
    return total;
}

int weighted_out_degree(const MacBcColumn& column, NodeId v) {
    int total = 0;
    for (NodeId j = 0; j < column.node_count(); ++j) total += column.beta(v, j);
    return total;
}

}  // namespace

Packing pack_complete(int node_count) {
    require(node_count >= 2, "complete packing needs K >= 2");
    Packing packing;
    for (NodeId k = 0; k < node_count; ++k) {
        std::vector<NodeId> star(static_cast<std::size_t>(node_count), k);
        star[k] = -1;
        packing.columns.emplace_back(tree(k, Orientation::kIn, star), tree(k, Orientation::kOut, star));
        packing.weights.emplace_back(1, 2);
    }
    return packing;
}

Packing pack_cycle(int node_count) {
    require(node_count >= 3, "cycle packing needs K >= 3");
    Packing packing;
    for (NodeId k = 0; k < node_count; ++k) {
        packing.columns.push_back(cycle_column(node_count, k, +1));
        packing.weights.emplace_back(1, 2 * (node_count - 1));
    }
    return packing;
}

Packing pack_ring(int node_count) {
    require(node_count >= 3, "ring packing needs K >= 3");
    Packing packing;
    for (int step : {+1, -1}) {
        for (NodeId k = 0; k < node_count; ++k) {
            packing.columns.push_back(cycle_column(node_count, k, step));
            packing.weights.emplace_back(1, 2 * (node_count - 1));
        }
    }
    return packing;
}

Packing pack_three_cycle(const Rational& a, const Rational& b, const Rational& c) {
    require(sgn(a) > 0 && sgn(b) > 0 && sgn(c) > 0, "3-cycle bandwidths must be positive");
    const Rational bw[3] = {a, b, c};

    // The column doubling link m -> m+1 is the one rooted at m - 1.
    Packing packing;
    for (int m = 0; m < 3; ++m) {
        packing.columns.push_back(cycle_column(3, (m + 2) % 3, +1));
        packing.weights.emplace_back(0);
    }

    const Rational quarter_sum = (a + b + c) / 4;
    const int m = static_cast<int>(std::min_element(bw, bw + 3) - bw);
    if (bw[m] <= quarter_sum) {
        // Rotate so the minimum sits on the first link; only minimality of
        // that link is needed for feasibility.
        const Rational& lo = bw[m];
        const Rational& last = bw[(m + 2) % 3];
        if (last >= 2 * lo) {
            packing.weights[(m + 2) % 3] = lo;
        } else {
            packing.weights[(m + 1) % 3] = 2 * lo - last;
            packing.weights[(m + 2) % 3] = last - lo;
        }
    } else {
        for (int k = 0; k < 3; ++k) {
            packing.weights[k] = (3 * bw[k] - bw[(k + 1) % 3] - bw[(k + 2) % 3]) / 4;
        }
    }
    return packing;
}

HypercubeTreeSpec hypercube_tree_spec(int dimension, NodeId root, std::span<const int> permutation) {
    require(dimension >= 1 && dimension <= 16, "hypercube dimension out of range");
    const int k = 1 << dimension;
    require(root >= 0 && root < k, "hypercube root out of range");
    require(static_cast<int>(permutation.size()) == dimension, "permutation length must equal U");
    std::vector<int> sorted(permutation.begin(), permutation.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < dimension; ++i) require(sorted[i] == i, "not a permutation of bit positions");

    HypercubeTreeSpec spec{dimension, root, {permutation.begin(), permutation.end()}, {{root}}};
    std::vector<NodeId> seen{root};
    for (int u = 1; u <= dimension; ++u) {
        const int mask = 1 << (dimension - 1 - permutation[u - 1]);
        std::vector<NodeId> level;
        for (NodeId x : seen) level.push_back(x ^ mask);
        seen.insert(seen.end(), level.begin(), level.end());
        spec.levels.push_back(std::move(level));
    }
    return spec;
}

MacBcColumn hypercube_column(const HypercubeTreeSpec& spec) {
    const int k = 1 << spec.dimension;
    std::vector<NodeId> parent(static_cast<std::size_t>(k), -1);
    for (int u = 1; u <= spec.dimension; ++u) {
        const int mask = 1 << (spec.dimension - 1 - spec.permutation[u - 1]);
        for (NodeId x : spec.levels[u]) parent[x] = x ^ mask;
    }
    return MacBcColumn(tree(spec.root, Orientation::kIn, parent),
                       tree(spec.root, Orientation::kOut, parent));
}

Packing pack_hypercube(int dimension) {
    require(dimension >= 1 && dimension <= kMaxHypercubePackingDimension,
            "hypercube packing supports U in [1, 4]");
    const int k = 1 << dimension;
    const Rational weight(Integer(1), 2 * ((Integer(1) << dimension) - 1) * factorial(dimension - 1));
    Packing packing;
    for (NodeId r = 0; r < k; ++r) {
        std::vector<int> permutation(static_cast<std::size_t>(dimension));
        std::iota(permutation.begin(), permutation.end(), 0);
        do {
            packing.columns.push_back(hypercube_column(hypercube_tree_spec(dimension, r, permutation)));
            packing.weights.push_back(weight);
        } while (std::next_permutation(permutation.begin(), permutation.end()));
    }
    return packing;
}

Integer hypercube_edge_count(int dimension, Edge edge) {
    require(dimension >= 1 && dimension <= kMaxHypercubePackingDimension,
            "hypercube edge count supports U in [1, 4]");
    const int k = 1 << dimension;
    require(edge.from >= 0 && edge.from < k && edge.to >= 0 && edge.to < k &&
                std::has_single_bit(static_cast<unsigned>(edge.from ^ edge.to)),
            "not a hypercube link");
    Integer count = 0;
    for (const auto& column : pack_hypercube(dimension).columns) count += column.beta(edge.from, edge.to);
    return count;
}

std::optional<CutEdgeKind> cut_edge_kind(const MacBcColumn& column, Edge edge) {
    if (column.beta(edge.from, edge.to) != 1) return std::nullopt;
    if (weighted_in_degree(column, edge.to) == 1) return CutEdgeKind::kOnlyIn;
    if (weighted_out_degree(column, edge.from) == 1) return CutEdgeKind::kOnlyOut;
    return std::nullopt;
}

CutEdge find_cut_edge(const MacBcColumn& column) {
    const int k = column.node_count();
    for (NodeId head = 0; head < k; ++head) {
        if (weighted_in_degree(column, head) != 1) continue;
        for (NodeId tail = 0; tail < k; ++tail) {
            if (column.beta(tail, head) == 1) return {{tail, head}, CutEdgeKind::kOnlyIn};
        }
    }
    for (NodeId tail = 0; tail < k; ++tail) {
        if (weighted_out_degree(column, tail) != 1) continue;
        for (NodeId head = 0; head < k; ++head) {
            if (column.beta(tail, head) == 1) return {{tail, head}, CutEdgeKind::kOnlyOut};
        }
    }
    fail(ErrorCode::kInternal, "MAC-BC column without a cut-edge");
}

std::optional<MacBcColumn> find_one_mac_bc_witness(const Network& network, Edge cut_edge) {
    const int k = network.node_count();
    if (cut_edge.from < 0 || cut_edge.from >= k || cut_edge.to < 0 || cut_edge.to >= k) {
        return std::nullopt;
    }
    if (network.bandwidth(cut_edge.from, cut_edge.to) != 1) return std::nullopt;
    const auto support = network.support();
    // A column has at most 2(K - 1) distinct links.
    if (support.size() > static_cast<std::size_t>(2 * (k - 1))) return std::nullopt;

    std::optional<MacBcColumn> witness;
    for_each_column(network, [&](const MacBcColumn& column) {
        for (NodeId i = 0; i < k; ++i) {
            for (NodeId j = 0; j < k; ++j) {
                const int beta = column.beta(i, j);
                if ((beta > 0) != network.has_link(i, j)) return true;
                if (network.bandwidth(i, j) < beta) return true;
            }
        }
        if (!cut_edge_kind(column, cut_edge)) return true;
        witness = column;
        return false;
    });
    return witness;
}

OneMacBcCombination combine_one_mac_bc(std::span<const Network> components,
                                       std::span<const Rational> weights, Edge cut_edge) {
    require(!components.empty(), "need at least one component");
    require(components.size() == weights.size(), "components and weights differ in length");
    OneMacBcCombination out;
    for (std::size_t u = 0; u < components.size(); ++u) {
        auto witness = find_one_mac_bc_witness(components[u], cut_edge);
        if (!witness) {
            fail(ErrorCode::kVerificationFailure,
                 "component " + std::to_string(u) + " is not a 1-MAC-BC network with cut-edge " +
                     std::to_string(cut_edge.from) + "->" + std::to_string(cut_edge.to));
        }
        out.packing.columns.push_back(std::move(*witness));
        out.packing.weights.push_back(weights[u]);
    }
    out.network = combine(components, weights);
    out.rate = out.packing.rate();

    const int k = out.network.node_count;
    const auto load = out.packing.load(k);
    for (std::size_t e = 0; e < load.size(); ++e) {
        if (load[e] > out.network.bandwidth[e]) {
            fail(ErrorCode::kVerificationFailure, "witness packing exceeds combined bandwidth");
        }
    }
    // The cut-edge must stay the only link into its head (or out of its
    // tail) after combining; that cut then carries exactly the summed weight.
    bool only_in = true;
    bool only_out = true;
    for (NodeId v = 0; v < k; ++v) {
        if (v != cut_edge.from && sgn(out.network.at(v, cut_edge.to)) > 0) only_in = false;
        if (v != cut_edge.to && sgn(out.network.at(cut_edge.from, v)) > 0) only_out = false;
    }
    if (!only_in && !only_out) {
        fail(ErrorCode::kVerificationFailure, "components disagree on the cut-edge side");
    }
    std::vector<NodeId> side;
    for (NodeId v = 0; v < k; ++v) {
        if (only_in ? v != cut_edge.to : v == cut_edge.from) side.push_back(v);
    }
    if (cut_capacity(out.network, side) != out.rate) {
        fail(ErrorCode::kVerificationFailure, "cut at the cut-edge differs from the summed weight");
    }
    return out;
}

}  // namespace arb
