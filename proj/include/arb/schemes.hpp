// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_SCHEMES_HPP
#define ARB_SCHEMES_HPP

#include <optional>
#include <span>
#include <vector>

#include "arb/packing.hpp"

namespace arb {

// Closed-form packings for the standard topologies. Each one is feasible in
// its generator's network and meets corollary_cap except the min-limited
// branch of the 3-cycle.

/// K star columns (mac: i -> k, bc: k -> j), each with weight 1/2.
Packing pack_complete(int node_count);
/// K columns; column k drops k -> k+1 from its Reduce path and (k-1) -> k
/// from its Broadcast path. Weights 1/(2(K - 1)).
Packing pack_cycle(int node_count);
/// pack_cycle on both orientations: 2K columns.
Packing pack_ring(int node_count);

/// Always three columns, in the order of their doubled link: 0 -> 1, 1 -> 2,
/// 2 -> 0 (bandwidth vectors (2;1;1), (1;2;1), (1;1;2)). Weights may be zero.
Packing pack_three_cycle(const Rational& a, const Rational& b, const Rational& c);

/// Level construction of one hypercube tree: level 0 is the root, level u
/// flips bit permutation[u - 1] of every node in levels 0..u-1. Bit
/// positions are 0-based and MSB first, matching hypercube_label().
struct HypercubeTreeSpec {
    int dimension = 0;
    NodeId root = 0;
    std::vector<int> permutation;
    std::vector<std::vector<NodeId>> levels;  // levels[u], |levels[u]| = 2^(u-1) for u >= 1
};

HypercubeTreeSpec hypercube_tree_spec(int dimension, NodeId root, std::span<const int> permutation);
/// Every node of level u joins its one-bit neighbour in earlier levels; the
/// Reduce tree points those edges at the root, the Broadcast tree away.
MacBcColumn hypercube_column(const HypercubeTreeSpec& spec);

inline constexpr int kMaxHypercubePackingDimension = 4;

/// 2^U * U! columns (every root, every bit order), each weighted
/// 1 / (2 (2^U - 1) (U - 1)!). U in [1, 4].
Packing pack_hypercube(int dimension);

/// Total beta multiplicity of a hypercube link over all pack_hypercube
/// columns, by direct scan.
Integer hypercube_edge_count(int dimension, Edge edge);

enum class CutEdgeKind {
    kOnlyIn,   // sole edge entering its head
    kOnlyOut,  // sole edge leaving its tail
};

struct CutEdge {
    Edge edge;
    CutEdgeKind kind = CutEdgeKind::kOnlyIn;

    friend bool operator==(const CutEdge&, const CutEdge&) = default;
};

/// Smallest head whose total in-multiplicity is 1, else smallest tail whose
/// out-multiplicity is 1. Throws kInternal if neither exists.
CutEdge find_cut_edge(const MacBcColumn& column);

/// Kind of `edge` as a cut-edge of `column`, if it is one.
std::optional<CutEdgeKind> cut_edge_kind(const MacBcColumn& column, Edge edge);

/// Witness column T showing the network is a 1-MAC-BC network with the
/// given cut-edge: same support as T, bandwidth >= beta_T, unit bandwidth on
/// the cut-edge, which is a cut-edge of T. nullopt if none exists.
std::optional<MacBcColumn> find_one_mac_bc_witness(const Network& network, Edge cut_edge);

struct OneMacBcCombination {
    RationalNetwork network;
    Rational rate;
    /// Witness columns with the component weights; feasible in `network`.
    Packing packing;
};

/// Weighted sum of 1-MAC-BC networks sharing a cut-edge. Its capacity is
/// exactly the sum of weights: the witness packing achieves it and the cut
/// at the cut-edge matches it. Throws kVerificationFailure if a component
/// has no witness or the checks fail.
OneMacBcCombination combine_one_mac_bc(std::span<const Network> components,
                                       std::span<const Rational> weights, Edge cut_edge);

}  // namespace arb

#endif  // ARB_SCHEMES_HPP
