// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_CUT_HPP
#define ARB_CUT_HPP

#include <span>
#include <vector>

#include "arb/network.hpp"

namespace arb {

/// A nonempty proper node subset and the bandwidth leaving it.
struct Cut {
    std::vector<NodeId> subset;  // sorted ascending
    Integer value;
};

/// Largest K accepted by exhaustive subset enumeration.
inline constexpr int kMaxBruteForceNodes = 20;
/// cutset_bound() enumerates subsets up to this K and uses max-flow above.
inline constexpr int kDefaultBruteForceNodes = 12;

/// Sum of bandwidth on links from `subset` to its complement.
Integer cut_capacity(const Network& network, std::span<const NodeId> subset);
Rational cut_capacity(const RationalNetwork& network, std::span<const NodeId> subset);

/// Minimum over all 2^K - 2 nonempty proper subsets. Ties go to the
/// lexicographically smallest sorted subset. Throws kTooLarge above
/// kMaxBruteForceNodes.
Cut cutset_bound_bruteforce(const Network& network);
/// Same enumeration over a rational bandwidth matrix.
Rational cutset_bound_bruteforce(const RationalNetwork& network);

struct Flow {
    Integer value;
    /// Nodes reachable from the source in the final residual graph.
    std::vector<NodeId> source_side;
};

/// Edmonds-Karp (shortest augmenting paths) with bandwidths as capacities.
Flow max_flow(const Network& network, NodeId source, NodeId sink);

/// min over t != 0 of maxflow(0, t) and maxflow(t, 0).
Cut cutset_bound_maxflow(const Network& network);

/// Brute force up to kDefaultBruteForceNodes, max-flow above.
Cut cutset_bound(const Network& network);

bool is_strongly_connected(const Network& network);

}  // namespace arb

#endif  // ARB_CUT_HPP
