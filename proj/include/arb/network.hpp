// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_NETWORK_HPP
#define ARB_NETWORK_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arb/numeric.hpp"

namespace arb {

/// Node index, 0-based.
using NodeId = int;

/// A directed link i -> j.
struct Edge {
    NodeId from = 0;
    NodeId to = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Link {
    NodeId from = 0;
    NodeId to = 0;
    Integer bandwidth;
};

/// A parallel-link network on K nodes. Entry (i, j) of the dense K x K
/// matrix is the number of field symbols link i -> j carries per network
/// use. Immutable once built.
class Network {
public:
    /// Builds a network from a list of links. Unlisted pairs get zero.
    /// Throws on K < 2, out-of-range ids, self-loops, negative bandwidth
    /// and duplicate (from, to) pairs.
    static Network from_links(int node_count, std::span<const Link> links);

    /// Builds directly from a row-major K x K matrix (diagonal must be 0).
    static Network from_matrix(int node_count, std::vector<Integer> bandwidth);

    int node_count() const noexcept { return node_count_; }
    const Integer& bandwidth(NodeId from, NodeId to) const {
        return bandwidth_[index(from, to)];
    }
    bool has_link(NodeId from, NodeId to) const { return sgn(bandwidth(from, to)) > 0; }

    /// Positive-bandwidth links sorted by (from, to).
    std::vector<Edge> support() const;
    Integer total_bandwidth() const;

    Network reversed() const;
    Network scaled(const Integer& factor) const;

    std::size_t index(NodeId from, NodeId to) const {
        return static_cast<std::size_t>(from) * node_count_ + to;
    }
    const std::vector<Integer>& matrix() const noexcept { return bandwidth_; }

    friend bool operator==(const Network& a, const Network& b) {
        return a.node_count_ == b.node_count_ && a.bandwidth_ == b.bandwidth_;
    }

private:
    Network(int node_count, std::vector<Integer> bandwidth)
        : node_count_(node_count), bandwidth_(std::move(bandwidth)) {}

    int node_count_;
    std::vector<Integer> bandwidth_;
};

/// Bandwidth matrix with rational entries; produced by weighted
/// combinations of networks and used only for analysis.
struct RationalNetwork {
    int node_count = 0;
    std::vector<Rational> bandwidth;

    const Rational& at(NodeId from, NodeId to) const {
        return bandwidth[static_cast<std::size_t>(from) * node_count + to];
    }
    bool is_integral() const;
    /// Throws if some entry is not an integer.
    Network to_network() const;
};

RationalNetwork to_rational(const Network& network);

/// Entrywise weighted sum. All networks must share K; weights must be >= 0.
RationalNetwork combine(std::span<const Network> networks, std::span<const Rational> weights);

// Topology generators.
Network gen_complete(int node_count);
/// Directed cycle k -> (k + 1) mod K with unit links.
Network gen_cycle(int node_count);
/// Both orientations of the K-cycle.
Network gen_ring(int node_count);
/// 0 -> 1 carries a, 1 -> 2 carries b, 2 -> 0 carries c.
Network gen_three_cycle(const Integer& a, const Integer& b, const Integer& c);
/// 2^U nodes, unit links between labels differing in exactly one bit.
Network gen_hypercube(int dimension);
/// `parent[v]` is v's tree neighbour (-1 for exactly one root);
/// `bandwidth[v]` applies to both directions of the edge v -- parent[v].
Network gen_bidirected_tree(std::span<const NodeId> parent, std::span<const Integer> bandwidth);

/// Text format: `K <n>` then `<from> <to> <beta>` lines; `#` comments.
std::string serialize(const Network& network);
Network parse_network(std::string_view text);
Network load_network(const std::string& path);
void save_network(const Network& network, const std::string& path);

/// MSB-first bit-string label of a hypercube node, e.g. 1 -> "001" for U = 3.
std::string hypercube_label(NodeId node, int dimension);

}  // namespace arb

#endif  // ARB_NETWORK_HPP
