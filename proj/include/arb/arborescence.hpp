// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_ARBORESCENCE_HPP
#define ARB_ARBORESCENCE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arb/network.hpp"

namespace arb {

/// IN: every edge points toward the root (v -> parent[v]), the Reduce
/// direction. OUT: every edge points away from it (parent[v] -> v).
enum class Orientation { kIn, kOut };

/// Spanning arborescence stored as a parent map; parent[root] == -1.
struct Arborescence {
    NodeId root = 0;
    Orientation orientation = Orientation::kIn;
    std::vector<NodeId> parent;

    int node_count() const noexcept { return static_cast<int>(parent.size()); }
    /// The K - 1 directed edges, ordered by non-root endpoint v.
    std::vector<Edge> edges() const;
    /// Same parent map with every edge reversed (IN <-> OUT).
    Arborescence reversed() const;
    /// Distance from v to the root along parent pointers.
    int depth(NodeId v) const;

    friend bool operator==(const Arborescence&, const Arborescence&) = default;
};

/// Checks the parent map spans all nodes and reaches the root; when `host`
/// is given, every edge must also have positive bandwidth there.
bool is_valid_arborescence(const Arborescence& tree, const Network* host = nullptr);

/// One Reduce tree and one Broadcast tree sharing a root. beta(i, j) counts
/// how many of the two trees use i -> j, so entries are 0, 1 or 2 and sum
/// to 2(K - 1).
class MacBcColumn {
public:
    /// Throws unless mac is IN, bc is OUT, both valid and share the root.
    MacBcColumn(Arborescence mac, Arborescence bc);

    NodeId root() const noexcept { return mac_.root; }
    int node_count() const noexcept { return mac_.node_count(); }
    const Arborescence& mac() const noexcept { return mac_; }
    const Arborescence& bc() const noexcept { return bc_; }
    int beta(NodeId from, NodeId to) const {
        return beta_[static_cast<std::size_t>(from) * node_count() + to];
    }
    const std::vector<int>& beta_matrix() const noexcept { return beta_; }
    /// The column as a standalone network with bandwidth beta.
    Network as_network() const;

    friend bool operator==(const MacBcColumn& a, const MacBcColumn& b) {
        return a.mac_ == b.mac_ && a.bc_ == b.bc_;
    }

private:
    Arborescence mac_;
    Arborescence bc_;
    std::vector<int> beta_;
};

/// All arborescences of the given root and orientation over links with
/// positive bandwidth, duplicate-free, in lexicographic order of the
/// parent vector.
std::vector<Arborescence> enumerate_arborescences(const Network& network, NodeId root,
                                                  Orientation orientation);

/// Directed matrix-tree theorem: determinant of the reduced Laplacian of
/// the support digraph, computed exactly by fraction-free elimination.
Integer count_arborescences(const Network& network, NodeId root, Orientation orientation);

/// Sum over roots of (#IN trees) x (#OUT trees).
Integer count_columns(const Network& network);

inline constexpr std::size_t kDefaultColumnCap = 200000;

/// Streams every (root, mac, bc) triple over the support in order root,
/// mac, bc. Visiting stops early when `visit` returns false. Throws
/// kTooLarge when the stream would exceed `cap` columns.
std::size_t for_each_column(const Network& network,
                            const std::function<bool(const MacBcColumn&)>& visit,
                            std::optional<NodeId> only_root = std::nullopt,
                            std::size_t cap = kDefaultColumnCap);

std::vector<MacBcColumn> enumerate_columns(const Network& network,
                                           std::optional<NodeId> only_root = std::nullopt,
                                           std::size_t cap = kDefaultColumnCap);

struct CostedArborescence {
    Arborescence tree;
    Rational cost;
};

/// Chu-Liu/Edmonds minimum-cost arborescence over the support. `costs` is a
/// row-major K x K matrix; entries off the support are ignored. Ties go to
/// the smallest edge id from * K + to. Returns nullopt when no spanning
/// arborescence exists.
std::optional<CostedArborescence> min_cost_arborescence(const Network& network, NodeId root,
                                                        Orientation orientation,
                                                        std::span<const Rational> costs);

}  // namespace arb

#endif  // ARB_ARBORESCENCE_HPP
