// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/arborescence.hpp"

#include <algorithm>

#include "arb/error.hpp"

namespace arb {

std::vector<Edge> Arborescence::edges() const {
    std::vector<Edge> out;
    out.reserve(parent.size());
    for (NodeId v = 0; v < node_count(); ++v) {
        if (v == root) continue;
        if (orientation == Orientation::kIn) {
            out.push_back({v, parent[v]});
        } else {
            out.push_back({parent[v], v});
        }
    }
    return out;
}

Arborescence Arborescence::reversed() const {
    Arborescence out = *this;
    out.orientation = orientation == Orientation::kIn ? Orientation::kOut : Orientation::kIn;
    return out;
}

int Arborescence::depth(NodeId v) const {
    int d = 0;
    for (NodeId at = v; at != root; at = parent[at]) {
        if (++d > node_count()) fail(ErrorCode::kInternal, "arborescence parent map has a cycle");
    }
    return d;
}

bool is_valid_arborescence(const Arborescence& tree, const Network* host) {
    const int k = tree.node_count();
    if (k < 2 || tree.root < 0 || tree.root >= k || tree.parent[tree.root] != -1) return false;
    if (host && host->node_count() != k) return false;
    for (NodeId v = 0; v < k; ++v) {
        if (v == tree.root) continue;
        NodeId p = tree.parent[v];
        if (p < 0 || p >= k || p == v) return false;
        NodeId at = v;
        for (int steps = 0; at != tree.root; ++steps) {
            if (steps >= k || tree.parent[at] < 0) return false;
            at = tree.parent[at];
        }
    }
    if (host) {
        for (const Edge& e : tree.edges()) {
            if (!host->has_link(e.from, e.to)) return false;
        }
    }
    return true;
}

MacBcColumn::MacBcColumn(Arborescence mac, Arborescence bc) : mac_(std::move(mac)), bc_(std::move(bc)) {
    require(mac_.orientation == Orientation::kIn, "column: mac tree must be an IN arborescence");
    require(bc_.orientation == Orientation::kOut, "column: bc tree must be an OUT arborescence");
    require(mac_.root == bc_.root, "column: mac and bc trees must share the root");
    require(mac_.node_count() == bc_.node_count(), "column: trees differ in node count");
    require(is_valid_arborescence(mac_) && is_valid_arborescence(bc_), "column: invalid tree");
    const auto k = static_cast<std::size_t>(node_count());
    beta_.assign(k * k, 0);
    for (const Edge& e : mac_.edges()) ++beta_[e.from * k + e.to];
    for (const Edge& e : bc_.edges()) ++beta_[e.from * k + e.to];
}

Network MacBcColumn::as_network() const {
    std::vector<Integer> beta(beta_.begin(), beta_.end());
    return Network::from_matrix(node_count(), std::move(beta));
}

namespace {

bool link_for(const Network& network, Orientation orientation, NodeId child, NodeId parent) {
    return orientation == Orientation::kIn ? network.has_link(child, parent)
                                           : network.has_link(parent, child);
}

// Assigns parents node by node in increasing id order, trying candidate
// parents in increasing order, and prunes any assignment closing a cycle.
void enumerate_from(const Network& network, Orientation orientation, NodeId root, NodeId v,
                    std::vector<NodeId>& parent, std::vector<Arborescence>& out) {
    const int k = network.node_count();
    if (v == k) {
        out.push_back({root, orientation, parent});
        return;
    }
    if (v == root) {
        enumerate_from(network, orientation, root, v + 1, parent, out);
        return;
    }
    for (NodeId p = 0; p < k; ++p) {
        if (p == v || !link_for(network, orientation, v, p)) continue;
        parent[v] = p;
        // Every earlier assignment is acyclic, so any new cycle passes
        // through v; follow assigned parents from v until they run out.
        bool cycle = false;
        for (NodeId at = p; at != -1; at = parent[at]) {
            if (at == v) {
                cycle = true;
                break;
            }
        }
        if (!cycle) enumerate_from(network, orientation, root, v + 1, parent, out);
        parent[v] = -1;
    }
}

}  // namespace

std::vector<Arborescence> enumerate_arborescences(const Network& network, NodeId root,
                                                  Orientation orientation) {
    const int k = network.node_count();
    require(root >= 0 && root < k, "root out of range");
    std::vector<NodeId> parent(static_cast<std::size_t>(k), -1);
    std::vector<Arborescence> candidates;
    enumerate_from(network, orientation, root, 0, parent, candidates);
    std::vector<Arborescence> out;
    out.reserve(candidates.size());
    for (auto& tree : candidates) {
        if (is_valid_arborescence(tree)) out.push_back(std::move(tree));
    }
    return out;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer previous = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            for (std::size_t j = col + 1; j < n; ++j) {
                m[row][j] = (m[row][j] * m[col][col] - m[row][col] * m[col][j]) / previous;
            }
            m[row][col] = 0;
        }
        previous = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Integer count_arborescences(const Network& network, NodeId root, Orientation orientation) {
    const int k = network.node_count();
    require(root >= 0 && root < k, "root out of range");
    // IN trees: each non-root node has exactly one outgoing tree edge, so
    // the Laplacian uses out-degrees. OUT trees use in-degrees.
    std::vector<std::vector<Integer>> laplacian(static_cast<std::size_t>(k),
                                                std::vector<Integer>(static_cast<std::size_t>(k), 0));
    for (NodeId i = 0; i < k; ++i) {
        for (NodeId j = 0; j < k; ++j) {
            if (i == j || !network.has_link(i, j)) continue;
            laplacian[i][j] -= 1;
            if (orientation == Orientation::kIn) {
                laplacian[i][i] += 1;
            } else {
                laplacian[j][j] += 1;
            }
        }
    }
    std::vector<std::vector<Integer>> reduced;
    for (NodeId i = 0; i < k; ++i) {
        if (i == root) continue;
        std::vector<Integer> row;
        for (NodeId j = 0; j < k; ++j) {
            if (j != root) row.push_back(laplacian[i][j]);
        }
        reduced.push_back(std::move(row));
    }
    return bareiss_determinant(std::move(reduced));
}

Integer count_columns(const Network& network) {
    Integer total = 0;
    for (NodeId r = 0; r < network.node_count(); ++r) {
        total += count_arborescences(network, r, Orientation::kIn) *
                 count_arborescences(network, r, Orientation::kOut);
    }
    return total;
}

std::size_t for_each_column(const Network& network,
                            const std::function<bool(const MacBcColumn&)>& visit,
                            std::optional<NodeId> only_root, std::size_t cap) {
    const int k = network.node_count();
    Integer expected = 0;
    for (NodeId r = 0; r < k; ++r) {
        if (only_root && *only_root != r) continue;
        expected += count_arborescences(network, r, Orientation::kIn) *
                    count_arborescences(network, r, Orientation::kOut);
    }
    if (expected > Integer(static_cast<unsigned long>(cap))) {
        fail(ErrorCode::kTooLarge, "network has " + expected.get_str() +
                                       " MAC-BC columns, above the cap of " + std::to_string(cap));
    }
    std::size_t visited = 0;
    for (NodeId r = 0; r < k; ++r) {
        if (only_root && *only_root != r) continue;
        const auto in_trees = enumerate_arborescences(network, r, Orientation::kIn);
        if (in_trees.empty()) continue;
        const auto out_trees = enumerate_arborescences(network, r, Orientation::kOut);
        for (const auto& mac : in_trees) {
            for (const auto& bc : out_trees) {
                ++visited;
                if (!visit(MacBcColumn(mac, bc))) return visited;
            }
        }
    }
    return visited;
}

std::vector<MacBcColumn> enumerate_columns(const Network& network, std::optional<NodeId> only_root,
                                           std::size_t cap) {
    std::vector<MacBcColumn> out;
    for_each_column(
        network,
        [&](const MacBcColumn& column) {
            out.push_back(column);
            return true;
        },
        only_root, cap);
    return out;
}

namespace {

struct WeightedEdge {
    int from;
    int to;
    Rational cost;
    int id;
};

// Minimum spanning out-arborescence on n nodes by recursive cycle
// contraction. Returns, for each non-root node, the index into `edges` of
// its chosen incoming edge (-1 for the root), or nullopt if some node is
// unreachable.
std::optional<std::vector<int>> edmonds(int n, int root, const std::vector<WeightedEdge>& edges) {
    std::vector<int> best(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& edge = edges[e];
        if (edge.from == edge.to || edge.to == root) continue;
        int& slot = best[edge.to];
        if (slot == -1 || edge.cost < edges[slot].cost ||
            (edge.cost == edges[slot].cost && edge.id < edges[slot].id)) {
            slot = e;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v != root && best[v] == -1) return std::nullopt;
    }

    // Find a cycle among the chosen edges, scanning start nodes in order.
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on path, 2 done
    std::vector<int> cycle;
    for (int start = 0; start < n && cycle.empty(); ++start) {
        std::vector<int> path;
        int v = start;
        while (v != root && state[v] == 0) {
            state[v] = 1;
            path.push_back(v);
            v = edges[best[v]].from;
        }
        if (v != root && state[v] == 1) {
            auto it = std::find(path.begin(), path.end(), v);
            cycle.assign(it, path.end());
        }
        for (int p : path) state[p] = 2;
    }
    if (cycle.empty()) return best;

    std::vector<bool> in_cycle(static_cast<std::size_t>(n), false);
    for (int v : cycle) in_cycle[v] = true;
    std::vector<int> relabel(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (!in_cycle[v]) relabel[v] = next++;
    }
    const int contracted = next;
    for (int v : cycle) relabel[v] = contracted;

    std::vector<WeightedEdge> reduced;
    std::vector<int> origin;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const auto& edge = edges[e];
        if (in_cycle[edge.from] && in_cycle[edge.to]) continue;
        Rational cost = edge.cost;
        if (in_cycle[edge.to]) cost -= edges[best[edge.to]].cost;
        reduced.push_back({relabel[edge.from], relabel[edge.to], std::move(cost), edge.id});
        origin.push_back(e);
    }
    auto inner = edmonds(contracted + 1, relabel[root], reduced);
    if (!inner) return std::nullopt;

    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    for (int r = 0; r <= contracted; ++r) {
        if ((*inner)[r] == -1) continue;
        const int e = origin[(*inner)[r]];
        chosen[edges[e].to] = e;
    }
    for (int v : cycle) {
        if (chosen[v] == -1) chosen[v] = best[v];
    }
    return chosen;
}

}  // namespace

std::optional<CostedArborescence> min_cost_arborescence(const Network& network, NodeId root,
                                                        Orientation orientation,
                                                        std::span<const Rational> costs) {
    const int k = network.node_count();
    require(root >= 0 && root < k, "root out of range");
    require(costs.size() == static_cast<std::size_t>(k) * k, "cost matrix must be K x K");
    // An IN tree of the network is an OUT tree of the reversed network with
    // the same parent map, so both orientations reduce to the OUT case.
    std::vector<WeightedEdge> edges;
    for (const Edge& e : network.support()) {
        const int id = e.from * k + e.to;
        if (orientation == Orientation::kOut) {
            edges.push_back({e.from, e.to, costs[id], id});
        } else {
            edges.push_back({e.to, e.from, costs[id], id});
        }
    }
    auto chosen = edmonds(k, root, edges);
    if (!chosen) return std::nullopt;
    CostedArborescence result{{root, orientation, std::vector<NodeId>(static_cast<std::size_t>(k), -1)}, 0};
    for (NodeId v = 0; v < k; ++v) {
        if (v == root) continue;
        const auto& edge = edges[(*chosen)[v]];
        result.tree.parent[v] = edge.from;
        result.cost += edge.cost;
    }
    return result;
}

}  // namespace arb
