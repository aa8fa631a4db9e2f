// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/network.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "arb/error.hpp"
#include "io.hpp"

namespace arb {

Network Network::from_links(int node_count, std::span<const Link> links) {
    require(node_count >= 2, "network needs at least 2 nodes, got " + std::to_string(node_count));
    const auto k = static_cast<std::size_t>(node_count);
    std::vector<Integer> beta(k * k, 0);
    std::vector<bool> seen(k * k, false);
    for (const Link& link : links) {
        const std::string where =
            "link " + std::to_string(link.from) + "->" + std::to_string(link.to);
        require(link.from >= 0 && link.from < node_count && link.to >= 0 && link.to < node_count,
                where + ": node id out of range");
        require(link.from != link.to, where + ": self-loop");
        require(sgn(link.bandwidth) >= 0, where + ": negative bandwidth");
        const std::size_t at = static_cast<std::size_t>(link.from) * k + link.to;
        require(!seen[at], where + ": duplicate link");
        seen[at] = true;
        beta[at] = link.bandwidth;
    }
    return Network(node_count, std::move(beta));
}

Network Network::from_matrix(int node_count, std::vector<Integer> bandwidth) {
    require(node_count >= 2, "network needs at least 2 nodes");
    const auto k = static_cast<std::size_t>(node_count);
    require(bandwidth.size() == k * k, "bandwidth matrix has wrong size");
    for (std::size_t i = 0; i < k; ++i) {
        require(bandwidth[i * k + i] == 0, "diagonal entries must be zero");
    }
    for (const Integer& b : bandwidth) require(sgn(b) >= 0, "negative bandwidth");
    return Network(node_count, std::move(bandwidth));
}

std::vector<Edge> Network::support() const {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < node_count_; ++i) {
        for (NodeId j = 0; j < node_count_; ++j) {
            if (has_link(i, j)) edges.push_back({i, j});
        }
    }
    return edges;
}

Integer Network::total_bandwidth() const {
    Integer total = 0;
    for (const Integer& b : bandwidth_) total += b;
    return total;
}

Network Network::reversed() const {
    std::vector<Integer> beta(bandwidth_.size());
    for (NodeId i = 0; i < node_count_; ++i) {
        for (NodeId j = 0; j < node_count_; ++j) beta[index(j, i)] = bandwidth(i, j);
    }
    return Network(node_count_, std::move(beta));
}

Network Network::scaled(const Integer& factor) const {
    require(sgn(factor) >= 0, "scale factor must be nonnegative");
    std::vector<Integer> beta(bandwidth_);
    for (Integer& b : beta) b *= factor;
    return Network(node_count_, std::move(beta));
}

bool RationalNetwork::is_integral() const {
    return std::all_of(bandwidth.begin(), bandwidth.end(),
                       [](const Rational& b) { return b.get_den() == 1; });
}

Network RationalNetwork::to_network() const {
    require(is_integral(), "network has non-integer bandwidth");
    std::vector<Integer> beta;
    beta.reserve(bandwidth.size());
    for (const Rational& b : bandwidth) beta.emplace_back(b.get_num());
    return Network::from_matrix(node_count, std::move(beta));
}

RationalNetwork to_rational(const Network& network) {
    RationalNetwork out{network.node_count(), {}};
    out.bandwidth.reserve(network.matrix().size());
    for (const Integer& b : network.matrix()) out.bandwidth.emplace_back(b);
    return out;
}

RationalNetwork combine(std::span<const Network> networks, std::span<const Rational> weights) {
    require(!networks.empty(), "combine needs at least one network");
    require(networks.size() == weights.size(), "combine: networks and weights differ in length");
    const int k = networks.front().node_count();
    RationalNetwork out{k, std::vector<Rational>(static_cast<std::size_t>(k) * k, 0)};
    for (std::size_t n = 0; n < networks.size(); ++n) {
        require(networks[n].node_count() == k, "combine: mismatched node counts");
        require(sgn(weights[n]) >= 0, "combine: negative weight");
        for (std::size_t e = 0; e < out.bandwidth.size(); ++e) {
            out.bandwidth[e] += weights[n] * Rational(networks[n].matrix()[e]);
        }
    }
    return out;
}

Network gen_complete(int node_count) {
    require(node_count >= 2, "complete network needs K >= 2");
    std::vector<Link> links;
    for (NodeId i = 0; i < node_count; ++i) {
        for (NodeId j = 0; j < node_count; ++j) {
            if (i != j) links.push_back({i, j, 1});
        }
    }
    return Network::from_links(node_count, links);
}

Network gen_cycle(int node_count) {
    require(node_count >= 3, "cycle needs K >= 3");
    std::vector<Link> links;
    for (NodeId i = 0; i < node_count; ++i) links.push_back({i, (i + 1) % node_count, 1});
    return Network::from_links(node_count, links);
}

Network gen_ring(int node_count) {
    require(node_count >= 3, "ring needs K >= 3");
    std::vector<Link> links;
    for (NodeId i = 0; i < node_count; ++i) {
        links.push_back({i, (i + 1) % node_count, 1});
        links.push_back({(i + 1) % node_count, i, 1});
    }
    return Network::from_links(node_count, links);
}

Network gen_three_cycle(const Integer& a, const Integer& b, const Integer& c) {
    require(sgn(a) > 0 && sgn(b) > 0 && sgn(c) > 0, "3-cycle bandwidths must be >= 1");
    const Link links[] = {{0, 1, a}, {1, 2, b}, {2, 0, c}};
    return Network::from_links(3, links);
}

Network gen_hypercube(int dimension) {
    require(dimension >= 1 && dimension <= 16, "hypercube dimension must be in [1, 16]");
    const int k = 1 << dimension;
    std::vector<Link> links;
    for (NodeId i = 0; i < k; ++i) {
        for (NodeId j = 0; j < k; ++j) {
            if (std::has_single_bit(static_cast<unsigned>(i ^ j))) links.push_back({i, j, 1});
        }
    }
    return Network::from_links(k, links);
}

Network gen_bidirected_tree(std::span<const NodeId> parent, std::span<const Integer> bandwidth) {
    const int k = static_cast<int>(parent.size());
    require(k >= 2, "tree needs at least 2 nodes");
    require(bandwidth.size() == parent.size(), "tree: one bandwidth per node expected");
    int roots = 0;
    for (NodeId v = 0; v < k; ++v) {
        if (parent[v] == -1) {
            ++roots;
            continue;
        }
        require(parent[v] >= 0 && parent[v] < k && parent[v] != v, "tree: bad parent id");
        require(sgn(bandwidth[v]) > 0, "tree: edge bandwidth must be positive");
        // Walking up must reach the root within K steps.
        NodeId at = v;
        for (int steps = 0; at != -1; ++steps) {
            require(steps <= k, "tree: parent map contains a cycle");
            at = parent[at];
        }
    }
    require(roots == 1, "tree: parent map must have exactly one root");
    std::vector<Link> links;
    for (NodeId v = 0; v < k; ++v) {
        if (parent[v] == -1) continue;
        links.push_back({v, parent[v], bandwidth[v]});
        links.push_back({parent[v], v, bandwidth[v]});
    }
    return Network::from_links(k, links);
}

std::string serialize(const Network& network) {
    std::ostringstream out;
    out << "K " << network.node_count() << '\n';
    for (const Edge& e : network.support()) {
        out << e.from << ' ' << e.to << ' ' << network.bandwidth(e.from, e.to).get_str() << '\n';
    }
    return out.str();
}

Network parse_network(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int node_count = -1;
    std::vector<Link> links;
    auto parse_error = [&](const std::string& what) {
        fail(ErrorCode::kParse, "network line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (node_count < 0) {
            if (tokens.size() != 2 || tokens[0] != "K") parse_error("expected 'K <integer>'");
            Integer k = parse_integer(tokens[1]);
            if (k < 2 || k > 4096) parse_error("K out of range");
            node_count = static_cast<int>(k.get_si());
            continue;
        }
        if (tokens.size() != 3) parse_error("expected '<from> <to> <beta>'");
        Integer from = parse_integer(tokens[0]);
        Integer to = parse_integer(tokens[1]);
        if (from < 0 || from >= node_count || to < 0 || to >= node_count) {
            parse_error("node id out of range");
        }
        links.push_back({static_cast<NodeId>(from.get_si()), static_cast<NodeId>(to.get_si()),
                         parse_integer(tokens[2])});
    }
    if (node_count < 0) fail(ErrorCode::kParse, "network file has no 'K' line");
    try {
        return Network::from_links(node_count, links);
    } catch (const Error& e) {
        fail(ErrorCode::kParse, e.what());
    }
}

Network load_network(const std::string& path) { return parse_network(read_text_file(path)); }

void save_network(const Network& network, const std::string& path) {
    write_text_file(path, serialize(network));
}

std::string hypercube_label(NodeId node, int dimension) {
    std::string label(static_cast<std::size_t>(dimension), '0');
    for (int bit = 0; bit < dimension; ++bit) {
        if ((node >> (dimension - 1 - bit)) & 1) label[static_cast<std::size_t>(bit)] = '1';
    }
    return label;
}

}  // namespace arb
