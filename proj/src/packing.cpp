// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/packing.hpp"

#include <sstream>

#include "arb/error.hpp"
#include "io.hpp"

namespace arb {

Rational Packing::rate() const {
    Rational total = 0;
    for (const Rational& w : weights) total += w;
    return total;
}

std::vector<Rational> Packing::load(int node_count) const {
    const auto k = static_cast<std::size_t>(node_count);
    std::vector<Rational> out(k * k, 0);
    for (std::size_t z = 0; z < columns.size(); ++z) {
        require(columns[z].node_count() == node_count, "packing: column node count mismatch");
        const auto& beta = columns[z].beta_matrix();
        for (std::size_t e = 0; e < out.size(); ++e) {
            if (beta[e] != 0) out[e] += weights[z] * beta[e];
        }
    }
    return out;
}

Integer Packing::scale() const {
    return common_denominator(weights.data(), weights.data() + weights.size());
}

std::optional<CapacityExcess> find_capacity_excess(const Network& network, const Packing& packing) {
    require(packing.columns.size() == packing.weights.size(), "packing: columns and weights differ");
    for (const Rational& w : packing.weights) require(sgn(w) >= 0, "packing: negative weight");
    const int k = network.node_count();
    const auto load = packing.load(k);
    for (NodeId i = 0; i < k; ++i) {
        for (NodeId j = 0; j < k; ++j) {
            const Rational& used = load[network.index(i, j)];
            if (used > Rational(network.bandwidth(i, j))) {
                return CapacityExcess{{i, j}, used, network.bandwidth(i, j)};
            }
        }
    }
    return std::nullopt;
}

Rational corollary_cap(const Network& network) {
    return ratio(network.total_bandwidth(), 2 * (network.node_count() - 1));
}

std::string format_parents(const Arborescence& tree) {
    std::string out;
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        if (v) out += ',';
        out += tree.parent[v] == -1 ? std::string("-") : std::to_string(tree.parent[v]);
    }
    return out;
}

std::string serialize(const Packing& packing) {
    std::ostringstream out;
    for (std::size_t z = 0; z < packing.columns.size(); ++z) {
        const auto& column = packing.columns[z];
        out << "root=" << column.root() << " mac=" << format_parents(column.mac())
            << " bc=" << format_parents(column.bc()) << " weight=" << to_fraction(packing.weights[z])
            << '\n';
    }
    return out.str();
}

namespace {

std::vector<NodeId> parse_parents(std::string_view text, int line_no) {
    std::vector<NodeId> parents;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        if (item == "-") {
            parents.push_back(-1);
        } else {
            Integer p = parse_integer(item);
            if (p < 0 || p > 1 << 16) {
                fail(ErrorCode::kParse, "packing line " + std::to_string(line_no) + ": bad parent");
            }
            parents.push_back(static_cast<NodeId>(p.get_si()));
        }
        start = comma + 1;
    }
    return parents;
}

}  // namespace

Packing parse_packing(std::string_view text) {
    std::istringstream in{std::string(text)};
    Packing packing;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        auto error = [&](const std::string& what) {
            fail(ErrorCode::kParse, "packing line " + std::to_string(line_no) + ": " + what);
        };
        if (tokens.size() != 4) error("expected 'root= mac= bc= weight='");
        const char* keys[] = {"root=", "mac=", "bc=", "weight="};
        std::string values[4];
        for (int f = 0; f < 4; ++f) {
            if (tokens[f].rfind(keys[f], 0) != 0) error(std::string("expected field ") + keys[f]);
            values[f] = tokens[f].substr(std::string_view(keys[f]).size());
        }
        try {
            const auto root = static_cast<NodeId>(parse_integer(values[0]).get_si());
            Arborescence mac{root, Orientation::kIn, parse_parents(values[1], line_no)};
            Arborescence bc{root, Orientation::kOut, parse_parents(values[2], line_no)};
            if (mac.node_count() < 2 || root < 0 || root >= mac.node_count()) error("bad root");
            if (!is_valid_arborescence(mac) || !is_valid_arborescence(bc)) {
                error("parent lists do not form arborescences at the root");
            }
            Rational weight = parse_rational(values[3]);
            if (sgn(weight) < 0) error("negative weight");
            packing.columns.emplace_back(std::move(mac), std::move(bc));
            packing.weights.push_back(std::move(weight));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::kParse) throw;
            error(e.what());
        }
        if (packing.columns.back().node_count() != packing.columns.front().node_count()) {
            error("columns disagree on node count");
        }
    }
    return packing;
}

Packing load_packing(const std::string& path) { return parse_packing(read_text_file(path)); }

void save_packing(const Packing& packing, const std::string& path) {
    write_text_file(path, serialize(packing));
}

}  // namespace arb
