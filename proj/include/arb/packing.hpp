// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_PACKING_HPP
#define ARB_PACKING_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arb/arborescence.hpp"

namespace arb {

/// Weighted MAC-BC columns shared by bandwidth splitting; rate = sum of weights.
struct Packing {
    std::vector<MacBcColumn> columns;
    std::vector<Rational> weights;

    Rational rate() const;
    /// Entrywise sum_z weight_z * beta_z as a K x K matrix.
    std::vector<Rational> load(int node_count) const;
    /// Least common multiple of the weight denominators.
    Integer scale() const;
};

struct CapacityExcess {
    Edge edge;
    Rational load;
    Integer capacity;
};

/// First link (in (from, to) order) whose load exceeds its bandwidth, if
/// any. Also throws on negative weights or mismatched node counts.
std::optional<CapacityExcess> find_capacity_excess(const Network& network, const Packing& packing);
inline bool is_feasible(const Network& network, const Packing& packing) {
    return !find_capacity_excess(network, packing).has_value();
}

/// Total bandwidth over 2(K - 1): no packing can exceed this rate.
Rational corollary_cap(const Network& network);

/// One line per column: `root=<r> mac=<parents> bc=<parents> weight=<p>/<q>`
/// where <parents> lists parent ids of nodes 0..K-1 separated by commas
/// and `-` marks the root.
std::string serialize(const Packing& packing);
Packing parse_packing(std::string_view text);
Packing load_packing(const std::string& path);
void save_packing(const Packing& packing, const std::string& path);

std::string format_parents(const Arborescence& tree);

}  // namespace arb

#endif  // ARB_PACKING_HPP
