// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/rate_lp.hpp"

#include <limits>
#include <map>

#include "arb/error.hpp"
#include "simplex.hpp"

namespace arb {
namespace {

constexpr std::size_t kMaxPivotsPerSolve = std::numeric_limits<std::size_t>::max();

// Rows of the LP are the support links; columns never touch other links.
class MasterProblem {
public:
    explicit MasterProblem(const Network& network)
        : network_(network),
          support_(network.support()),
          row_of_(static_cast<std::size_t>(network.node_count()) * network.node_count(), -1),
          simplex_(capacities(network, support_)) {
        for (std::size_t r = 0; r < support_.size(); ++r) {
            row_of_[network.index(support_[r].from, support_[r].to)] = static_cast<int>(r);
        }
    }

    /// Adds the column unless an identical beta vector is already present.
    bool add(const MacBcColumn& column) {
        if (!seen_.emplace(column.beta_matrix(), columns_.size()).second) return false;
        detail::PackingSimplex::SparseColumn sparse;
        const auto& beta = column.beta_matrix();
        for (std::size_t e = 0; e < beta.size(); ++e) {
            if (beta[e] == 0) continue;
            if (row_of_[e] < 0) fail(ErrorCode::kInternal, "column uses a link outside the support");
            sparse.emplace_back(static_cast<std::size_t>(row_of_[e]), beta[e]);
        }
        simplex_.add_column(std::move(sparse));
        columns_.push_back(column);
        return true;
    }

    void solve() {
        if (!simplex_.solve(kMaxPivotsPerSolve)) {
            fail(ErrorCode::kNotConverged, "simplex pivot limit reached");
        }
    }

    /// Duals as a dense K x K matrix.
    std::vector<Rational> dual_matrix() const {
        std::vector<Rational> out(row_of_.size(), 0);
        const auto y = simplex_.duals();
        for (std::size_t r = 0; r < support_.size(); ++r) {
            out[network_.index(support_[r].from, support_[r].to)] = y[r];
        }
        return out;
    }

    LpSolution solution() const {
        LpSolution out;
        out.status = LpStatus::kOptimal;
        out.value = simplex_.objective();
        const auto x = simplex_.primal();
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sgn(x[j]) > 0) {
                out.packing.columns.push_back(columns_[j]);
                out.packing.weights.push_back(x[j]);
            }
        }
        out.duals = dual_matrix();
        out.columns_considered = columns_.size();
        out.pivots = simplex_.pivots();
        return out;
    }

private:
    static std::vector<Integer> capacities(const Network& network, const std::vector<Edge>& support) {
        std::vector<Integer> b;
        b.reserve(support.size());
        for (const Edge& e : support) b.push_back(network.bandwidth(e.from, e.to));
        return b;
    }

    const Network& network_;
    std::vector<Edge> support_;
    std::vector<int> row_of_;
    detail::PackingSimplex simplex_;
    std::vector<MacBcColumn> columns_;
    std::map<std::vector<int>, std::size_t> seen_;
};

LpSolution empty_solution(const Network& network) {
    LpSolution out;
    out.status = LpStatus::kInfeasibleSupport;
    out.value = 0;
    out.duals.assign(network.matrix().size(), 0);
    return out;
}

}  // namespace

LpSolution lp_exhaustive(const Network& network, const ExhaustiveOptions& options) {
    if (network.node_count() > kMaxExhaustiveNodes && !options.force) {
        fail(ErrorCode::kTooLarge, "exhaustive LP is limited to K <= " +
                                       std::to_string(kMaxExhaustiveNodes) +
                                       " without force; use column generation");
    }
    if (!is_strongly_connected(network)) return empty_solution(network);

    MasterProblem master(network);
    for_each_column(
        network,
        [&](const MacBcColumn& column) {
            master.add(column);
            return true;
        },
        std::nullopt, options.column_cap);
    master.solve();
    return master.solution();
}

LpSolution lp_colgen(const Network& network, const ColgenOptions& options) {
    const int k = network.node_count();
    if (!is_strongly_connected(network)) return empty_solution(network);

    MasterProblem master(network);
    const std::vector<Rational> unit(network.matrix().size(), 1);
    for (NodeId r = 0; r < k; ++r) {
        auto mac = min_cost_arborescence(network, r, Orientation::kIn, unit);
        auto bc = min_cost_arborescence(network, r, Orientation::kOut, unit);
        if (mac && bc) master.add(MacBcColumn(std::move(mac->tree), std::move(bc->tree)));
    }

    const std::size_t round_cap =
        options.round_cap.value_or(10 * static_cast<std::size_t>(k) * network.support().size());
    for (std::size_t round = 0;; ++round) {
        master.solve();
        const auto costs = master.dual_matrix();

        std::optional<MacBcColumn> cheapest;
        Rational cheapest_cost;
        for (NodeId r = 0; r < k; ++r) {
            auto mac = min_cost_arborescence(network, r, Orientation::kIn, costs);
            auto bc = min_cost_arborescence(network, r, Orientation::kOut, costs);
            if (!mac || !bc) continue;
            Rational total = mac->cost + bc->cost;
            if (!cheapest || total < cheapest_cost) {
                cheapest.emplace(std::move(mac->tree), std::move(bc->tree));
                cheapest_cost = std::move(total);
            }
        }
        if (!cheapest) fail(ErrorCode::kInternal, "pricing found no column on a strongly connected network");

        // Reduced cost of the best column is 1 - cost; stop once it is <= 0.
        if (cheapest_cost >= 1) {
            LpSolution out = master.solution();
            out.rounds = round + 1;
            return out;
        }
        if (round >= round_cap) {
            fail(ErrorCode::kNotConverged,
                 "column generation did not converge in " + std::to_string(round_cap) + " rounds");
        }
        if (!master.add(*cheapest)) {
            fail(ErrorCode::kInternal, "pricing returned a column already in the master");
        }
    }
}

const char* to_string(LowerBoundSource source) {
    switch (source) {
        case LowerBoundSource::kClosedForm: return "closed-form";
        case LowerBoundSource::kLpExhaustive: return "lp-exhaustive";
        case LowerBoundSource::kLpColgen: return "lp-colgen";
    }
    return "unknown";
}

BoundsReport bounds_report(const Network& network, LowerBoundSource method) {
    require(method != LowerBoundSource::kClosedForm,
            "bounds_report computes the lower bound by LP; closed forms come from schemes");
    BoundsReport report;
    report.lp = method == LowerBoundSource::kLpExhaustive ? lp_exhaustive(network) : lp_colgen(network);
    report.lower = report.lp.value;
    report.lower_source = method;
    report.cut = cutset_bound(network);
    report.upper = report.cut.value;
    report.cap = corollary_cap(network);
    if (report.lower > Rational(report.upper)) {
        fail(ErrorCode::kInternal, "lower bound " + to_string(report.lower) +
                                       " exceeds cut-set bound " + to_string(report.upper));
    }
    if (sgn(report.lower) > 0) {
        report.gap_ratio = Rational(report.upper) / report.lower;
    } else if (sgn(report.upper) > 0) {
        fail(ErrorCode::kInternal, "zero LP value on a network with positive cut-set bound");
    }
    return report;
}

}  // namespace arb
