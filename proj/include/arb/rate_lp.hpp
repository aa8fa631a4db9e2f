// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_RATE_LP_HPP
#define ARB_RATE_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "arb/cut.hpp"
#include "arb/packing.hpp"

namespace arb {

enum class LpStatus {
    kOptimal,
    /// No spanning MAC-BC column exists (network not strongly connected).
    kInfeasibleSupport,
};

/// Optimal Reduce-Broadcast packing LP: max sum of weights subject to
/// sum_z w_z beta_z <= beta.
struct LpSolution {
    LpStatus status = LpStatus::kOptimal;
    Rational value;
    /// Basic optimal packing; only columns with positive weight are kept.
    Packing packing;
    /// Row-major K x K; zero off the support. y . beta == value and
    /// y . beta_z >= 1 for every column.
    std::vector<Rational> duals;
    std::size_t columns_considered = 0;
    std::size_t pivots = 0;
    std::size_t rounds = 0;  // pricing rounds (column generation only)
};

inline constexpr int kMaxExhaustiveNodes = 5;

struct ExhaustiveOptions {
    /// Allow K above kMaxExhaustiveNodes.
    bool force = false;
    std::size_t column_cap = kDefaultColumnCap;
};

/// Solves the LP over every MAC-BC column of the support (deduplicated by
/// beta). Throws kTooLarge for K > 5 unless forced, or when the column
/// count exceeds the cap.
LpSolution lp_exhaustive(const Network& network, const ExhaustiveOptions& options = {});

struct ColgenOptions {
    /// Pricing rounds allowed; defaults to 10 * K * |support|.
    std::optional<std::size_t> round_cap;
};

/// Column generation: restricted master plus a pricing step that, for each
/// root, adds the cheapest IN tree and OUT tree under the current duals.
/// Throws kNotConverged if the round cap is hit.
LpSolution lp_colgen(const Network& network, const ColgenOptions& options = {});

enum class LowerBoundSource { kClosedForm, kLpExhaustive, kLpColgen };
const char* to_string(LowerBoundSource source);

struct BoundsReport {
    Rational lower;
    LowerBoundSource lower_source = LowerBoundSource::kLpColgen;
    Integer upper;
    Cut cut;
    Rational cap;
    /// upper / lower; nullopt when both bounds are zero.
    std::optional<Rational> gap_ratio;
    LpSolution lp;
};

/// Lower bound from the LP, upper bound from the cut-set bound. Throws
/// kInternal if lower > upper.
BoundsReport bounds_report(const Network& network,
                           LowerBoundSource method = LowerBoundSource::kLpColgen);

}  // namespace arb

#endif  // ARB_RATE_LP_HPP
