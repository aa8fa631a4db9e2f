// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_SRC_SIMPLEX_HPP
#define ARB_SRC_SIMPLEX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "arb/numeric.hpp"

namespace arb::detail {

/// Exact revised simplex for the packing LP
///     max sum_j x_j  s.t.  sum_j a_j x_j <= b,  x >= 0
/// with b >= 0 and small nonnegative integer columns a_j. The slack basis
/// is always feasible, so there is no phase one. Columns may be appended
/// between solves; the current basis stays primal feasible.
class PackingSimplex {
public:
    using SparseColumn = std::vector<std::pair<std::size_t, int>>;  // (row, coefficient)

    explicit PackingSimplex(std::vector<Integer> capacity);

    std::size_t add_column(SparseColumn column);
    std::size_t row_count() const noexcept { return capacity_.size(); }
    std::size_t column_count() const noexcept { return columns_.size(); }

    /// Pivots to optimality. Returns false if `max_pivots` is exhausted.
    /// Dantzig pricing is used until a run of degenerate pivots appears,
    /// after which Bland's rule is used for the rest of the solve, which
    /// rules out cycling.
    bool solve(std::size_t max_pivots);

    Rational objective() const;
    /// Value of every structural column (zero when nonbasic).
    std::vector<Rational> primal() const;
    /// Row duals y = c_B B^-1 for the current basis.
    std::vector<Rational> duals() const;
    std::size_t pivots() const noexcept { return pivots_; }

private:
    // Variables 0..n-1 are structural columns, n + i is the slack of row i.
    // Slack ids shift as columns are added, so slacks are tagged separately.
    struct Var {
        bool slack;
        std::size_t index;
    };

    std::size_t order(const Var& v) const { return v.slack ? columns_.size() + v.index : v.index; }
    Rational cost(const Var& v) const { return v.slack ? Rational(0) : Rational(1); }
    std::vector<Rational> direction(const Var& entering) const;
    void pivot(std::size_t row, const Var& entering, const std::vector<Rational>& u);

    std::vector<Integer> capacity_;
    std::vector<SparseColumn> columns_;
    std::vector<Var> basis_;                      // basic variable per row
    std::vector<std::vector<Rational>> inverse_;  // B^-1, dense
    std::vector<Rational> values_;                // x_B
    std::size_t pivots_ = 0;
};

}  // namespace arb::detail

#endif  // ARB_SRC_SIMPLEX_HPP
