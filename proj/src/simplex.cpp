// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplex.hpp"

#include <optional>

#include "arb/error.hpp"

namespace arb::detail {

namespace {
constexpr std::size_t kDegenerateStreakBeforeBland = 50;
}

PackingSimplex::PackingSimplex(std::vector<Integer> capacity) : capacity_(std::move(capacity)) {
    const std::size_t m = capacity_.size();
    basis_.reserve(m);
    inverse_.assign(m, std::vector<Rational>(m, 0));
    values_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        require(sgn(capacity_[i]) >= 0, "simplex: negative capacity");
        basis_.push_back({true, i});
        inverse_[i][i] = 1;
        values_.emplace_back(capacity_[i]);
    }
}

std::size_t PackingSimplex::add_column(SparseColumn column) {
    for (const auto& [row, coefficient] : column) {
        require(row < row_count() && coefficient >= 0, "simplex: bad column entry");
    }
    columns_.push_back(std::move(column));
    return columns_.size() - 1;
}

std::vector<Rational> PackingSimplex::duals() const {
    const std::size_t m = row_count();
    std::vector<Rational> y(m, 0);
    for (std::size_t k = 0; k < m; ++k) {
        if (basis_[k].slack) continue;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(inverse_[k][i]) != 0) y[i] += inverse_[k][i];
        }
    }
    return y;
}

std::vector<Rational> PackingSimplex::direction(const Var& entering) const {
    const std::size_t m = row_count();
    std::vector<Rational> u(m, 0);
    if (entering.slack) {
        for (std::size_t k = 0; k < m; ++k) u[k] = inverse_[k][entering.index];
        return u;
    }
    for (const auto& [row, coefficient] : columns_[entering.index]) {
        for (std::size_t k = 0; k < m; ++k) {
            if (sgn(inverse_[k][row]) != 0) u[k] += inverse_[k][row] * coefficient;
        }
    }
    return u;
}

void PackingSimplex::pivot(std::size_t row, const Var& entering, const std::vector<Rational>& u) {
    const std::size_t m = row_count();
    const Rational pivot_value = u[row];
    for (std::size_t j = 0; j < m; ++j) inverse_[row][j] /= pivot_value;
    values_[row] /= pivot_value;
    for (std::size_t k = 0; k < m; ++k) {
        if (k == row || sgn(u[k]) == 0) continue;
        const Rational factor = u[k];
        for (std::size_t j = 0; j < m; ++j) {
            if (sgn(inverse_[row][j]) != 0) inverse_[k][j] -= factor * inverse_[row][j];
        }
        values_[k] -= factor * values_[row];
    }
    basis_[row] = entering;
    ++pivots_;
}

bool PackingSimplex::solve(std::size_t max_pivots) {
    const std::size_t m = row_count();
    bool bland = false;
    std::size_t degenerate_streak = 0;
    for (std::size_t step = 0; step < max_pivots; ++step) {
        const std::vector<Rational> y = duals();

        // Reduced costs are compared as integers: scale y by the common
        // denominator D, then d_j > 0 iff D - sum_i a_ij * D * y_i > 0.
        const Integer scale = common_denominator(y.data(), y.data() + y.size());
        std::vector<Integer> scaled(m);
        for (std::size_t i = 0; i < m; ++i) scaled[i] = y[i].get_num() * (scale / y[i].get_den());

        std::optional<Var> entering;
        Integer best_gain = 0;  // D * reduced cost of the chosen candidate
        auto offer = [&](const Var& v, const Integer& gain) {
            if (sgn(gain) <= 0) return;
            if (bland) {
                if (!entering || order(v) < order(*entering)) entering = v;
            } else if (!entering || gain > best_gain) {
                entering = v;
                best_gain = gain;
            }
        };
        Integer gain;
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            gain = scale;
            for (const auto& [row, coefficient] : columns_[j]) gain -= scaled[row] * coefficient;
            offer({false, j}, gain);
            if (bland && entering) break;  // lowest structural index wins
        }
        if (!(bland && entering)) {
            for (std::size_t i = 0; i < m; ++i) {
                gain = -scaled[i];
                offer({true, i}, gain);
            }
        }
        if (!entering) return true;

        const std::vector<Rational> u = direction(*entering);
        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t k = 0; k < m; ++k) {
            if (sgn(u[k]) <= 0) continue;
            Rational ratio = values_[k] / u[k];
            if (!leave || ratio < best_ratio ||
                (ratio == best_ratio && order(basis_[k]) < order(basis_[*leave]))) {
                leave = k;
                best_ratio = std::move(ratio);
            }
        }
        if (!leave) fail(ErrorCode::kInternal, "simplex: packing LP reported unbounded");

        if (sgn(best_ratio) == 0) {
            if (++degenerate_streak >= kDegenerateStreakBeforeBland) bland = true;
        } else {
            degenerate_streak = 0;
        }
        pivot(*leave, *entering, u);
    }
    return false;
}

Rational PackingSimplex::objective() const {
    Rational total = 0;
    for (std::size_t k = 0; k < row_count(); ++k) {
        if (!basis_[k].slack) total += values_[k];
    }
    return total;
}

std::vector<Rational> PackingSimplex::primal() const {
    std::vector<Rational> x(columns_.size(), 0);
    for (std::size_t k = 0; k < row_count(); ++k) {
        if (!basis_[k].slack) x[basis_[k].index] = values_[k];
    }
    return x;
}

}  // namespace arb::detail
