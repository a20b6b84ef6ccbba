#include "blockfrac/simplex.hpp"

#include <string>

#include "blockfrac/errors.hpp"

namespace blockfrac {

RationalSimplex::RationalSimplex(int num_vars, std::uint64_t pivot_cap)
    : num_vars_(num_vars), pivot_cap_(pivot_cap) {
    if (num_vars < 0) throw input_error("simplex: negative variable count");
    reduced_.assign(num_vars_, Rat(0));
}

void RationalSimplex::set_objective(const std::vector<Rat>& c) {
    if (int(c.size()) != num_vars_) throw input_error("simplex: objective size mismatch");
    if (pivots_ != 0) throw input_error("simplex: objective must be set before solving");
    for (int j = 0; j < num_vars_; ++j) reduced_[j] = -c[j];
}

int RationalSimplex::add_row(const std::vector<Rat>& coeffs, const Rat& rhs) {
    if (int(coeffs.size()) != num_vars_) throw input_error("simplex: row size mismatch");
    int r = int(rows_.size());
    // one fresh slack column for the new row
    for (auto& row : rows_) row.emplace_back(0);
    reduced_.emplace_back(0);

    std::vector<Rat> row(num_vars_ + r + 1, Rat(0));
    for (int j = 0; j < num_vars_; ++j) row[j] = coeffs[j];
    row[num_vars_ + r] = 1;
    Rat b = rhs;

    // express in terms of the current basis
    for (int i = 0; i < r; ++i) {
        Rat factor = row[basis_[i]];
        if (factor == 0) continue;
        for (int j = 0; j < int(rows_[i].size()); ++j)
            if (rows_[i][j] != 0) row[j] -= factor * rows_[i][j];
        b -= factor * rhs_[i];
    }
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(b));
    basis_.push_back(num_vars_ + r);
    return r;
}

void RationalSimplex::pivot(int r, int c) {
    if (++pivots_ > pivot_cap_)
        throw resource_error("simplex: pivot cap exceeded (" + std::to_string(pivot_cap_) + ")");
    const int cols = total_cols();
    Rat inv = rows_[r][c];
    for (int j = 0; j < cols; ++j)
        if (rows_[r][j] != 0) rows_[r][j] /= inv;
    rhs_[r] /= inv;

    for (int i = 0; i < int(rows_.size()); ++i) {
        if (i == r || rows_[i][c] == 0) continue;
        Rat factor = rows_[i][c];
        for (int j = 0; j < cols; ++j)
            if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
        rhs_[i] -= factor * rhs_[r];
    }
    if (reduced_[c] != 0) {
        Rat factor = reduced_[c];
        for (int j = 0; j < cols; ++j)
            if (rows_[r][j] != 0) reduced_[j] -= factor * rows_[r][j];
        objective_value_ -= factor * rhs_[r];
    }
    basis_[r] = c;
}

bool RationalSimplex::primal_step() {
    const int cols = total_cols();
    int enter = -1;
    if (bland_) {
        for (int j = 0; j < cols; ++j)
            if (reduced_[j] < 0) {
                enter = j;
                break;
            }
    } else {
        for (int j = 0; j < cols; ++j)
            if (reduced_[j] < 0 && (enter == -1 || reduced_[j] < reduced_[enter])) enter = j;
    }
    if (enter == -1) return false;

    int leave = -1;
    Rat best_ratio;
    for (int r = 0; r < int(rows_.size()); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rat ratio = rhs_[r] / rows_[r][enter];
        if (leave == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
            leave = r;
            best_ratio = ratio;
        }
    }
    if (leave == -1) throw input_error("simplex: unbounded objective");

    if (best_ratio == 0) {
        if (++degenerate_run_ > 60) bland_ = true;
    } else {
        degenerate_run_ = 0;
    }
    pivot(leave, enter);
    return true;
}

void RationalSimplex::solve() {
    while (primal_step()) {
    }
}

bool RationalSimplex::dual_step() {
    // Bland-style: infeasible row whose basic variable has least index,
    // entering column of least index among ratio-test minimizers.
    int leave = -1;
    for (int r = 0; r < int(rows_.size()); ++r) {
        if (rhs_[r] >= 0) continue;
        if (leave == -1 || basis_[r] < basis_[leave]) leave = r;
    }
    if (leave == -1) return false;

    const int cols = total_cols();
    int enter = -1;
    Rat best_ratio;
    for (int j = 0; j < cols; ++j) {
        if (rows_[leave][j] >= 0) continue;
        Rat ratio = reduced_[j] / -rows_[leave][j];
        if (enter == -1 || ratio < best_ratio) {
            enter = j;
            best_ratio = ratio;
        }
    }
    if (enter == -1)
        throw input_error("simplex: dual step found an infeasible row with no pivot");
    pivot(leave, enter);
    return true;
}

void RationalSimplex::add_row_and_reoptimize(const std::vector<Rat>& coeffs, const Rat& rhs) {
    add_row(coeffs, rhs);
    while (dual_step()) {
    }
    // a degenerate dual repair can leave reduced costs negative at ties; finish primally
    solve();
}

std::vector<Rat> RationalSimplex::variable_values() const {
    std::vector<Rat> y(num_vars_, Rat(0));
    for (int r = 0; r < int(rows_.size()); ++r)
        if (basis_[r] < num_vars_) y[basis_[r]] = rhs_[r];
    return y;
}

std::vector<Rat> RationalSimplex::row_dual_values() const {
    std::vector<Rat> d(rows_.size());
    for (int r = 0; r < int(rows_.size()); ++r) d[r] = reduced_[num_vars_ + r];
    return d;
}

}  // namespace blockfrac
