#pragma once

#include <cstdint>
#include <vector>

#include "blockfrac/rational.hpp"

namespace blockfrac {

// Dense-tableau simplex over exact rationals for problems of the form
//
//     max  c^T y   s.t.  A y <= b,  y >= 0,  b >= 0,
//
// which is the shape of the restricted fractional-coloring master in its
// dual (packing) form: one variable per vertex, one constraint per known
// independent set. The all-slack basis is feasible, so no phase one.
//
// Rows can be appended after a solve; the dual simplex then repairs
// feasibility, which is what column generation does after pricing.
//
// Entering-variable rule: most negative reduced cost, switching permanently
// to Bland's least-index rule after a run of degenerate pivots.
class RationalSimplex {
public:
    RationalSimplex(int num_vars, std::uint64_t pivot_cap = 200000);

    // Returns the row index. Coefficients are indexed by variable.
    int add_row(const std::vector<Rat>& coeffs, const Rat& rhs);

    void set_objective(const std::vector<Rat>& c);

    // Primal simplex to optimality from the current basis.
    void solve();

    // Appends a row and restores optimality via dual simplex steps.
    void add_row_and_reoptimize(const std::vector<Rat>& coeffs, const Rat& rhs);

    const Rat& objective_value() const { return objective_value_; }
    std::vector<Rat> variable_values() const;   // y
    std::vector<Rat> row_dual_values() const;   // one per constraint
    std::uint64_t pivots() const { return pivots_; }

private:
    void pivot(int row, int col);
    bool primal_step();
    bool dual_step();
    int total_cols() const { return num_vars_ + int(rows_.size()); }
    // column j entry of row r, with slack columns materialized on the fly
    Rat& entry(int r, int j) { return rows_[r][j]; }

    int num_vars_;
    std::uint64_t pivot_cap_;
    std::uint64_t pivots_ = 0;
    std::uint64_t degenerate_run_ = 0;
    bool bland_ = false;

    // tableau: rows_[r] has total_cols() coefficient entries; rhs_ separate
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<Rat> reduced_;  // reduced costs, one per column
    Rat objective_value_ = 0;
    std::vector<int> basis_;  // basis_[r] = column basic in row r
};

}  // namespace blockfrac
