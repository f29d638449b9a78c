#pragma once

// Exact rational linear programming, two-phase primal simplex with Bland's
// rule. Instances here are tiny (tens of variables), so the tableau is dense
// and reduced costs are recomputed from scratch each iteration; Bland's rule
// makes termination unconditional, and every number stays an exact Rat.

#include <cstddef>
#include <limits>
#include <vector>

#include "rational.hpp"

namespace mldlab::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rat objective;       // c.x at the optimum (valid when Optimal)
    std::vector<Rat> x;  // primal point (valid when Optimal)
};

namespace detail {

class Tableau {
  public:
    // rows of A, right-hand side b (normalized to b >= 0 by row negation).
    Tableau(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
        : a_(std::move(a)), b_(std::move(b)) {
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (b_[i] < 0) {
                b_[i] = -b_[i];
                for (Rat& v : a_[i]) v = -v;
            }
    }

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return a_.empty() ? 0 : a_[0].size(); }

    // Appends an identity block and makes it the starting basis.
    void add_artificial_basis() {
        const std::size_t m = rows(), n = cols();
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) a_[i].push_back(i == k ? 1 : 0);
            basis_[i] = n + i;
        }
        artificial_start_ = n;
    }

    // Minimizes cost over the current basis; cost must cover all columns.
    // Columns >= forbid_from never enter the basis.
    Status run(const std::vector<Rat>& cost, std::size_t forbid_from) {
        const std::size_t m = rows(), n = cols();
        for (;;) {
            // reduced costs d_j = c_j - y.A_j with y = c_B B^{-1}; in tableau
            // form d_j = c_j - sum_i c_{basis_i} a_{ij}.
            std::size_t enter = n;
            for (std::size_t j = 0; j < n && enter == n; ++j) {
                if (j >= forbid_from) continue;
                bool basic = false;
                for (std::size_t i = 0; i < m && !basic; ++i)
                    if (basis_[i] == j) basic = true;
                if (basic) continue;
                Rat d = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (cost[basis_[i]] != 0 && a_[i][j] != 0) d -= cost[basis_[i]] * a_[i][j];
                if (d < 0) enter = j;  // Bland: first improving column
            }
            if (enter == n) return Status::Optimal;

            // ratio test; Bland tie-break on the smallest basic index.
            std::size_t leave = m;
            Rat best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rat ratio = b_[i] / a_[i][enter];
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return Status::Unbounded;
            pivot(leave, enter);
        }
    }

    // After phase 1: pivot artificials out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < rows(); ++i) {
            if (basis_[i] < artificial_start_) continue;
            for (std::size_t j = 0; j < artificial_start_; ++j)
                if (a_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            // A row with no nonzero structural entry is redundant; its
            // artificial stays basic at value zero and never pivots again.
        }
    }

    Rat objective(const std::vector<Rat>& cost) const {
        Rat z = 0;
        for (std::size_t i = 0; i < rows(); ++i)
            if (cost[basis_[i]] != 0) z += cost[basis_[i]] * b_[i];
        return z;
    }

    std::vector<Rat> extract(std::size_t n_structural) const {
        std::vector<Rat> x(n_structural, Rat(0));
        for (std::size_t i = 0; i < rows(); ++i)
            if (basis_[i] < n_structural) x[basis_[i]] = b_[i];
        return x;
    }

    std::size_t artificial_start() const { return artificial_start_; }

  private:
    void pivot(std::size_t r, std::size_t c) {
        const Rat piv = a_[r][c];
        for (Rat& v : a_[r]) v /= piv;
        b_[r] /= piv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || a_[i][c] == 0) continue;
            const Rat f = a_[i][c];
            for (std::size_t j = 0; j < cols(); ++j)
                if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
            a_[i][c] = 0;  // clean up exactly
            b_[i] -= f * b_[r];
        }
        basis_[r] = c;
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    std::vector<std::size_t> basis_;
    std::size_t artificial_start_ = 0;
};

}  // namespace detail

// Minimize c.x subject to A x = b, x >= 0.
inline Solution minimize(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                         const std::vector<Rat>& c) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : c.size();
    if (b.size() != m || c.size() != n)
        throw std::invalid_argument("lp::minimize: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("lp::minimize: ragged matrix");

    detail::Tableau t(a, b);
    t.add_artificial_basis();

    // Phase 1: minimize the sum of artificials.
    std::vector<Rat> phase1(n + m, Rat(0));
    for (std::size_t k = 0; k < m; ++k) phase1[n + k] = 1;
    t.run(phase1, n + m);
    Solution sol;
    if (t.objective(phase1) != 0) {
        sol.status = Status::Infeasible;
        return sol;
    }
    t.expel_artificials();

    // Phase 2: the real objective; artificial columns are frozen out.
    std::vector<Rat> phase2(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    sol.status = t.run(phase2, t.artificial_start());
    if (sol.status == Status::Optimal) {
        sol.x = t.extract(n);
        sol.objective = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (c[j] != 0) sol.objective += c[j] * sol.x[j];
    }
    return sol;
}

}  // namespace mldlab::lp
