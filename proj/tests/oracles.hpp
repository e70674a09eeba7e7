#pragma once

// Independent slow-path oracles for the test suite. Everything here walks
// the combinatorics directly instead of reusing the library's LP machinery.

#include "l0t/linalg.hpp"
#include "l0t/rational.hpp"

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace l0t::oracle {

// Gauge of conv(+-dict) by enumerating basic feasible solutions: every
// vertex of the feasible region uses at most rank(dict) columns, so the
// optimum is the best nonnegative solution over column subsets.
inline std::optional<Rational> brute_gauge(const std::vector<VecQ>& dict,
                                           const VecQ& target) {
    const int dim = static_cast<int>(target.size());
    std::vector<VecQ> cols;
    for (const VecQ& v : dict) {
        cols.push_back(v);
        cols.push_back(-v);
    }
    const int n = static_cast<int>(cols.size());
    if (target.isZero()) return Rational(0);
    if (n == 0) return std::nullopt;

    MatQ A(dim, n);
    for (int j = 0; j < n; ++j) A.col(j) = cols[j];
    const int r = rank_of(A);
    {
        MatQ Ab(dim, n + 1);
        Ab << A, target;
        if (rank_of(Ab) > r) return std::nullopt;
    }

    // Select r independent rows; the rest are implied by consistency.
    std::vector<int> rows;
    for (int i = 0; i < dim && static_cast<int>(rows.size()) < r; ++i) {
        MatQ probe(static_cast<int>(rows.size()) + 1, n);
        for (size_t k = 0; k < rows.size(); ++k) probe.row(static_cast<int>(k)) = A.row(rows[k]);
        probe.row(static_cast<int>(rows.size())) = A.row(i);
        if (rank_of(probe) == static_cast<int>(rows.size()) + 1) rows.push_back(i);
    }
    MatQ R(r, n);
    VecQ t(r);
    for (int k = 0; k < r; ++k) {
        R.row(k) = A.row(rows[k]);
        t[k] = target[rows[k]];
    }

    std::optional<Rational> best;
    std::vector<int> comb(r);
    for (int k = 0; k < r; ++k) comb[k] = k;
    auto advance = [&]() -> bool {
        int k = r - 1;
        while (k >= 0 && comb[k] == n - r + k) --k;
        if (k < 0) return false;
        ++comb[k];
        for (int j = k + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        MatQ B(r, r);
        for (int k = 0; k < r; ++k) B.col(k) = R.col(comb[k]);
        auto xs = solve_exact(B, t);
        if (!xs) continue;
        bool ok = true;
        Rational sum(0);
        VecQ full = zero_vec(n);
        for (int k = 0; k < r; ++k) {
            if ((*xs)[k] < 0) { ok = false; break; }
            sum += (*xs)[k];
            full[comb[k]] = (*xs)[k];
        }
        if (!ok) continue;
        if (!(A * full - target).isZero()) continue;
        if (!best || sum < *best) best = sum;
    } while (advance());
    return best;
}

// Singular values of a 2x2 matrix, squared, via the characteristic
// polynomial of M^T M; exact rationals, sorted descending.
inline std::pair<Rational, Rational> singular_squares_2x2(const MatQ& M) {
    MatQ G = M.transpose() * M;
    const Rational tr = G(0, 0) + G(1, 1);
    const Rational det = G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0);
    // roots of s^2 - tr s + det
    const Rational disc = tr * tr - 4 * det;
    // disc >= 0 always; callers only need the values through sqrt doubles
    // unless disc is a perfect square, so return the pair (tr, det) mapped
    // through exact arithmetic where possible.
    auto root = exact_sqrt(disc);
    if (root) {
        return {(tr + *root) / 2, (tr - *root) / 2};
    }
    // Fall back to rational approximations of the roots.
    const double d = std::sqrt(to_double(disc));
    const Rational rd = rational_from_double(d);
    return {(tr + rd) / 2, (tr - rd) / 2};
}

} // namespace l0t::oracle
