#pragma once

// Exact dense kernels over Rational. Eigen supplies storage and LU; every
// result here is exact, no pivot thresholding is involved.

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "l0t/rational.hpp"

namespace l0t {

using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

MatQ columns(const std::vector<VecQ>& vs, int rows);

int rank_of(const MatQ& A);

/// Columns span the null space of A (empty matrix when A is injective).
MatQ kernel_of(const MatQ& A);

/// Some exact solution of Ax = b, or nullopt when b is outside the column span.
std::optional<VecQ> solve_exact(const MatQ& A, const VecQ& b);

bool spans_full_space(const std::vector<VecQ>& vs, int dim);

VecQ zero_vec(int n);

inline Rational dot(const VecQ& a, const VecQ& b) { return a.dot(b); }

inline bool vec_equal(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

/// sum w_i x_i^2, exact.
inline Rational weighted_square_sum(const VecQ& x, const std::vector<Rational>& w) {
    Rational s(0);
    for (int i = 0; i < x.size(); ++i) s += w[i] * x[i] * x[i];
    return s;
}

/// sum x_i^2 / w_i, exact. The l2(w) dual norm squared.
inline Rational inv_weighted_square_sum(const VecQ& x, const std::vector<Rational>& w) {
    Rational s(0);
    for (int i = 0; i < x.size(); ++i) s += x[i] * x[i] / w[i];
    return s;
}

Eigen::MatrixXd to_double_matrix(const MatQ& A);

/// Singular values in descending order; empty input gives an empty list.
std::vector<double> singular_values_double(const Eigen::MatrixXd& C);

} // namespace l0t
