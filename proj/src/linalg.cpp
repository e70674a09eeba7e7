#include "l0t/linalg.hpp"

#include "l0t/error.hpp"

namespace l0t {

MatQ columns(const std::vector<VecQ>& vs, int rows) {
    MatQ A(rows, static_cast<int>(vs.size()));
    for (int j = 0; j < static_cast<int>(vs.size()); ++j) {
        if (vs[j].size() != rows)
            fail(ErrorKind::Precondition, "column length mismatch");
        A.col(j) = vs[j];
    }
    return A;
}

int rank_of(const MatQ& A) {
    if (A.rows() == 0 || A.cols() == 0) return 0;
    return static_cast<int>(Eigen::FullPivLU<MatQ>(A).rank());
}

MatQ kernel_of(const MatQ& A) {
    if (A.cols() == 0) return MatQ(0, 0);
    if (A.rows() == 0) return MatQ::Identity(A.cols(), A.cols());
    Eigen::FullPivLU<MatQ> lu(A);
    if (lu.dimensionOfKernel() == 0) return MatQ(A.cols(), 0);
    return lu.kernel();
}

std::optional<VecQ> solve_exact(const MatQ& A, const VecQ& b) {
    if (A.rows() != b.size())
        fail(ErrorKind::Precondition, "solve_exact shape mismatch");
    if (A.cols() == 0) {
        if (b.isZero()) return VecQ(VecQ::Zero(0));
        return std::nullopt;
    }
    Eigen::FullPivLU<MatQ> lu(A);
    VecQ x = lu.solve(b);
    if ((A * x - b).isZero()) return x;
    return std::nullopt;
}

bool spans_full_space(const std::vector<VecQ>& vs, int dim) {
    if (dim == 0) return true;
    if (vs.empty()) return false;
    return rank_of(columns(vs, dim)) == dim;
}

VecQ zero_vec(int n) {
    return VecQ::Zero(n);
}

Eigen::MatrixXd to_double_matrix(const MatQ& A) {
    Eigen::MatrixXd C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            C(i, j) = to_double(A(i, j));
    return C;
}

std::vector<double> singular_values_double(const Eigen::MatrixXd& C) {
    if (C.rows() == 0 || C.cols() == 0) return {};
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(C);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

} // namespace l0t
