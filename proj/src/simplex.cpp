#include "l0t/simplex.hpp"

#include "l0t/error.hpp"

#include <algorithm>

namespace l0t {

namespace {

// Dense exact tableau; Bland's rule on both the entering and the leaving
// choice, so cycling cannot occur.
struct Tableau {
    MatQ T;                  // m x (n + m), starts as [A | I] premultiplied by B^{-1}
    VecQ rhs;                // >= 0 throughout
    std::vector<int> basis;  // column index per row
    int n = 0;               // structural columns
    int m = 0;

    void pivot(int row, int col) {
        const Rational piv = T(row, col);
        T.row(row) /= piv;
        rhs[row] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const Rational f = T(i, col);
            if (f == 0) continue;
            T.row(i) -= f * T.row(row);
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Minimizes cost over the current basis. allow(j) gates entering columns.
    template <typename Allow>
    bool run(const VecQ& cost, Allow allow) {
        const int width = n + m;
        for (;;) {
            int entering = -1;
            for (int j = 0; j < width; ++j) {
                if (!allow(j)) continue;
                Rational reduced = cost[j];
                for (int i = 0; i < m; ++i) {
                    if (T(i, j) == 0) continue;
                    reduced -= cost[basis[i]] * T(i, j);
                }
                if (reduced < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return true;

            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (T(i, entering) <= 0) continue;
                Rational ratio = rhs[i] / T(i, entering);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;  // unbounded
            pivot(leave, entering);
        }
    }
};

} // namespace

LpResult solve_standard_lp(const MatQ& A0, const VecQ& b0, const VecQ& c) {
    const int m = static_cast<int>(A0.rows());
    const int n = static_cast<int>(A0.cols());
    if (b0.size() != m || c.size() != n)
        fail(ErrorKind::Precondition, "lp dimensions disagree");

    MatQ A = A0;
    VecQ b = b0;
    std::vector<int> row_sign(m, 1);
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            A.row(i) = -A.row(i);
            b[i] = -b[i];
            row_sign[i] = -1;
        }
    }

    Tableau tab;
    tab.n = n;
    tab.m = m;
    tab.T.resize(m, n + m);
    tab.T.setZero();
    if (n > 0) tab.T.block(0, 0, m, n) = A;
    for (int i = 0; i < m; ++i) tab.T(i, n + i) = 1;
    tab.rhs = b;
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) tab.basis[i] = n + i;

    // Phase 1: drive the artificial sum to zero.
    VecQ phase1 = zero_vec(n + m);
    for (int i = 0; i < m; ++i) phase1[n + i] = 1;
    if (!tab.run(phase1, [](int) { return true; }))
        fail(ErrorKind::Internal, "phase 1 cannot be unbounded");

    Rational infeas(0);
    for (int i = 0; i < m; ++i) infeas += phase1[tab.basis[i]] * tab.rhs[i];
    if (infeas > 0) return {};

    // Pivot leftover artificials out; rows that resist are redundant and
    // keep a zero-valued artificial barred from re-entering.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (tab.T(i, j) != 0) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    VecQ phase2 = zero_vec(n + m);
    for (int j = 0; j < n; ++j) phase2[j] = c[j];
    if (!tab.run(phase2, [n](int j) { return j < n; }))
        fail(ErrorKind::Infeasible, "objective unbounded below");

    LpResult res;
    res.feasible = true;
    res.x = zero_vec(n);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs[i];
    res.value = dot(c, res.x);

    // Duals from the basis columns of the flipped system, then unflipped.
    MatQ B(m, m);
    for (int i = 0; i < m; ++i) {
        const int col = tab.basis[i];
        if (col < n)
            B.col(i) = A.col(col);
        else {
            B.col(i) = zero_vec(m);
            B(col - n, i) = 1;
        }
    }
    VecQ cB(m);
    for (int i = 0; i < m; ++i) cB[i] = phase2[tab.basis[i]];
    auto y = solve_exact(MatQ(B.transpose()), cB);
    if (!y) fail(ErrorKind::Internal, "basis matrix must be invertible");
    res.y = *y;
    for (int i = 0; i < m; ++i) res.y[i] *= row_sign[i];

    // Exact optimality certificate; every solved instance is checked.
    if (!(A0 * res.x - b0).isZero())
        fail(ErrorKind::Internal, "primal solution violates constraints");
    for (int j = 0; j < n; ++j) {
        if (res.x[j] < 0) fail(ErrorKind::Internal, "negative basic variable");
        if (dot(res.y, VecQ(A0.col(j))) > c[j])
            fail(ErrorKind::Internal, "dual certificate violates a column");
    }
    if (dot(res.y, b0) != res.value)
        fail(ErrorKind::Internal, "strong duality gap");
    return res;
}

namespace {

int dim_of(const std::vector<VecQ>& dictionary, const VecQ& target) {
    const int dim = static_cast<int>(target.size());
    for (const VecQ& v : dictionary)
        if (v.size() != dim)
            fail(ErrorKind::Precondition, "dictionary vector has wrong dimension");
    return dim;
}

} // namespace

GaugeResult gauge_lp(const std::vector<VecQ>& dictionary, const VecQ& target) {
    const int dim = dim_of(dictionary, target);
    const int r = static_cast<int>(dictionary.size());
    if (target.isZero()) {
        GaugeResult g;
        g.value = 0;
        g.dual_certificate = zero_vec(dim);
        return g;
    }

    MatQ A(dim, 2 * r);
    for (int j = 0; j < r; ++j) {
        A.col(2 * j) = dictionary[j];
        A.col(2 * j + 1) = -dictionary[j];
    }
    VecQ c = VecQ::Constant(2 * r, Rational(1));
    LpResult lp = solve_standard_lp(A, target, c);
    if (!lp.feasible)
        fail(ErrorKind::Infeasible, "target lies outside the dictionary span");

    GaugeResult g;
    g.value = lp.value;
    g.dual_certificate = lp.y;
    for (int j = 0; j < r; ++j) {
        const Rational net = lp.x[2 * j] - lp.x[2 * j + 1];
        if (net == 0) continue;
        GaugeTerm t;
        t.index = j;
        t.sign = net > 0 ? 1 : -1;
        t.coeff = abs_q(net);
        g.coefficients.push_back(t);
    }
    return g;
}

AffineGaugeResult gauge_over_affine(const std::vector<VecQ>& dictionary,
                                    const std::vector<VecQ>& subspace,
                                    const VecQ& point) {
    const int dim = dim_of(dictionary, point);
    for (const VecQ& u : subspace)
        if (u.size() != dim)
            fail(ErrorKind::Precondition, "subspace vector has wrong dimension");
    const int r = static_cast<int>(dictionary.size());
    const int k = static_cast<int>(subspace.size());

    MatQ A(dim, 2 * r + 2 * k);
    for (int j = 0; j < r; ++j) {
        A.col(2 * j) = dictionary[j];
        A.col(2 * j + 1) = -dictionary[j];
    }
    for (int j = 0; j < k; ++j) {
        A.col(2 * r + 2 * j) = subspace[j];
        A.col(2 * r + 2 * j + 1) = -subspace[j];
    }
    VecQ c = zero_vec(2 * r + 2 * k);
    for (int j = 0; j < 2 * r; ++j) c[j] = 1;

    LpResult lp = solve_standard_lp(A, point, c);
    if (!lp.feasible)
        fail(ErrorKind::Infeasible, "point unreachable from dictionary and subspace");

    AffineGaugeResult g;
    g.value = lp.value;
    g.dual_certificate = lp.y;
    VecQ shift = zero_vec(dim);
    for (int j = 0; j < k; ++j) {
        const Rational net = lp.x[2 * r + 2 * j] - lp.x[2 * r + 2 * j + 1];
        shift -= net * subspace[j];
    }
    g.shift = shift;
    for (int j = 0; j < r; ++j) {
        const Rational net = lp.x[2 * j] - lp.x[2 * j + 1];
        if (net == 0) continue;
        GaugeTerm t;
        t.index = j;
        t.sign = net > 0 ? 1 : -1;
        t.coeff = abs_q(net);
        g.coefficients.push_back(t);
    }
    return g;
}

MinNormResult min_norm_over_affine(const NormDescriptor& desc,
                                   const VecQ& point,
                                   const std::vector<VecQ>& subspace) {
    if (point.size() != desc.dim)
        fail(ErrorKind::Precondition, "point does not match norm dimension");
    for (const VecQ& u : subspace)
        if (u.size() != desc.dim)
            fail(ErrorKind::Precondition, "subspace vector has wrong dimension");
    if (desc.dim == 0) return {NormValue::zero(), zero_vec(0)};

    if (desc.kind == NormKind::L2) {
        const int k = static_cast<int>(subspace.size());
        MatQ U(desc.dim, k);
        for (int j = 0; j < k; ++j) U.col(j) = subspace[j];
        MatQ W = MatQ::Zero(desc.dim, desc.dim);
        for (int i = 0; i < desc.dim; ++i) W(i, i) = desc.weights[i];

        VecQ shift = zero_vec(desc.dim);
        if (k > 0) {
            MatQ M = U.transpose() * W * U;
            VecQ rhs = -(U.transpose() * (W * point));
            auto sigma = solve_exact(M, rhs);
            if (!sigma)
                fail(ErrorKind::Precondition, "subspace basis must be independent");
            shift = U * *sigma;
        }
        VecQ x = point + shift;
        Rational sq = dot(x, VecQ(W * x));
        return {NormValue::from_exact_sq(sq), shift};
    }

    AffineGaugeResult g = gauge_over_affine(primal_vertex_reps(desc), subspace, point);
    return {NormValue::from_exact(g.value), g.shift};
}

MinNormResult min_sup_norm_over_affine(const std::vector<VecQ>& dual_list,
                                       const VecQ& point,
                                       const std::vector<VecQ>& subspace) {
    if (dual_list.empty())
        fail(ErrorKind::Precondition, "empty functional list");
    const int dim = static_cast<int>(point.size());
    for (const VecQ& d : dual_list)
        if (d.size() != dim)
            fail(ErrorKind::Precondition, "functional has wrong dimension");
    for (const VecQ& u : subspace)
        if (u.size() != dim)
            fail(ErrorKind::Precondition, "subspace vector has wrong dimension");

    const int k = static_cast<int>(subspace.size());
    const int l = static_cast<int>(dual_list.size());
    // Variables: sigma+ (k), sigma- (k), lambda, slack per inequality (2l).
    // For each functional d: |<d, point + U sigma>| <= lambda.
    const int cols = 2 * k + 1 + 2 * l;
    MatQ A = MatQ::Zero(2 * l, cols);
    VecQ b(2 * l);
    for (int i = 0; i < l; ++i) {
        const Rational dp = dot(dual_list[i], point);
        for (int j = 0; j < k; ++j) {
            const Rational du = dot(dual_list[i], subspace[j]);
            A(2 * i, 2 * j) = du;
            A(2 * i, 2 * j + 1) = -du;
            A(2 * i + 1, 2 * j) = -du;
            A(2 * i + 1, 2 * j + 1) = du;
        }
        A(2 * i, 2 * k) = -1;
        A(2 * i + 1, 2 * k) = -1;
        A(2 * i, 2 * k + 1 + 2 * i) = 1;
        A(2 * i + 1, 2 * k + 2 + 2 * i) = 1;
        b[2 * i] = -dp;
        b[2 * i + 1] = dp;
    }
    VecQ c = zero_vec(cols);
    c[2 * k] = 1;

    LpResult lp = solve_standard_lp(A, b, c);
    if (!lp.feasible) fail(ErrorKind::Internal, "sup-form lp is always feasible");

    VecQ shift = zero_vec(dim);
    for (int j = 0; j < k; ++j)
        shift += (lp.x[2 * j] - lp.x[2 * j + 1]) * subspace[j];
    return {NormValue::from_exact(lp.value), shift};
}

} // namespace l0t
