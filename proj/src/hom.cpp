#include "l0t/hom.hpp"

#include "l0t/error.hpp"
#include "l0t/simplex.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace l0t {

namespace {

void require_same_base(const ModuleSpecPtr& a, const ModuleSpecPtr& b,
                       const char* what) {
    if (!same_space(a->space(), b->space()))
        fail(ErrorKind::Precondition, std::string(what) + " over different measure spaces");
}

// Largest singular value of the weight-adjusted matrix, in doubles.
double spectral_norm_double(const MatQ& A, const std::vector<Rational>& w_out,
                            const std::vector<Rational>& w_in) {
    if (A.rows() == 0 || A.cols() == 0) return 0.0;
    Eigen::MatrixXd C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            C(i, j) = std::sqrt(to_double(w_out[i])) * to_double(A(i, j)) /
                      std::sqrt(to_double(w_in[j]));
    return singular_values_double(C)[0];
}

NormValue operator_norm_fiber(const NormDescriptor& src, const NormDescriptor& dst,
                              const MatQ& A) {
    if (src.dim == 0 || dst.dim == 0) return NormValue::zero();
    if (src.polyhedral_kind()) {
        NormValue best = NormValue::zero();
        for (const VecQ& x : primal_vertex_reps(src))
            best = nv_max(best, norm_eval(dst, VecQ(A * x)));
        return best;
    }
    if (src.kind == NormKind::L2 && dst.polyhedral_kind()) {
        // |A| = max over target dual vertices of the source-dual norm of A^T d
        NormValue best = NormValue::zero();
        for (const VecQ& d : dual_vertex_reps(dst)) {
            Rational sq = inv_weighted_square_sum(VecQ(A.transpose() * d), src.weights);
            best = nv_max(best, NormValue::from_exact_sq(sq));
        }
        return best;
    }
    if (src.kind == NormKind::L2 && dst.kind == NormKind::L2)
        return NormValue::from_float(spectral_norm_double(A, dst.weights, src.weights), 1e-9);
    fail(ErrorKind::Unsupported, "no operator norm route for this kind pair");
}

} // namespace

Homomorphism make_hom(ModuleSpecPtr source, ModuleSpecPtr target,
                      std::vector<MatQ> matrices) {
    require_same_base(source, target, "homomorphism");
    if (static_cast<int>(matrices.size()) != source->atom_count())
        fail(ErrorKind::Precondition, "one matrix per atom required");
    for (int k = 0; k < source->atom_count(); ++k)
        if (matrices[k].rows() != target->dim(k) || matrices[k].cols() != source->dim(k))
            fail(ErrorKind::Precondition, "matrix shape does not match fiber dims");
    return {std::move(source), std::move(target), std::move(matrices)};
}

Homomorphism identity_hom(const ModuleSpecPtr& module) {
    std::vector<MatQ> mats;
    for (int k = 0; k < module->atom_count(); ++k)
        mats.push_back(MatQ::Identity(module->dim(k), module->dim(k)));
    return {module, module, std::move(mats)};
}

Element hom_apply(const Homomorphism& T, const Element& v) {
    if (!same_module(v.module(), T.source))
        fail(ErrorKind::Precondition, "element outside the source module");
    std::vector<VecQ> vs;
    for (int k = 0; k < T.source->atom_count(); ++k)
        vs.push_back(VecQ(T.matrices[k] * v.at(k)));
    return Element(T.target, std::move(vs));
}

NormFunction hom_pointwise_norm(const Homomorphism& T) {
    NormFunction out;
    out.space = T.source->space();
    for (int k = 0; k < T.source->atom_count(); ++k)
        out.values.push_back(
            operator_norm_fiber(T.source->fiber(k), T.target->fiber(k), T.matrices[k]));
    return out;
}

ModuleSpecPtr dual_module(const ModuleSpecPtr& M) {
    std::vector<NormDescriptor> fibers;
    for (int k = 0; k < M->atom_count(); ++k) fibers.push_back(dual_descriptor(M->fiber(k)));
    return make_module(M->space(), std::move(fibers));
}

L0Function pairing(const Element& omega, const Element& v) {
    require_same_base(omega.module(), v.module(), "pairing");
    std::vector<Rational> out;
    for (int k = 0; k < v.module()->atom_count(); ++k) {
        if (omega.at(k).size() != v.at(k).size())
            fail(ErrorKind::Precondition, "pairing dimension mismatch");
        out.push_back(dot(omega.at(k), v.at(k)));
    }
    return L0Function(v.module()->space(), std::move(out));
}

Element hahn_banach_witness(const Element& v) {
    const ModuleSpecPtr dual = dual_module(v.module());
    std::vector<VecQ> vs;
    for (int k = 0; k < v.module()->atom_count(); ++k) {
        const NormDescriptor& fib = v.module()->fiber(k);
        const VecQ& x = v.at(k);
        if (fib.dim == 0) {
            vs.push_back(zero_vec(0));
            continue;
        }
        if (fib.polyhedral_kind()) {
            const auto duals = dual_vertex_reps(fib);
            if (x.isZero()) {
                vs.push_back(duals.front());
                continue;
            }
            int best = 0;
            Rational best_val = abs_q(dot(duals[0], x));
            for (int j = 1; j < static_cast<int>(duals.size()); ++j) {
                const Rational val = abs_q(dot(duals[j], x));
                if (val > best_val) {
                    best = j;
                    best_val = val;
                }
            }
            vs.push_back(dot(duals[best], x) < 0 ? VecQ(-duals[best]) : duals[best]);
            continue;
        }
        // l2 fiber: omega = W x / |x|
        if (x.isZero()) {
            vs.push_back(zero_vec(fib.dim));
            continue;
        }
        NormValue n = norm_eval(fib, x);
        const Rational scale = n.exact ? *n.exact : rational_from_double(n.value);
        VecQ w(fib.dim);
        for (int i = 0; i < fib.dim; ++i) w[i] = fib.weights[i] * x[i] / scale;
        vs.push_back(w);
    }
    return Element(dual, std::move(vs));
}

QuotientOperatorReport is_quotient_operator(const Homomorphism& T) {
    QuotientOperatorReport report;
    report.verdict = true;

    for (int k = 0; k < T.source->atom_count(); ++k) {
        const NormDescriptor& src = T.source->fiber(k);
        const NormDescriptor& dst = T.target->fiber(k);
        const MatQ& A = T.matrices[k];
        if (dst.dim == 0) continue;
        if (!dst.polyhedral_kind())
            fail(ErrorKind::Unsupported, "quotient detection needs polyhedral targets");

        if (rank_of(A) != dst.dim) {
            report.verdict = false;
            report.reason = "not surjective on atom " + T.source->space()->atom(k).id;
            continue;
        }

        NormValue op = operator_norm_fiber(src, dst, A);
        const bool bounded = op.exact ? *op.exact <= 1
                           : op.exact_sq ? *op.exact_sq <= 1
                                         : op.value <= 1 + 1e-12;
        if (!bounded) {
            report.verdict = false;
            report.reason = "operator norm exceeds 1 on atom " + T.source->space()->atom(k).id;
            continue;
        }

        const MatQ K = kernel_of(A);
        std::vector<VecQ> kernel_basis;
        for (int j = 0; j < K.cols(); ++j) kernel_basis.push_back(VecQ(K.col(j)));

        const auto targets = primal_vertex_reps(dst);
        for (int t = 0; t < static_cast<int>(targets.size()); ++t) {
            auto v0 = solve_exact(A, targets[t]);
            if (!v0) fail(ErrorKind::Internal, "surjective map must lift vertices");
            auto m = min_norm_over_affine(src, *v0, kernel_basis);
            report.probes.push_back({k, t, m.value});
            const bool unit = m.value.exact ? *m.value.exact == 1
                            : m.value.exact_sq ? *m.value.exact_sq == 1
                                               : std::abs(m.value.value - 1) <= 1e-9;
            if (!unit) {
                report.verdict = false;
                report.reason = "vertex lift is not isometric on atom " +
                                T.source->space()->atom(k).id;
            }
        }
    }
    return report;
}

Submodule annihilator(const Submodule& V) {
    const ModuleSpecPtr dual = dual_module(V.module());
    std::vector<std::vector<VecQ>> basis(dual->atom_count());
    for (int k = 0; k < dual->atom_count(); ++k) {
        const int m = V.module()->dim(k);
        if (m == 0) continue;
        if (V.basis_at(k).empty()) {
            for (int i = 0; i < m; ++i) {
                VecQ e = zero_vec(m);
                e[i] = 1;
                basis[k].push_back(e);
            }
            continue;
        }
        MatQ G = columns(V.basis_at(k), m);
        MatQ K = kernel_of(MatQ(G.transpose()));
        for (int j = 0; j < K.cols(); ++j) basis[k].push_back(VecQ(K.col(j)));
    }
    return Submodule(dual, std::move(basis));
}

bool quotient_dual_check(const Submodule& V) {
    const Submodule perp = annihilator(V);
    for (int k = 0; k < V.module()->atom_count(); ++k) {
        const NormDescriptor& fib = V.module()->fiber(k);
        if (fib.dim == 0) continue;
        if (!fib.polyhedral_kind())
            fail(ErrorKind::Unsupported, "quotient dual comparison needs polyhedral fibers");
        const int rank = V.rank_at(k);
        if (rank == 0) continue; // V* is trivial on this atom

        MatQ G = columns(V.basis_at(k), fib.dim);
        const NormDescriptor dual_fib = dual_descriptor(fib);
        const auto duals = dual_vertex_reps(fib);

        // restrictions of the ambient dual vertices generate V*'s ball
        std::vector<VecQ> restricted;
        restricted.reserve(duals.size());
        for (const VecQ& d : duals) restricted.push_back(VecQ(G.transpose() * d));

        // V's own unit ball, in basis coordinates, via facet enumeration
        const auto ball_vertices = polar_vertices(restricted, rank);

        for (size_t l = 0; l < duals.size(); ++l) {
            Rational restriction_norm(0);
            for (const VecQ& c : ball_vertices)
                restriction_norm = std::max(restriction_norm, abs_q(dot(restricted[l], c)));

            auto coset = min_norm_over_affine(dual_fib, duals[l], perp.basis_at(k));
            if (!coset.value.exact)
                fail(ErrorKind::Internal, "polyhedral coset norms are exact");
            if (*coset.value.exact != restriction_norm) return false;
        }
    }
    return true;
}

BilinearForm make_bilinear(ModuleSpecPtr left, ModuleSpecPtr right,
                           std::vector<MatQ> matrices) {
    require_same_base(left, right, "bilinear form");
    if (static_cast<int>(matrices.size()) != left->atom_count())
        fail(ErrorKind::Precondition, "one matrix per atom required");
    for (int k = 0; k < left->atom_count(); ++k)
        if (matrices[k].rows() != left->dim(k) || matrices[k].cols() != right->dim(k))
            fail(ErrorKind::Precondition, "matrix shape does not match fiber dims");
    return {std::move(left), std::move(right), std::move(matrices)};
}

L0Function bilinear_apply(const BilinearForm& b, const Element& v, const Element& w) {
    if (!same_module(v.module(), b.left) || !same_module(w.module(), b.right))
        fail(ErrorKind::Precondition, "arguments outside the form's modules");
    std::vector<Rational> out;
    for (int k = 0; k < b.left->atom_count(); ++k)
        out.push_back(dot(v.at(k), VecQ(b.matrices[k] * w.at(k))));
    return L0Function(b.left->space(), std::move(out));
}

NormFunction bilinear_norm(const BilinearForm& b) {
    NormFunction out;
    out.space = b.left->space();
    for (int k = 0; k < b.left->atom_count(); ++k) {
        const NormDescriptor& L = b.left->fiber(k);
        const NormDescriptor& R = b.right->fiber(k);
        const MatQ& B = b.matrices[k];
        if (L.dim == 0 || R.dim == 0) {
            out.values.push_back(NormValue::zero());
            continue;
        }
        if (L.polyhedral_kind() && R.polyhedral_kind()) {
            NormValue best = NormValue::zero();
            for (const VecQ& x : primal_vertex_reps(L))
                for (const VecQ& y : primal_vertex_reps(R))
                    best = nv_max(best, NormValue::from_exact(abs_q(dot(x, VecQ(B * y)))));
            out.values.push_back(best);
            continue;
        }
        if (L.polyhedral_kind() && R.kind == NormKind::L2) {
            NormValue best = NormValue::zero();
            for (const VecQ& x : primal_vertex_reps(L))
                best = nv_max(best, NormValue::from_exact_sq(
                                        inv_weighted_square_sum(VecQ(B.transpose() * x), R.weights)));
            out.values.push_back(best);
            continue;
        }
        if (L.kind == NormKind::L2 && R.polyhedral_kind()) {
            NormValue best = NormValue::zero();
            for (const VecQ& y : primal_vertex_reps(R))
                best = nv_max(best,
                              NormValue::from_exact_sq(inv_weighted_square_sum(VecQ(B * y), L.weights)));
            out.values.push_back(best);
            continue;
        }
        if (L.kind == NormKind::L2 && R.kind == NormKind::L2) {
            std::vector<Rational> inv_left;
            for (const Rational& w : L.weights) inv_left.push_back(1 / w);
            out.values.push_back(NormValue::from_float(
                spectral_norm_double(B, inv_left, R.weights), 1e-9));
            continue;
        }
        fail(ErrorKind::Unsupported, "no bilinear norm route for this kind pair");
    }
    return out;
}

Homomorphism curry(const BilinearForm& b) {
    std::vector<MatQ> mats;
    for (int k = 0; k < b.left->atom_count(); ++k)
        mats.push_back(MatQ(b.matrices[k].transpose()));
    return make_hom(b.left, dual_module(b.right), std::move(mats));
}

} // namespace l0t
