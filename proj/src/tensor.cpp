#include "l0t/tensor.hpp"

#include "l0t/error.hpp"
#include "l0t/polygon.hpp"
#include "l0t/simplex.hpp"

#include <cmath>
#include <sstream>

namespace l0t {

namespace {

constexpr int kBracketLevel = 6;

void require_factors(const ModuleSpecPtr& left, const ModuleSpecPtr& right) {
    if (!same_space(left->space(), right->space()))
        fail(ErrorKind::Precondition, "tensor factors over different measure spaces");
}

void require_same_factors(const Tensor& a, const Tensor& b) {
    if (!same_module(a.left, b.left) || !same_module(a.right, b.right))
        fail(ErrorKind::Precondition, "tensors over different module pairs");
}

// Row-major: entry (i, j) of an m x n matrix lands at i*n + j.
VecQ flatten(const MatQ& A) {
    VecQ v(A.rows() * A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            v[i * A.cols() + j] = A(i, j);
    return v;
}

MatQ unflatten(const VecQ& v, int rows, int cols) {
    MatQ A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            A(i, j) = v[i * cols + j];
    return A;
}

// Functionals spanning the dual fiber: dual vertices when polyhedral,
// standard basis for l2 (spanning is all the null criterion needs).
std::vector<VecQ> spanning_duals(const NormDescriptor& desc) {
    if (desc.dim == 0) return {};
    if (desc.polyhedral_kind()) return dual_vertex_reps(desc);
    std::vector<VecQ> basis;
    for (int i = 0; i < desc.dim; ++i) {
        VecQ e = zero_vec(desc.dim);
        e[i] = 1;
        basis.push_back(e);
    }
    return basis;
}

// diag(sqrt(w)) A diag(sqrt(u)) in doubles: the matrix whose Schatten
// 1/2/infinity norms are pi, HS, eps on l2 fibers.
Eigen::MatrixXd l2_adjusted(const MatQ& A, const std::vector<Rational>& w,
                            const std::vector<Rational>& u) {
    Eigen::MatrixXd C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            C(i, j) = std::sqrt(to_double(w[i])) * to_double(A(i, j)) *
                      std::sqrt(to_double(u[j]));
    return C;
}

PiAtom pi_vertex_atom(const NormDescriptor& dl, const NormDescriptor& dr, const MatQ& A) {
    std::vector<VecQ> xs = primal_vertex_reps(dl);
    std::vector<VecQ> ys = primal_vertex_reps(dr);
    std::vector<VecQ> dict;
    dict.reserve(xs.size() * ys.size());
    for (const VecQ& x : xs)
        for (const VecQ& y : ys)
            dict.push_back(flatten(x * y.transpose()));

    GaugeResult g = gauge_lp(dict, flatten(A));
    PiAtom atom;
    atom.value = NormValue::from_exact(g.value);
    atom.route = PiRoute::Vertex;
    const int n = static_cast<int>(ys.size());
    for (const GaugeTerm& t : g.coefficients) {
        if (t.coeff == 0) continue;
        PiWitnessTerm w;
        w.coeff = t.coeff;
        w.x = Rational(t.sign) * xs[t.index / n];
        w.y = ys[t.index % n];
        atom.witness.push_back(std::move(w));
    }
    atom.dual_certificate = unflatten(g.dual_certificate, A.rows(), A.cols());
    return atom;
}

// Gauge over vertex x polygon products. The outer polygon contains the
// disc, so its dictionary hull contains the pi ball and the gauge is a
// lower bound; the inner polygon gives the upper bound.
PiAtom pi_bracket_atom(const std::vector<VecQ>& verts, const DiscPolygons& polys,
                       const MatQ& A, bool poly_on_left) {
    auto gauge_against = [&](const std::vector<VecQ>& ring) {
        std::vector<VecQ> dict;
        dict.reserve(verts.size() * ring.size());
        for (const VecQ& x : verts)
            for (const VecQ& p : ring)
                dict.push_back(poly_on_left ? flatten(x * p.transpose())
                                            : flatten(p * x.transpose()));
        return gauge_lp(dict, flatten(A)).value;
    };
    Rational lo = gauge_against(polys.outer);
    Rational hi = gauge_against(polys.inner);
    PiAtom atom;
    atom.route = PiRoute::Bracket;
    atom.lower = lo;
    atom.upper = hi;
    double half = to_double((hi - lo) / 2);
    atom.value = NormValue::from_float(to_double((lo + hi) / 2), half * 1.0000001 + 1e-12);
    return atom;
}

NormValue eps_fiber(const NormDescriptor& dl, const NormDescriptor& dr, const MatQ& A) {
    if (dl.dim == 0 || dr.dim == 0) return NormValue::zero();
    if (dl.polyhedral_kind() && dr.polyhedral_kind()) {
        NormValue best = NormValue::zero();
        for (const VecQ& d : dual_vertex_reps(dl))
            for (const VecQ& e : dual_vertex_reps(dr))
                best = nv_max(best, NormValue::from_exact(abs_q(Rational(d.dot(A * e)))));
        return best;
    }
    if (dl.polyhedral_kind() && dr.kind == NormKind::L2) {
        NormValue best = NormValue::zero();
        for (const VecQ& d : dual_vertex_reps(dl))
            best = nv_max(best, NormValue::from_exact_sq(
                                    inv_weighted_square_sum(VecQ(A.transpose() * d), dr.weights)));
        return best;
    }
    if (dl.kind == NormKind::L2 && dr.polyhedral_kind()) {
        NormValue best = NormValue::zero();
        for (const VecQ& e : dual_vertex_reps(dr))
            best = nv_max(best, NormValue::from_exact_sq(
                                    inv_weighted_square_sum(VecQ(A * e), dl.weights)));
        return best;
    }
    if (dl.kind == NormKind::L2 && dr.kind == NormKind::L2)
        return NormValue::from_float(
            singular_values_double(l2_adjusted(A, dl.weights, dr.weights))[0], 1e-7);
    fail(ErrorKind::Unsupported, "no injective norm route for this kind pair");
}

} // namespace

Tensor make_tensor(ModuleSpecPtr left, ModuleSpecPtr right, std::vector<MatQ> matrices) {
    require_factors(left, right);
    if (static_cast<int>(matrices.size()) != left->atom_count())
        fail(ErrorKind::Precondition, "one coefficient matrix per atom required");
    for (int k = 0; k < left->atom_count(); ++k)
        if (matrices[k].rows() != left->dim(k) || matrices[k].cols() != right->dim(k))
            fail(ErrorKind::Precondition, "coefficient matrix shape does not match fibers");
    return Tensor{std::move(left), std::move(right), std::move(matrices)};
}

Tensor zero_tensor(const ModuleSpecPtr& left, const ModuleSpecPtr& right) {
    require_factors(left, right);
    std::vector<MatQ> ms;
    for (int k = 0; k < left->atom_count(); ++k)
        ms.push_back(MatQ::Zero(left->dim(k), right->dim(k)));
    return Tensor{left, right, std::move(ms)};
}

Tensor tensor_add(const Tensor& a, const Tensor& b) {
    require_same_factors(a, b);
    std::vector<MatQ> ms;
    for (size_t k = 0; k < a.matrices.size(); ++k)
        ms.push_back(a.matrices[k] + b.matrices[k]);
    return Tensor{a.left, a.right, std::move(ms)};
}

Tensor tensor_scale(const Rational& c, const Tensor& a) {
    std::vector<MatQ> ms;
    for (const MatQ& A : a.matrices) ms.push_back(MatQ(c * A));
    return Tensor{a.left, a.right, std::move(ms)};
}

bool tensor_equal(const Tensor& a, const Tensor& b) {
    if (!same_module(a.left, b.left) || !same_module(a.right, b.right)) return false;
    for (size_t k = 0; k < a.matrices.size(); ++k)
        if (a.matrices[k] != b.matrices[k]) return false;
    return true;
}

Tensor from_representation(const Representation& rep) {
    if (rep.empty())
        fail(ErrorKind::Precondition, "empty representation has no ambient modules");
    const ModuleSpecPtr& left = rep.front().first.module();
    const ModuleSpecPtr& right = rep.front().second.module();
    for (const auto& [v, w] : rep)
        if (!same_module(v.module(), left) || !same_module(w.module(), right))
            fail(ErrorKind::Precondition, "representation pairs over mixed modules");
    Tensor a = zero_tensor(left, right);
    for (const auto& [v, w] : rep)
        for (int k = 0; k < left->atom_count(); ++k)
            a.matrices[k] += v.at(k) * w.at(k).transpose();
    return a;
}

Tensor elementary_tensor(const Element& v, const Element& w) {
    return from_representation({{v, w}});
}

bool is_null(const Tensor& a) {
    for (const MatQ& A : a.matrices)
        if (!A.isZero()) return false;
    return true;
}

bool null_criterion_agrees(const Tensor& a) {
    bool all_vanish = true;
    for (int k = 0; k < a.left->atom_count() && all_vanish; ++k) {
        const MatQ& A = a.matrices[k];
        for (const VecQ& omega : spanning_duals(a.left->fiber(k))) {
            for (const VecQ& eta : spanning_duals(a.right->fiber(k)))
                if (omega.dot(A * eta) != 0) {
                    all_vanish = false;
                    break;
                }
            if (!all_vanish) break;
        }
    }
    return all_vanish == is_null(a);
}

NormFunction PiResult::norms() const {
    NormFunction nf;
    nf.space = space;
    for (const PiAtom& atom : atoms) nf.values.push_back(atom.value);
    return nf;
}

PiResult projective_norm(const Tensor& a) {
    PiResult result;
    result.space = a.left->space();
    for (int k = 0; k < a.left->atom_count(); ++k) {
        const NormDescriptor& dl = a.left->fiber(k);
        const NormDescriptor& dr = a.right->fiber(k);
        const MatQ& A = a.matrices[k];
        if (dl.dim == 0 || dr.dim == 0) {
            PiAtom atom;
            atom.value = NormValue::zero();
            result.atoms.push_back(std::move(atom));
            continue;
        }
        if (dl.polyhedral_kind() && dr.polyhedral_kind()) {
            result.atoms.push_back(pi_vertex_atom(dl, dr, A));
        } else if (dl.kind == NormKind::L2 && dr.kind == NormKind::L2) {
            std::vector<double> sv = singular_values_double(l2_adjusted(A, dl.weights, dr.weights));
            double nuclear = 0.0;
            for (double s : sv) nuclear += s;
            PiAtom atom;
            atom.value = NormValue::from_float(nuclear, 1e-7);
            atom.route = PiRoute::Nuclear;
            result.atoms.push_back(std::move(atom));
        } else if (dl.polyhedral_kind() && dr.kind == NormKind::L2 && dr.dim == 2) {
            DiscPolygons polys =
                weighted_disc_polygons(dr.weights[0], dr.weights[1], kBracketLevel);
            result.atoms.push_back(pi_bracket_atom(primal_vertex_reps(dl), polys, A, true));
        } else if (dl.kind == NormKind::L2 && dl.dim == 2 && dr.polyhedral_kind()) {
            DiscPolygons polys =
                weighted_disc_polygons(dl.weights[0], dl.weights[1], kBracketLevel);
            result.atoms.push_back(pi_bracket_atom(primal_vertex_reps(dr), polys, A, false));
        } else {
            fail(ErrorKind::Unsupported, "no projective norm route for this kind pair");
        }
    }
    return result;
}

NormFunction injective_norm(const Tensor& a) {
    NormFunction nf;
    nf.space = a.left->space();
    for (int k = 0; k < a.left->atom_count(); ++k)
        nf.values.push_back(eps_fiber(a.left->fiber(k), a.right->fiber(k), a.matrices[k]));
    return nf;
}

L0Function hs_norm_squared(const Tensor& a) {
    std::vector<Rational> values;
    for (int k = 0; k < a.left->atom_count(); ++k) {
        const NormDescriptor& dl = a.left->fiber(k);
        const NormDescriptor& dr = a.right->fiber(k);
        if (dl.dim == 0 || dr.dim == 0) {
            values.emplace_back(0);
            continue;
        }
        if (dl.kind != NormKind::L2 || dr.kind != NormKind::L2)
            fail(ErrorKind::Unsupported, "Hilbert-Schmidt norm needs l2 fibers");
        const MatQ& A = a.matrices[k];
        Rational s(0);
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j)
                s += dl.weights[i] * dr.weights[j] * A(i, j) * A(i, j);
        values.push_back(s);
    }
    return L0Function(a.left->space(), std::move(values));
}

bool crossnorm_sandwich_check(const Tensor& a, std::string* report) {
    NormFunction eps = injective_norm(a);
    NormFunction pi = projective_norm(a).norms();
    L0Function hs2 = hs_norm_squared(a);
    for (int k = 0; k < a.left->atom_count(); ++k) {
        NormValue hs = NormValue::from_exact_sq(hs2.at(k));
        if (nv_less_equal(eps.values[k], hs) && nv_less_equal(hs, pi.values[k])) continue;
        if (report) {
            std::ostringstream os;
            os << "atom " << a.left->space()->atom(k).id << ": eps=" << eps.values[k].value
               << " hs=" << hs.value << " pi=" << pi.values[k].value;
            *report = os.str();
        }
        return false;
    }
    return true;
}

Tensor tensor_of_homs(const Homomorphism& T, const Homomorphism& S,
                      const Tensor& a, TensorFlavor) {
    if (!same_module(T.source, a.left) || !same_module(S.source, a.right))
        fail(ErrorKind::Precondition, "tensor does not live over the operators' sources");
    std::vector<MatQ> ms;
    for (size_t k = 0; k < a.matrices.size(); ++k)
        ms.push_back(T.matrices[k] * a.matrices[k] * S.matrices[k].transpose());
    return make_tensor(T.target, S.target, std::move(ms));
}

L0Function pairing_with_bilinear(const BilinearForm& b, const Tensor& a) {
    if (!same_module(b.left, a.left) || !same_module(b.right, a.right))
        fail(ErrorKind::Precondition, "bilinear form and tensor shapes differ");
    std::vector<Rational> values;
    for (size_t k = 0; k < a.matrices.size(); ++k) {
        Rational s(0);
        const MatQ& B = b.matrices[k];
        const MatQ& A = a.matrices[k];
        for (int i = 0; i < A.rows(); ++i)
            for (int j = 0; j < A.cols(); ++j)
                s += B(i, j) * A(i, j);
        values.push_back(s);
    }
    return L0Function(a.left->space(), std::move(values));
}

L0Function iota_evaluate(const Tensor& a, const Element& omega, const Element& eta) {
    if (!same_module(omega.module(), dual_module(a.left)) ||
        !same_module(eta.module(), dual_module(a.right)))
        fail(ErrorKind::Precondition, "functionals do not live in the factor duals");
    if (!unit_disc_member(omega) || !unit_disc_member(eta))
        fail(ErrorKind::Precondition, "functional outside the dual unit disc");
    std::vector<Rational> values;
    for (int k = 0; k < a.left->atom_count(); ++k)
        values.push_back(omega.at(k).dot(a.matrices[k] * eta.at(k)));
    return L0Function(a.left->space(), std::move(values));
}

std::pair<Homomorphism, Homomorphism> realize_L_R(const Tensor& a) {
    std::vector<MatQ> l_ms, r_ms;
    for (const MatQ& A : a.matrices) {
        l_ms.push_back(A.transpose());
        r_ms.push_back(A);
    }
    Homomorphism L = make_hom(dual_module(a.left), a.right, std::move(l_ms));
    Homomorphism R = make_hom(dual_module(a.right), a.left, std::move(r_ms));
    return {std::move(L), std::move(R)};
}

} // namespace l0t
