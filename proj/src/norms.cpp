#include "l0t/norms.hpp"

#include "l0t/error.hpp"
#include "l0t/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace l0t {

namespace {

bool vec_list_eq(const std::vector<VecQ>& a, const std::vector<VecQ>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!vec_equal(a[i], b[i])) return false;
    return true;
}

// Sign-normalized representative: first nonzero coordinate positive.
VecQ sign_rep(const VecQ& v) {
    for (int i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        return v[i] > 0 ? v : VecQ(-v);
    }
    return v;
}

void push_unique(std::vector<VecQ>& list, const VecQ& v) {
    for (const VecQ& u : list)
        if (vec_equal(u, v)) return;
    list.push_back(v);
}

std::vector<VecQ> expand_signs(const std::vector<VecQ>& reps) {
    std::vector<VecQ> out;
    out.reserve(reps.size() * 2);
    for (const VecQ& v : reps) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

std::vector<Rational> unit_weights(int dim) {
    return std::vector<Rational>(dim, Rational(1));
}

std::vector<Rational> inverted(const std::vector<Rational>& w) {
    std::vector<Rational> out;
    out.reserve(w.size());
    for (const Rational& x : w) out.push_back(1 / x);
    return out;
}

// max over the expanded list of |<x, d>|; exact.
Rational max_abs_pairing(const std::vector<VecQ>& reps, const VecQ& x) {
    Rational best(0);
    for (const VecQ& d : reps) best = std::max(best, abs_q(dot(d, x)));
    return best;
}

} // namespace

NormDescriptor NormDescriptor::lp(NormKind kind, int dim, std::vector<Rational> weights) {
    if (kind == NormKind::Poly)
        fail(ErrorKind::Precondition, "polyhedral descriptors take vertex lists");
    if (dim < 0)
        fail(ErrorKind::Precondition, "negative dimension");
    if (weights.empty()) weights = unit_weights(dim);
    if (static_cast<int>(weights.size()) != dim)
        fail(ErrorKind::Precondition, "weight count does not match dimension");
    for (const Rational& w : weights)
        if (w <= 0) fail(ErrorKind::Precondition, "weights must be positive");
    NormDescriptor d;
    d.dim = dim;
    d.kind = kind;
    d.weights = std::move(weights);
    return d;
}

NormDescriptor NormDescriptor::poly(std::vector<VecQ> primal, std::vector<VecQ> dual) {
    if (primal.empty() || dual.empty())
        fail(ErrorKind::Precondition, "polyhedral descriptor needs both vertex lists");
    const int dim = static_cast<int>(primal.front().size());
    for (const VecQ& v : primal)
        if (v.size() != dim) fail(ErrorKind::Precondition, "mixed vertex dimensions");
    for (const VecQ& d : dual)
        if (d.size() != dim) fail(ErrorKind::Precondition, "mixed vertex dimensions");
    if (!spans_full_space(primal, dim) || !spans_full_space(dual, dim))
        fail(ErrorKind::Precondition, "vertex lists must span the full dimension");
    // Polar-pair bound: each vector pairs to at most 1 and achieves it.
    for (const VecQ& v : primal)
        if (max_abs_pairing(dual, v) != 1)
            fail(ErrorKind::Precondition, "primal vertex does not pair to exactly 1");
    for (const VecQ& d : dual)
        if (max_abs_pairing(primal, d) != 1)
            fail(ErrorKind::Precondition, "dual vertex does not pair to exactly 1");
    NormDescriptor out;
    out.dim = dim;
    out.kind = NormKind::Poly;
    out.primal = std::move(primal);
    out.dual = std::move(dual);
    return out;
}

bool NormDescriptor::operator==(const NormDescriptor& other) const {
    if (dim != other.dim || kind != other.kind || weights != other.weights) return false;
    if (!vec_list_eq(primal, other.primal) || !vec_list_eq(dual, other.dual)) return false;
    if (!block != !other.block) return false;
    if (block) {
        if (block->sum != other.block->sum) return false;
        if (block->blocks.size() != other.block->blocks.size()) return false;
        for (size_t i = 0; i < block->blocks.size(); ++i)
            if (!(block->blocks[i] == other.block->blocks[i])) return false;
    }
    return true;
}

NormValue NormValue::from_exact(const Rational& q) {
    NormValue v;
    v.exact = q;
    v.exact_sq = q * q;
    v.value = to_double(q);
    v.tol = 0.0;
    return v;
}

NormValue NormValue::from_exact_sq(const Rational& sq, double tol) {
    if (sq < 0)
        fail(ErrorKind::Internal, "negative square");
    if (auto root = exact_sqrt(sq)) return from_exact(*root);
    NormValue v;
    v.exact_sq = sq;
    v.value = std::sqrt(to_double(sq));
    v.tol = tol;
    return v;
}

NormValue NormValue::from_float(double val, double tol) {
    NormValue v;
    v.value = val;
    v.tol = tol;
    return v;
}

NormValue nv_add(const NormValue& a, const NormValue& b) {
    if (a.exact && b.exact) return NormValue::from_exact(*a.exact + *b.exact);
    return NormValue::from_float(a.value + b.value, a.tol + b.tol + 1e-15);
}

NormValue nv_mul(const NormValue& a, const NormValue& b) {
    if (a.exact && b.exact) return NormValue::from_exact(*a.exact * *b.exact);
    if (a.exact_sq && b.exact_sq)
        return NormValue::from_exact_sq(*a.exact_sq * *b.exact_sq, a.tol + b.tol + 1e-12);
    double tol = std::abs(a.value) * b.tol + std::abs(b.value) * a.tol + a.tol * b.tol + 1e-15;
    return NormValue::from_float(a.value * b.value, tol);
}

NormValue nv_max(const NormValue& a, const NormValue& b) {
    if (a.exact && b.exact) return NormValue::from_exact(std::max(*a.exact, *b.exact));
    if (a.exact_sq && b.exact_sq) {
        // norms are nonnegative, squares order them
        const NormValue& big = (*a.exact_sq >= *b.exact_sq) ? a : b;
        return big;
    }
    return NormValue::from_float(std::max(a.value, b.value), std::max(a.tol, b.tol));
}

bool nv_less_equal(const NormValue& a, const NormValue& b) {
    if (a.exact && b.exact) return *a.exact <= *b.exact;
    if (a.exact_sq && b.exact_sq) return *a.exact_sq <= *b.exact_sq;
    return a.value <= b.value + a.tol + b.tol;
}

bool nv_equal(const NormValue& a, const NormValue& b, double tol) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    if (a.exact_sq && b.exact_sq) return *a.exact_sq == *b.exact_sq;
    return std::abs(a.value - b.value) <= std::max(tol, a.tol + b.tol);
}

Rational nv_upper(const NormValue& a) {
    if (a.exact) return *a.exact;
    return rational_from_double(a.value) + rational_from_double(a.tol);
}

NormValue norm_eval(const NormDescriptor& desc, const VecQ& x) {
    if (x.size() != desc.dim)
        fail(ErrorKind::Precondition, "vector does not match norm dimension");
    if (desc.dim == 0) return NormValue::zero();
    switch (desc.kind) {
        case NormKind::L1: {
            Rational s(0);
            for (int i = 0; i < desc.dim; ++i) s += desc.weights[i] * abs_q(x[i]);
            return NormValue::from_exact(s);
        }
        case NormKind::Linf: {
            Rational m(0);
            for (int i = 0; i < desc.dim; ++i)
                m = std::max(m, Rational(desc.weights[i] * abs_q(x[i])));
            return NormValue::from_exact(m);
        }
        case NormKind::L2: {
            Rational sq(0);
            for (int i = 0; i < desc.dim; ++i) sq += desc.weights[i] * x[i] * x[i];
            return NormValue::from_exact_sq(sq);
        }
        case NormKind::Poly:
            return NormValue::from_exact(max_abs_pairing(desc.dual, x));
    }
    fail(ErrorKind::Internal, "unreachable norm kind");
}

NormDescriptor dual_descriptor(const NormDescriptor& desc) {
    if (desc.block) {
        std::vector<NormDescriptor> duals;
        duals.reserve(desc.block->blocks.size());
        for (const NormDescriptor& b : desc.block->blocks) duals.push_back(dual_descriptor(b));
        return desc.block->sum ? block_linf_descriptor(duals) : block_l1_descriptor(duals);
    }
    switch (desc.kind) {
        case NormKind::L1:
            return NormDescriptor::lp(NormKind::Linf, desc.dim, inverted(desc.weights));
        case NormKind::Linf:
            return NormDescriptor::lp(NormKind::L1, desc.dim, inverted(desc.weights));
        case NormKind::L2:
            return NormDescriptor::lp(NormKind::L2, desc.dim, inverted(desc.weights));
        case NormKind::Poly:
            return NormDescriptor::poly(desc.dual, desc.primal);
    }
    fail(ErrorKind::Internal, "unreachable norm kind");
}

std::vector<VecQ> primal_vertex_reps(const NormDescriptor& desc) {
    switch (desc.kind) {
        case NormKind::L1: {
            std::vector<VecQ> out;
            out.reserve(desc.dim);
            for (int i = 0; i < desc.dim; ++i) {
                VecQ e = zero_vec(desc.dim);
                e[i] = 1 / desc.weights[i];
                out.push_back(e);
            }
            return out;
        }
        case NormKind::Linf: {
            if (desc.dim == 0) return {};
            if (desc.dim > 16)
                fail(ErrorKind::Unsupported, "linf vertex enumeration beyond dimension 16");
            std::vector<VecQ> out;
            const int patterns = 1 << (desc.dim - 1);
            out.reserve(patterns);
            for (int s = 0; s < patterns; ++s) {
                VecQ v(desc.dim);
                v[0] = 1 / desc.weights[0];
                for (int i = 1; i < desc.dim; ++i) {
                    bool neg = (s >> (i - 1)) & 1;
                    v[i] = (neg ? Rational(-1) : Rational(1)) / desc.weights[i];
                }
                out.push_back(v);
            }
            return out;
        }
        case NormKind::Poly:
            return desc.primal;
        case NormKind::L2:
            fail(ErrorKind::Unsupported, "l2 balls have no vertex representation");
    }
    fail(ErrorKind::Internal, "unreachable norm kind");
}

std::vector<VecQ> dual_vertex_reps(const NormDescriptor& desc) {
    return primal_vertex_reps(dual_descriptor(desc));
}

std::string polarity_name(Polarity p) {
    switch (p) {
        case Polarity::Certified: return "certified";
        case Polarity::Plausible: return "plausible";
        case Polarity::Refuted: return "refuted";
    }
    return "?";
}

std::vector<VecQ> polar_vertices(const std::vector<VecQ>& V, int dim) {
    if (dim < 1 || dim > 3)
        fail(ErrorKind::Unsupported, "facet enumeration only runs in dimensions 1..3");
    std::vector<VecQ> pts = expand_signs(V);
    if (!spans_full_space(V, dim))
        fail(ErrorKind::Precondition, "vertex list is not full-dimensional");

    std::vector<VecQ> normals;
    const int n = static_cast<int>(pts.size());
    auto try_normal = [&](const MatQ& S) {
        Eigen::FullPivLU<MatQ> lu(S);
        if (lu.rank() < dim) return;
        VecQ ones = VecQ::Constant(dim, Rational(1));
        VecQ nrm = lu.solve(ones);
        for (const VecQ& x : pts)
            if (dot(nrm, x) > 1) return;
        push_unique(normals, sign_rep(nrm));
    };

    if (dim == 1) {
        Rational a(0);
        for (const VecQ& x : pts) a = std::max(a, abs_q(x[0]));
        VecQ nrm(1);
        nrm[0] = 1 / a;
        normals.push_back(nrm);
    } else if (dim == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                MatQ S(2, 2);
                S.row(0) = pts[i].transpose();
                S.row(1) = pts[j].transpose();
                try_normal(S);
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    MatQ S(3, 3);
                    S.row(0) = pts[i].transpose();
                    S.row(1) = pts[j].transpose();
                    S.row(2) = pts[k].transpose();
                    try_normal(S);
                }
    }
    return normals;
}

Polarity polarity_check(const std::vector<VecQ>& V, const std::vector<VecQ>& D) {
    if (V.empty() || D.empty())
        fail(ErrorKind::Precondition, "empty vertex list");
    const int dim = static_cast<int>(V.front().size());
    if (!spans_full_space(V, dim) || !spans_full_space(D, dim))
        fail(ErrorKind::Precondition, "vertex list is not full-dimensional");

    for (const VecQ& v : V)
        if (max_abs_pairing(D, v) != 1) return Polarity::Refuted;
    for (const VecQ& d : D)
        if (max_abs_pairing(V, d) != 1) return Polarity::Refuted;

    if (dim > 3) return Polarity::Plausible;

    // conv(+-D) already sits inside the polar; equality needs every polar
    // vertex, i.e. every facet normal of conv(+-V), inside conv(+-D).
    for (const VecQ& nrm : polar_vertices(V, dim)) {
        GaugeResult g = gauge_lp(D, nrm);
        if (g.value != 1) return Polarity::Refuted;
    }
    return Polarity::Certified;
}

namespace {

struct BlockLayout {
    int total_dim = 0;
    std::vector<int> offsets;
};

BlockLayout layout_of(const std::vector<NormDescriptor>& blocks) {
    BlockLayout l;
    for (const NormDescriptor& b : blocks) {
        l.offsets.push_back(l.total_dim);
        l.total_dim += b.dim;
    }
    return l;
}

VecQ embed_vec(const VecQ& v, int offset, int total) {
    VecQ out = zero_vec(total);
    for (int i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

// Tuples with one expanded vertex per nonempty block; the first nonempty
// block is restricted to representatives so the list stays one-per-pair.
std::vector<VecQ> product_reps(const std::vector<NormDescriptor>& blocks,
                               const BlockLayout& layout,
                               const std::vector<std::vector<VecQ>>& reps) {
    std::vector<int> live;
    for (size_t k = 0; k < blocks.size(); ++k)
        if (blocks[k].dim > 0) live.push_back(static_cast<int>(k));
    if (live.empty()) return {};

    std::vector<VecQ> acc{zero_vec(layout.total_dim)};
    bool first = true;
    for (int k : live) {
        std::vector<VecQ> verts = first ? reps[k] : expand_signs(reps[k]);
        first = false;
        std::vector<VecQ> next;
        next.reserve(acc.size() * verts.size());
        for (const VecQ& base : acc)
            for (const VecQ& v : verts) {
                VecQ merged = base;
                for (int i = 0; i < v.size(); ++i) merged[layout.offsets[k] + i] = v[i];
                next.push_back(merged);
            }
        acc = std::move(next);
    }
    return acc;
}

std::vector<VecQ> embedded_reps(const std::vector<NormDescriptor>& blocks,
                                const BlockLayout& layout,
                                const std::vector<std::vector<VecQ>>& reps) {
    std::vector<VecQ> out;
    for (size_t k = 0; k < blocks.size(); ++k)
        for (const VecQ& v : reps[k])
            out.push_back(embed_vec(v, layout.offsets[k], layout.total_dim));
    return out;
}

NormDescriptor block_combine(const std::vector<NormDescriptor>& blocks, bool sum) {
    const BlockLayout layout = layout_of(blocks);
    auto meta = std::make_shared<BlockStructure>(BlockStructure{sum, blocks});

    if (layout.total_dim == 0) {
        NormDescriptor d = NormDescriptor::lp(NormKind::L1, 0);
        d.block = meta;
        return d;
    }

    // Fast path: matching Lp blocks merge into one weighted descriptor.
    // Dimension-1 l1 and linf blocks coincide, so either joins both merges;
    // dimension-0 blocks contribute nothing.
    const NormKind merged_kind = sum ? NormKind::L1 : NormKind::Linf;
    bool mergeable = std::all_of(blocks.begin(), blocks.end(), [&](const NormDescriptor& b) {
        if (b.dim == 0) return true;
        if (b.kind == merged_kind) return true;
        return b.dim == 1 && (b.kind == NormKind::L1 || b.kind == NormKind::Linf);
    });
    if (mergeable) {
        std::vector<Rational> w;
        w.reserve(layout.total_dim);
        for (const NormDescriptor& b : blocks)
            w.insert(w.end(), b.weights.begin(), b.weights.end());
        NormDescriptor d = NormDescriptor::lp(merged_kind, layout.total_dim, std::move(w));
        d.block = meta;
        return d;
    }

    std::vector<std::vector<VecQ>> primal_reps, dual_reps;
    for (const NormDescriptor& b : blocks) {
        if (!b.polyhedral_kind())
            fail(ErrorKind::Unsupported, "block combinations need polyhedral blocks");
        primal_reps.push_back(b.dim > 0 ? primal_vertex_reps(b) : std::vector<VecQ>{});
        dual_reps.push_back(b.dim > 0 ? dual_vertex_reps(b) : std::vector<VecQ>{});
    }

    std::vector<VecQ> primal, dual;
    if (sum) {
        // l1 over blocks: ball is the hull of the embedded block balls.
        primal = embedded_reps(blocks, layout, primal_reps);
        dual = product_reps(blocks, layout, dual_reps);
    } else {
        primal = product_reps(blocks, layout, primal_reps);
        dual = embedded_reps(blocks, layout, dual_reps);
    }
    NormDescriptor d = NormDescriptor::poly(std::move(primal), std::move(dual));
    d.block = meta;
    return d;
}

} // namespace

NormDescriptor block_l1_descriptor(const std::vector<NormDescriptor>& blocks) {
    return block_combine(blocks, true);
}

NormDescriptor block_linf_descriptor(const std::vector<NormDescriptor>& blocks) {
    return block_combine(blocks, false);
}

} // namespace l0t
