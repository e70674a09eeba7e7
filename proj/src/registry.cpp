#include "l0t/registry.hpp"

#include "docjson.hpp"
#include "l0t/error.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

namespace l0t {

namespace {

using docjson::Builder;
using Json = nlohmann::json;

// Draws avoid std::uniform_int_distribution on purpose: the engine sequence
// is pinned by the standard, the distributions are not.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t s) : eng(s) {}

    int i(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool flip() { return (eng() & 1) != 0; }
    Rational q(int maxnum = 4) { return Rational(i(-maxnum, maxnum), i(1, 2)); }
    Rational qpos(int maxnum = 3) { return Rational(i(1, maxnum), i(1, 2)); }
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a * 0x9e3779b97f4a7c15ULL + b + 0x2545f4914f6cdd1dULL;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

MeasureSpacePtr rnd_space(Rng& rng, int max_atoms = 3) {
    static const char* ids[] = {"a", "b", "c", "d"};
    const int n = rng.i(1, max_atoms);
    std::vector<Atom> atoms;
    for (int k = 0; k < n; ++k) atoms.push_back({ids[k], rng.qpos()});
    return make_space(std::move(atoms));
}

VecQ v2(const Rational& x, const Rational& y) {
    VecQ v(2);
    v[0] = x;
    v[1] = y;
    return v;
}

/// Exactly polar planar pairs: primal scaled by s, dual by 1/s.
NormDescriptor scaled_poly(int which, const Rational& s) {
    const Rational inv = Rational(1) / s;
    switch (which) {
    case 0: // l1 ball
        return NormDescriptor::poly({v2(s, 0), v2(0, s)},
                                    {v2(inv, inv), v2(inv, -inv)});
    case 1: // linf ball
        return NormDescriptor::poly({v2(s, s), v2(s, -s)},
                                    {v2(inv, 0), v2(0, inv)});
    default: // hexagon
        return NormDescriptor::poly(
            {v2(s, 0), v2(s / 2, s), v2(-s / 2, s)},
            {v2(inv, inv / 2), v2(0, inv), v2(-inv, inv / 2)});
    }
}

NormDescriptor rnd_poly_fiber(Rng& rng, int maxdim = 2) {
    const int pick = rng.i(0, 4);
    if (pick <= 1) {
        const int d = rng.i(1, maxdim);
        std::vector<Rational> w;
        for (int j = 0; j < d; ++j) w.push_back(rng.qpos());
        return NormDescriptor::lp(pick == 0 ? NormKind::L1 : NormKind::Linf, d,
                                  std::move(w));
    }
    return scaled_poly(pick - 2, Rational(rng.i(1, 4), rng.i(1, 2)));
}

NormDescriptor rnd_l2_fiber(Rng& rng, int maxdim = 3) {
    const int d = rng.i(1, maxdim);
    std::vector<Rational> w;
    for (int j = 0; j < d; ++j) w.push_back(Rational(rng.i(1, 3)));
    return NormDescriptor::lp(NormKind::L2, d, std::move(w));
}

ModuleSpecPtr rnd_poly_module(Rng& rng, const MeasureSpacePtr& s, int maxdim = 2) {
    std::vector<NormDescriptor> fibers;
    for (int k = 0; k < s->atom_count(); ++k) fibers.push_back(rnd_poly_fiber(rng, maxdim));
    return make_module(s, std::move(fibers));
}

ModuleSpecPtr rnd_l2_module(Rng& rng, const MeasureSpacePtr& s, int maxdim = 3) {
    std::vector<NormDescriptor> fibers;
    for (int k = 0; k < s->atom_count(); ++k) fibers.push_back(rnd_l2_fiber(rng, maxdim));
    return make_module(s, std::move(fibers));
}

VecQ rnd_vec(Rng& rng, int d, int maxnum = 4) {
    VecQ v(d);
    for (int j = 0; j < d; ++j) v[j] = rng.q(maxnum);
    return v;
}

VecQ rnd_vec_nonzero(Rng& rng, int d, int maxnum = 4) {
    VecQ v = rnd_vec(rng, d, maxnum);
    bool zero = true;
    for (int j = 0; j < d; ++j) zero = zero && v[j] == 0;
    if (zero) v[0] = 1;
    return v;
}

Element rnd_element(Rng& rng, const ModuleSpecPtr& M, bool nonzero = false) {
    std::vector<VecQ> vecs;
    for (int k = 0; k < M->atom_count(); ++k)
        vecs.push_back(nonzero ? rnd_vec_nonzero(rng, M->dim(k)) : rnd_vec(rng, M->dim(k)));
    return Element(M, std::move(vecs));
}

MatQ rnd_matrix(Rng& rng, int r, int c, int maxnum = 3) {
    MatQ m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rng.q(maxnum);
    return m;
}

Tensor rnd_tensor(Rng& rng, const ModuleSpecPtr& M, const ModuleSpecPtr& N) {
    std::vector<MatQ> mats;
    for (int k = 0; k < M->atom_count(); ++k)
        mats.push_back(rnd_matrix(rng, M->dim(k), N->dim(k)));
    return make_tensor(M, N, std::move(mats));
}

Homomorphism rnd_hom(Rng& rng, const ModuleSpecPtr& src, const ModuleSpecPtr& tgt) {
    std::vector<MatQ> mats;
    for (int k = 0; k < src->atom_count(); ++k)
        mats.push_back(rnd_matrix(rng, tgt->dim(k), src->dim(k), 2));
    return make_hom(src, tgt, std::move(mats));
}

Json rats(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const Rational& x : xs) a.push_back(format_rational(x));
    return a;
}

// ---- suite case builders ---------------------------------------------

void elem_tensor_case(Builder& b, Rng& rng, const char* flavor) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    auto N = rnd_poly_module(rng, X);
    Element v = rnd_element(rng, M);
    Element w = rnd_element(rng, N);
    std::vector<MatQ> mats;
    std::vector<Rational> want;
    for (int k = 0; k < X->atom_count(); ++k) {
        mats.push_back(v.at(k) * w.at(k).transpose());
        want.push_back(*norm_eval(M->fiber(k), v.at(k)).exact *
                       *norm_eval(N->fiber(k), w.at(k)).exact);
    }
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.element("v", "M", v);
    b.element("w", "N", w);
    b.tensor("t", "M", "N", make_tensor(M, N, std::move(mats)));
    b.assertion({{"name", std::string("elementary tensor ") + flavor + " norm"},
                 {"type", "tensor_norm"},
                 {"tensor", "t"},
                 {"flavor", flavor},
                 {"expected", rats(want)}});
}

void th_pi_elem(Builder& b, Rng& rng, int, double) { elem_tensor_case(b, rng, "pi"); }
void th_eps_elem(Builder& b, Rng& rng, int, double) { elem_tensor_case(b, rng, "eps"); }

void th_null(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X, 3);
    auto N = rnd_poly_module(rng, X, 3);
    Tensor t = index % 2 == 0 ? zero_tensor(M, N) : rnd_tensor(rng, M, N);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.tensor("t", "M", "N", t);
    b.assertion({{"name", "null verdicts agree"},
                 {"type", "null"},
                 {"tensor", "t"},
                 {"expected", is_null(t)}});
}

void th_sandwich(Builder& b, Rng& rng, int index, double tol) {
    const double float_tol = std::max(tol, 1e-7);
    if (index == 0) {
        auto X = make_space({{"a", Rational(1)}});
        auto M = make_module(X, {NormDescriptor::lp(NormKind::L2, 2)});
        b.space("X", X);
        b.module("M", "X", M);
        MatQ id = MatQ::Zero(2, 2);
        id(0, 0) = id(1, 1) = 1;
        b.tensor("t", "M", "M", make_tensor(M, M, {id}));
        b.assertion({{"name", "identity projective value"},
                     {"type", "tensor_norm"},
                     {"tensor", "t"},
                     {"flavor", "pi"},
                     {"expected", Json::array({"2/1"})},
                     {"tol", float_tol}});
        b.assertion({{"name", "identity injective value"},
                     {"type", "tensor_norm"},
                     {"tensor", "t"},
                     {"flavor", "eps"},
                     {"expected", Json::array({"1/1"})},
                     {"tol", float_tol}});
        b.assertion({{"name", "identity squared frobenius value"},
                     {"type", "hs_sq"},
                     {"tensor", "t"},
                     {"expected", Json::array({"2/1"})}});
        b.assertion({{"name", "crossnorm sandwich"}, {"type", "sandwich"}, {"tensor", "t"}});
        return;
    }
    auto X = rnd_space(rng);
    auto M = rnd_l2_module(rng, X);
    auto N = rnd_l2_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.tensor("t", "M", "N", rnd_tensor(rng, M, N));
    b.assertion({{"name", "crossnorm sandwich"}, {"type", "sandwich"}, {"tensor", "t"}});
}

void th_pi_dual(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    auto N = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.tensor("t", "M", "N", rnd_tensor(rng, M, N));
    b.assertion({{"name", "dual certificate attains"}, {"type", "pi_dual"}, {"tensor", "t"}});
}

void th_hom_tensor(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    auto N = rnd_poly_module(rng, X);
    auto M2 = rnd_poly_module(rng, X);
    auto N2 = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.module("M2", "X", M2);
    b.module("N2", "X", N2);
    b.hom("T", "M", "M2", rnd_hom(rng, M, M2));
    b.hom("S", "N", "N2", rnd_hom(rng, N, N2));
    b.tensor("t", "M", "N", rnd_tensor(rng, M, N));
    b.assertion({{"name", "tensored operator bound"},
                 {"type", "hom_tensor_bound"},
                 {"left_hom", "T"},
                 {"right_hom", "S"},
                 {"tensor", "t"},
                 {"flavor", index % 2 == 0 ? "pi" : "eps"}});
}

Json some_points(Rng& rng) {
    static const char* names[] = {"p", "q", "r"};
    const int n = rng.i(1, 3);
    Json pts = Json::array();
    for (int j = 0; j < n; ++j) pts.push_back(names[j]);
    return pts;
}

/// Columns run through the target ball's vertex representatives, with
/// random sign flips; the source ball maps exactly onto the target ball.
Homomorphism vertex_column_quotient(Rng& rng, const MeasureSpacePtr& X,
                                    ModuleSpecPtr& src_out, ModuleSpecPtr& tgt_out) {
    std::vector<NormDescriptor> tgt_fibers, src_fibers;
    for (int k = 0; k < X->atom_count(); ++k) {
        NormDescriptor d = scaled_poly(rng.i(0, 2), Rational(rng.i(1, 4), rng.i(1, 2)));
        src_fibers.push_back(
            NormDescriptor::lp(NormKind::L1, static_cast<int>(d.primal.size())));
        tgt_fibers.push_back(std::move(d));
    }
    auto src = make_module(X, std::move(src_fibers));
    auto tgt = make_module(X, std::move(tgt_fibers));
    std::vector<MatQ> mats;
    for (int k = 0; k < X->atom_count(); ++k) {
        const auto& reps = tgt->fiber(k).primal;
        MatQ m(tgt->dim(k), static_cast<int>(reps.size()));
        for (size_t j = 0; j < reps.size(); ++j)
            m.col(static_cast<int>(j)) = rng.flip() ? VecQ(-reps[j]) : reps[j];
        mats.push_back(std::move(m));
    }
    src_out = src;
    tgt_out = tgt;
    return make_hom(src, tgt, std::move(mats));
}

void th_quot_tensor_pi(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    ModuleSpecPtr src, tgt;
    Homomorphism T = vertex_column_quotient(rng, X, src, tgt);
    const bool intact = index % 2 == 0;
    if (!intact) {
        const int k0 = rng.i(0, X->atom_count() - 1);
        const int j0 = rng.i(0, static_cast<int>(T.matrices[k0].cols()) - 1);
        T.matrices[k0].col(j0) /= 2;
    }
    b.space("X", X);
    b.module("S", "X", src);
    b.module("M", "X", tgt);
    b.hom("T", "S", "M", T);
    b.assertion({{"name", "quotient verdict"},
                 {"type", "quotient"},
                 {"hom", "T"},
                 {"expected", intact}});
    if (intact)
        b.assertion({{"name", "tensored quotient lifts"},
                     {"type", "uc_quot"},
                     {"hom", "T"},
                     {"points", some_points(rng)}});
}

void th_vv(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    const int n = rng.i(1, 3);
    std::vector<NormDescriptor> left;
    for (int k = 0; k < X->atom_count(); ++k)
        left.push_back(NormDescriptor::lp(NormKind::L1, n));
    auto M = make_module(X, std::move(left));
    auto N = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.tensor("t", "M", "N", rnd_tensor(rng, M, N));
    b.assertion({{"name", "row-norm sum"}, {"type", "vv"}, {"tensor", "t"}});
}

void th_sphere_quot(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    std::vector<NormDescriptor> fibers;
    int maxv = 0;
    for (int k = 0; k < X->atom_count(); ++k) {
        fibers.push_back(scaled_poly(rng.i(0, 2), Rational(rng.i(1, 4), rng.i(1, 2))));
        maxv = std::max(maxv, static_cast<int>(fibers.back().primal.size()));
    }
    auto M = make_module(X, std::move(fibers));
    b.space("X", X);
    b.module("M", "X", M);
    const bool covering = index % 2 == 0;
    const int count = covering ? maxv : 1;
    Json gens = Json::array();
    for (int j = 0; j < count; ++j) {
        std::vector<VecQ> vecs;
        for (int k = 0; k < X->atom_count(); ++k) {
            const auto& reps = M->fiber(k).primal;
            VecQ g = reps[j % reps.size()];
            if (covering && rng.flip()) g = -g;
            vecs.push_back(g);
        }
        std::string id = "g" + std::to_string(j);
        b.element(id, "M", Element(M, std::move(vecs)));
        gens.push_back(id);
    }
    b.assertion({{"name", "generator hull"},
                 {"type", "sphere_quot"},
                 {"generators", std::move(gens)},
                 {"expected", covering}});
}

void th_diag(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    b.space("X", X);
    Json values = Json::array();
    const int count = rng.i(1, 3);
    for (int j = 0; j < count; ++j) {
        Json row = Json::array();
        for (int k = 0; k < X->atom_count(); ++k) row.push_back(format_rational(rng.q()));
        values.push_back(std::move(row));
    }
    b.assertion({{"name", "diagonal norms"},
                 {"type", "diag"},
                 {"space", "X"},
                 {"values", std::move(values)}});
}

void th_uc_eps(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    Json pts = some_points(rng);
    std::vector<std::string> names;
    for (const Json& p : pts) names.push_back(p.get<std::string>());
    auto U = uc_module(make_points(names), scalar_module(X));
    auto N = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("U", "X", U);
    b.module("N", "X", N);
    b.tensor("t", "U", "N", rnd_tensor(rng, U, N));
    b.assertion({{"name", "max row norm"}, {"type", "uc_eps"}, {"tensor", "t"}});
}

void th_uc_quot(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    ModuleSpecPtr src, tgt;
    Homomorphism T = [&] {
        if (index % 2 != 0) return vertex_column_quotient(rng, X, src, tgt);
        std::vector<NormDescriptor> sf, tf;
        std::vector<MatQ> mats;
        for (int k = 0; k < X->atom_count(); ++k) {
            const int n = rng.i(2, 3);
            const int m = rng.i(1, n - 1);
            sf.push_back(NormDescriptor::lp(NormKind::L1, n));
            tf.push_back(NormDescriptor::lp(NormKind::L1, m));
            MatQ p = MatQ::Zero(m, n);
            for (int j = 0; j < m; ++j) p(j, j) = 1;
            mats.push_back(std::move(p));
        }
        src = make_module(X, std::move(sf));
        tgt = make_module(X, std::move(tf));
        return make_hom(src, tgt, std::move(mats));
    }();
    b.space("X", X);
    b.module("S", "X", src);
    b.module("M", "X", tgt);
    b.hom("T", "S", "M", T);
    b.assertion(
        {{"name", "quotient verdict"}, {"type", "quotient"}, {"hom", "T"}, {"expected", true}});
    b.assertion({{"name", "tensored quotient lifts"},
                 {"type", "uc_quot"},
                 {"hom", "T"},
                 {"points", some_points(rng)}});
}

void pull_case(Builder& b, Rng& rng, const char* flavor) {
    auto Y = rnd_space(rng);
    auto X = rnd_space(rng, 4);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int k = 0; k < X->atom_count(); ++k)
        pairs.emplace_back(X->atom(k).id, Y->atom(rng.i(0, Y->atom_count() - 1)).id);
    auto M = rnd_poly_module(rng, Y);
    auto N = rnd_poly_module(rng, Y);
    b.space("Y", Y);
    b.space("X", X);
    b.atom_map("phi", "X", "Y", make_atom_map(X, Y, pairs));
    b.module("M", "Y", M);
    b.module("N", "Y", N);
    b.tensor("t", "M", "N", rnd_tensor(rng, M, N));
    b.assertion({{"name", std::string("transported ") + flavor + " norm"},
                 {"type", "pull_norm"},
                 {"map", "phi"},
                 {"tensor", "t"},
                 {"flavor", flavor}});
}

void th_pull_pi(Builder& b, Rng& rng, int, double) { pull_case(b, rng, "pi"); }
void th_pull_eps(Builder& b, Rng& rng, int, double) { pull_case(b, rng, "eps"); }

void th_hb(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    std::vector<NormDescriptor> fibers;
    for (int k = 0; k < X->atom_count(); ++k)
        fibers.push_back(rng.flip() ? rnd_poly_fiber(rng) : rnd_l2_fiber(rng));
    auto M = make_module(X, std::move(fibers));
    b.space("X", X);
    b.module("M", "X", M);
    b.element("v", "M", rnd_element(rng, M));
    b.assertion({{"name", "norming witness"}, {"type", "hb"}, {"element", "v"}});
}

void th_annih(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    Json gens = Json::array();
    const int count = rng.i(1, 2);
    for (int j = 0; j < count; ++j) {
        std::string id = "g" + std::to_string(j);
        b.element(id, "M", rnd_element(rng, M, true));
        gens.push_back(id);
    }
    b.assertion({{"name", "dual of the quotient"},
                 {"type", "annih"},
                 {"module", "M"},
                 {"generators", std::move(gens)}});
}

Rational pick_ratio(Rng& rng) {
    static const Rational ratios[] = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                      Rational(-1, 2)};
    return ratios[rng.i(0, 3)];
}

Json verdicts(const char* v, int atoms) {
    Json a = Json::array();
    for (int k = 0; k < atoms; ++k) a.push_back(v);
    return a;
}

void th_sum_cauchy(Builder& b, Rng& rng, int index, double) {
    auto X = rnd_space(rng);
    b.space("X", X);
    if (index % 2 != 0) {
        b.family_harmonic("F", "X");
        b.assertion({{"name", "flagged divergence"},
                     {"type", "summable"},
                     {"family", "F"},
                     {"horizon", 40},
                     {"expected", verdicts("not_summable", X->atom_count())}});
        return;
    }
    auto M = rnd_poly_module(rng, X);
    Element base = rnd_element(rng, M, true);
    Rational r = pick_ratio(rng);
    b.module("M", "X", M);
    b.element("base", "M", base);
    b.element("limit", "M", elem_scale(r / (1 - r), base));
    b.family_geometric("F", "base", r);
    b.assertion({{"name", "cauchy verdict"},
                 {"type", "summable"},
                 {"family", "F"},
                 {"horizon", 20},
                 {"expected", verdicts("summable", X->atom_count())}});
    b.assertion({{"name", "closed-form limit"},
                 {"type", "sum"},
                 {"family", "F"},
                 {"tol", "1/100000"},
                 {"expected", "limit"}});
}

void th_sum_hom(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    auto N = rnd_poly_module(rng, X);
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.element("base", "M", rnd_element(rng, M, true));
    b.hom("T", "M", "N", rnd_hom(rng, M, N));
    b.family_geometric("F", "base", pick_ratio(rng));
    b.assertion({{"name", "operator commutes with the sum"},
                 {"type", "sum_hom"},
                 {"family", "F"},
                 {"hom", "T"},
                 {"tol", "1/10000"}});
}

void th_curry(Builder& b, Rng& rng, int, double) {
    auto X = rnd_space(rng);
    auto M = rnd_poly_module(rng, X);
    auto N = rnd_poly_module(rng, X);
    std::vector<MatQ> mats;
    for (int k = 0; k < X->atom_count(); ++k)
        mats.push_back(rnd_matrix(rng, M->dim(k), N->dim(k)));
    b.space("X", X);
    b.module("M", "X", M);
    b.module("N", "X", N);
    b.form("B", "M", "N", make_bilinear(M, N, std::move(mats)));
    b.assertion({{"name", "curried operator norm"}, {"type", "curry_norm"}, {"form", "B"}});
}

using CaseFn = void (*)(Builder&, Rng&, int, double);

struct Suite {
    const char* id;
    CaseFn build;
};

constexpr Suite kSuites[] = {
    {"TH-NULL", th_null},
    {"TH-PI-ELEM", th_pi_elem},
    {"TH-EPS-ELEM", th_eps_elem},
    {"TH-SANDWICH", th_sandwich},
    {"TH-PI-DUAL", th_pi_dual},
    {"TH-HOM-TENSOR", th_hom_tensor},
    {"TH-QUOT-TENSOR-PI", th_quot_tensor_pi},
    {"TH-VV", th_vv},
    {"TH-SPHERE-QUOT", th_sphere_quot},
    {"TH-DIAG", th_diag},
    {"TH-UC-EPS", th_uc_eps},
    {"TH-UC-QUOT", th_uc_quot},
    {"TH-PULL-PI", th_pull_pi},
    {"TH-PULL-EPS", th_pull_eps},
    {"TH-HB", th_hb},
    {"TH-ANNIH", th_annih},
    {"TH-SUM-CAUCHY", th_sum_cauchy},
    {"TH-SUM-HOM", th_sum_hom},
    {"TH-CURRY", th_curry},
};

} // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Suite& s : kSuites) v.push_back(s.id);
        return v;
    }();
    return ids;
}

bool is_theorem_id(const std::string& id) {
    for (const Suite& s : kSuites)
        if (id == s.id) return true;
    return false;
}

SuiteResult run_suite(const std::string& id, std::uint64_t seed, int cases,
                      int emit_case, double tol) {
    const Suite* suite = nullptr;
    for (const Suite& s : kSuites)
        if (id == s.id) suite = &s;
    if (!suite) fail(ErrorKind::Reference, "unknown theorem id '" + id + "'");
    if (cases < 1) fail(ErrorKind::Precondition, "cases must be positive");

    SuiteResult out;
    out.id = id;
    out.cases = cases;
    for (int c = 0; c < cases; ++c) {
        Rng rng(mix(seed, static_cast<std::uint64_t>(c) + 1));
        Builder b;
        suite->build(b, rng, c, tol);
        std::string json = b.dump();
        WorkDocument doc = parse_document(json);
        SuiteCase result{c, true, ""};
        for (const Assertion& a : doc.assertions) {
            AssertionOutcome o = run_assertion(doc, a);
            if (!o.pass) {
                result.pass = false;
                result.detail = a.name + (o.detail.empty() ? "" : ": " + o.detail);
                break;
            }
        }
        out.results.push_back(result);
        if (!result.pass) {
            ++out.failures;
            if (out.counterexample.empty()) out.counterexample = json;
        }
        if (c == emit_case) out.emitted = json;
    }
    return out;
}

} // namespace l0t
