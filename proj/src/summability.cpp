#include "l0t/summability.hpp"

#include "l0t/error.hpp"
#include "l0t/spaces.hpp"

#include <algorithm>
#include <string>

namespace l0t {

namespace {

Rational q_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

void require_family(const CountableFamily& fam) {
    if (!fam.module || !fam.generator)
        fail(ErrorKind::Precondition, "family needs a module and a generator");
    if (static_cast<int>(fam.tails.size()) != fam.module->atom_count())
        fail(ErrorKind::Precondition, "one tail bound per atom required");
}

// Per-atom prefix vectors of the first `horizon` terms; index 0 is zero.
std::vector<std::vector<VecQ>> prefixes(const CountableFamily& fam, int horizon) {
    const int atoms = fam.module->atom_count();
    std::vector<std::vector<VecQ>> pref(atoms);
    for (int k = 0; k < atoms; ++k) pref[k].push_back(zero_vec(fam.module->dim(k)));
    for (int n = 1; n <= horizon; ++n) {
        Element v = fam.generator(n);
        if (!same_module(v.module(), fam.module))
            fail(ErrorKind::Precondition, "generator left its module");
        for (int k = 0; k < atoms; ++k) pref[k].push_back(pref[k].back() + v.at(k));
    }
    return pref;
}

// Every window sum the horizon exposes must respect the declared bound.
void validate_windows(const NormDescriptor& fiber, const std::vector<VecQ>& pref,
                      const TailBound& tail, int horizon, const std::string& atom_id) {
    for (int n = 0; n < horizon; ++n) {
        NormValue bound = NormValue::from_exact(tail.eval(n));
        for (int m = n + 1; m <= horizon; ++m) {
            NormValue w = norm_eval(fiber, VecQ(pref[m] - pref[n]));
            if (!nv_less_equal(w, bound))
                fail(ErrorKind::Precondition,
                     "declared tail bound violated at atom " + atom_id);
        }
    }
}

} // namespace

TailBound TailBound::geometric(const Rational& c, const Rational& r) {
    if (c < 0 || r <= 0 || r >= 1)
        fail(ErrorKind::Precondition, "geometric tail needs c >= 0 and 0 < r < 1");
    TailBound t;
    t.kind = TailKind::Geometric;
    t.c = c;
    t.r = r;
    return t;
}

TailBound TailBound::p_series(const Rational& c, int p) {
    if (c < 0 || p < 2)
        fail(ErrorKind::Precondition, "p-series tail needs c >= 0 and integer p >= 2");
    TailBound t;
    t.kind = TailKind::PSeries;
    t.c = c;
    t.p = p;
    return t;
}

TailBound TailBound::finite_support(const Rational& c, int support) {
    if (c < 0 || support < 0)
        fail(ErrorKind::Precondition, "finite-support tail needs c >= 0 and support >= 0");
    TailBound t;
    t.kind = TailKind::FiniteSupport;
    t.c = c;
    t.support = support;
    return t;
}

Rational TailBound::eval(int n) const {
    switch (kind) {
    case TailKind::Geometric: return c * q_pow(r, n);
    case TailKind::PSeries: return c / q_pow(Rational(std::max(n, 1)), p - 1);
    case TailKind::FiniteSupport: return n >= support ? Rational(0) : c;
    case TailKind::Divergent: break;
    }
    fail(ErrorKind::Precondition, "divergent tails have no bound");
}

std::vector<SummVerdict> cauchy_check(const CountableFamily& fam, int horizon) {
    require_family(fam);
    if (horizon < 1)
        fail(ErrorKind::Precondition, "horizon must be at least 1");

    auto pref = prefixes(fam, horizon);
    std::vector<SummVerdict> verdicts;
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        const TailBound& tail = fam.tails[k];
        const NormDescriptor& fiber = fam.module->fiber(k);
        const std::string& id = fam.module->space()->atom(k).id;

        if (tail.kind != TailKind::Divergent) {
            validate_windows(fiber, pref[k], tail, horizon, id);
            verdicts.push_back(SummVerdict::Summable);
            continue;
        }

        // corroborate the flag: partial-sum norms never shrink and the
        // second half of the window still accumulates at least 1/4
        std::vector<NormValue> s;
        for (int m = 1; m <= horizon; ++m) s.push_back(norm_eval(fiber, pref[k][m]));
        bool monotone = true;
        for (size_t m = 1; m < s.size(); ++m)
            if (!nv_less_equal(s[m - 1], s[m])) monotone = false;
        const NormValue& mid = s[(horizon - 1) / 2];
        const NormValue& end = s.back();
        bool grows;
        if (mid.exact && end.exact)
            grows = *end.exact - *mid.exact >= Rational(1, 4);
        else
            grows = end.value - mid.value - end.tol - mid.tol >= 0.25;
        verdicts.push_back(monotone && grows ? SummVerdict::NotSummable
                                             : SummVerdict::Unknown);
    }
    return verdicts;
}

SumResult family_sum(const CountableFamily& fam, const Rational& tol) {
    require_family(fam);
    if (tol <= 0)
        fail(ErrorKind::Precondition, "tolerance must be positive");

    int cutoff = 0;
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        const TailBound& tail = fam.tails[k];
        if (tail.kind == TailKind::Divergent)
            fail(ErrorKind::Precondition, "family not summable at atom " +
                                              fam.module->space()->atom(k).id);
        int n = 0;
        while (tail.eval(n) > tol) {
            if (++n > 200000)
                fail(ErrorKind::Unsupported, "tolerance out of reach for this tail");
        }
        cutoff = std::max(cutoff, n);
    }

    auto pref = prefixes(fam, std::max(cutoff, 1));
    for (int k = 0; k < fam.module->atom_count(); ++k)
        validate_windows(fam.module->fiber(k), pref[k], fam.tails[k],
                         std::max(cutoff, 1), fam.module->space()->atom(k).id);

    std::vector<VecQ> vectors;
    std::vector<Rational> error;
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        vectors.push_back(pref[k][cutoff]);
        error.push_back(fam.tails[k].eval(cutoff));
    }
    return SumResult{Element(fam.module, std::move(vectors)), std::move(error), cutoff};
}

bool hom_commute_check(const CountableFamily& fam, const Homomorphism& T,
                       const Rational& tol) {
    require_family(fam);
    if (!same_module(fam.module, T.source))
        fail(ErrorKind::Precondition, "family does not live in the operator source");

    NormFunction op = hom_pointwise_norm(T);
    CountableFamily image;
    image.module = T.target;
    image.generator = [&fam, &T](int n) { return hom_apply(T, fam.generator(n)); };
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        const TailBound& tail = fam.tails[k];
        const Rational scale = nv_upper(op.values[k]);
        if (tail.kind == TailKind::Divergent || scale == 0) {
            // a zero operator flattens any family, including divergent ones
            image.tails.push_back(scale == 0
                                      ? TailBound::geometric(Rational(0), Rational(1, 2))
                                      : TailBound::divergent());
        } else if (tail.kind == TailKind::Geometric) {
            image.tails.push_back(TailBound::geometric(tail.c * scale, tail.r));
        } else if (tail.kind == TailKind::FiniteSupport) {
            image.tails.push_back(TailBound::finite_support(tail.c * scale, tail.support));
        } else {
            image.tails.push_back(TailBound::p_series(tail.c * scale, tail.p));
        }
    }

    SumResult s = family_sum(fam, tol);
    SumResult si = family_sum(image, tol);
    NormFunction diff = pointwise_norm(elem_sub(hom_apply(T, s.value), si.value));
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        Rational bound = nv_upper(op.values[k]) * s.error[k] + si.error[k];
        if (!nv_less_equal(diff.values[k], NormValue::from_exact(bound))) return false;
    }
    return true;
}

CountableFamily geometric_family(const Element& base, const Rational& ratio) {
    const Rational ar = abs_q(ratio);
    if (ar >= 1)
        fail(ErrorKind::Precondition, "geometric family needs |ratio| < 1");
    CountableFamily fam;
    fam.module = base.module();
    fam.generator = [base, ratio](int n) { return elem_scale(q_pow(ratio, n), base); };
    NormFunction bn = pointwise_norm(base);
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        if (ar == 0) {
            fam.tails.push_back(TailBound::geometric(Rational(0), Rational(1, 2)));
            continue;
        }
        Rational c = nv_upper(bn.values[k]) * ar / (1 - ar);
        fam.tails.push_back(TailBound::geometric(c, ar));
    }
    return fam;
}

CountableFamily p_series_family(const Element& base, int p) {
    if (p < 2)
        fail(ErrorKind::Precondition, "p-series family needs integer p >= 2");
    CountableFamily fam;
    fam.module = base.module();
    fam.generator = [base, p](int n) {
        return elem_scale(1 / q_pow(Rational(n), p), base);
    };
    NormFunction bn = pointwise_norm(base);
    for (int k = 0; k < fam.module->atom_count(); ++k)
        fam.tails.push_back(TailBound::p_series(2 * nv_upper(bn.values[k]), p));
    return fam;
}

CountableFamily finite_family(const std::vector<Element>& terms) {
    if (terms.empty())
        fail(ErrorKind::Precondition, "finite family needs at least one term");
    CountableFamily fam;
    fam.module = terms[0].module();
    for (const Element& t : terms)
        if (!same_module(t.module(), fam.module))
            fail(ErrorKind::Precondition, "finite family terms live in different modules");
    const int count = static_cast<int>(terms.size());
    fam.generator = [terms, count](int n) {
        if (n <= count) return terms[n - 1];
        std::vector<VecQ> vecs;
        for (int k = 0; k < terms[0].module()->atom_count(); ++k)
            vecs.push_back(zero_vec(terms[0].module()->dim(k)));
        return Element(terms[0].module(), std::move(vecs));
    };
    for (int k = 0; k < fam.module->atom_count(); ++k) {
        Rational c(0);
        for (const Element& t : terms) c += nv_upper(norm_eval(fam.module->fiber(k), t.at(k)));
        fam.tails.push_back(TailBound::finite_support(c, count));
    }
    return fam;
}

CountableFamily scalar_geometric_family(const MeasureSpacePtr& space,
                                        const std::vector<Rational>& ratios) {
    if (static_cast<int>(ratios.size()) != space->atom_count())
        fail(ErrorKind::Precondition, "one ratio per atom required");
    CountableFamily fam;
    fam.module = scalar_module(space);
    ModuleSpecPtr mod = fam.module;
    fam.generator = [mod, ratios](int n) {
        std::vector<VecQ> vecs;
        for (const Rational& r : ratios) {
            VecQ v(1);
            v[0] = q_pow(r, n);
            vecs.push_back(v);
        }
        return Element(mod, std::move(vecs));
    };
    for (const Rational& r : ratios) {
        const Rational ar = abs_q(r);
        if (ar >= 1)
            fail(ErrorKind::Precondition, "scalar geometric family needs |ratio| < 1");
        fam.tails.push_back(ar == 0 ? TailBound::geometric(Rational(0), Rational(1, 2))
                                    : TailBound::geometric(ar / (1 - ar), ar));
    }
    return fam;
}

} // namespace l0t
