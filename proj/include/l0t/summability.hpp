#pragma once

// Countable families with caller-declared tail certificates. Deciding
// summability from finitely many samples is impossible, so verdicts lean
// on a declared closed-form bound per atom: the checker validates the
// bound against every window it can see and treats violations as input
// errors, keeping "summable" sound rather than heuristic.

#include "l0t/hom.hpp"
#include "l0t/module.hpp"

#include <functional>
#include <vector>

namespace l0t {

enum class TailKind { Geometric, PSeries, FiniteSupport, Divergent };

/// Nonincreasing bound tau(n) on the norm of any finite partial sum drawn
/// from indices beyond n. Geometric: c r^n. PSeries: c / max(n,1)^(p-1).
/// FiniteSupport: c while n < support, 0 after (all later terms vanish).
struct TailBound {
    TailKind kind = TailKind::Divergent;
    Rational c;
    Rational r;
    int p = 2;
    int support = 0;

    static TailBound geometric(const Rational& c, const Rational& r);
    static TailBound p_series(const Rational& c, int p);
    static TailBound finite_support(const Rational& c, int support);
    static TailBound divergent() { return TailBound{}; }

    Rational eval(int n) const;
};

struct CountableFamily {
    ModuleSpecPtr module;
    std::function<Element(int)> generator; // total on n >= 1
    std::vector<TailBound> tails;          // one per atom
};

enum class SummVerdict { Summable, NotSummable, Unknown };

/// Per-atom verdicts. Summable where the declared bound is consistent
/// with every window up to the horizon (it decays by construction);
/// NotSummable where the divergent flag is corroborated by monotone
/// partial-sum growth of at least 1/4 over the horizon's second half;
/// Unknown otherwise. A violated declared bound is a caller error.
std::vector<SummVerdict> cauchy_check(const CountableFamily& fam, int horizon);

struct SumResult {
    Element value;
    std::vector<Rational> error; // per atom, the tail bound at the cutoff
    int cutoff = 0;
};

/// Partial sum to the first index whose tail bound is within tol,
/// after validating the bound over that window.
SumResult family_sum(const CountableFamily& fam, const Rational& tol);

/// T applied to the sum against the sum of the image family (whose tails
/// scale by the pointwise operator norm), within the accumulated bounds.
bool hom_commute_check(const CountableFamily& fam, const Homomorphism& T,
                       const Rational& tol);

/// v_n = ratio^n base, |ratio| < 1; tails derived from the geometric series.
CountableFamily geometric_family(const Element& base, const Rational& ratio);

/// v_n = n^(-p) base, integer p >= 2; tails from the integral estimate.
CountableFamily p_series_family(const Element& base, int p);

/// Scalar fibers, v_n at atom k = ratios[k]^n; per-atom geometric tails.
CountableFamily scalar_geometric_family(const MeasureSpacePtr& space,
                                        const std::vector<Rational>& ratios);

/// v_n = terms[n-1] for n <= terms.size(), zero after; finite-support
/// tails with the triangle bound as the constant. Terms must be nonempty
/// and share a module.
CountableFamily finite_family(const std::vector<Element>& terms);

} // namespace l0t
