#pragma once

#include "l0t/linalg.hpp"
#include "l0t/norms.hpp"

#include <vector>

namespace l0t {

/// Outcome of min c.x s.t. A x = b, x >= 0, solved exactly.
/// When feasible, x is a basic optimal point and y the dual vector with
/// A^T y <= c and b.y = value; both are verified before returning.
struct LpResult {
    bool feasible = false;
    Rational value;
    VecQ x;
    VecQ y;
};

LpResult solve_standard_lp(const MatQ& A, const VecQ& b, const VecQ& c);

/// One term of a gauge decomposition: coeff * sign * dictionary[index].
struct GaugeTerm {
    int index = 0;
    int sign = 1;
    Rational coeff;
};

/// Minkowski gauge of the symmetric hull of a dictionary.
/// value = min sum t_j over target = sum t_j s_j c_j, t >= 0, s_j = +-1.
/// dual_certificate y satisfies |<y, c_j>| <= 1 and <y, target> = value.
struct GaugeResult {
    Rational value;
    std::vector<GaugeTerm> coefficients;
    VecQ dual_certificate;
};

GaugeResult gauge_lp(const std::vector<VecQ>& dictionary, const VecQ& target);

/// Gauge minimized over a coset: min gauge(point + span(subspace)).
/// shift is the minimizing subspace element; the certificate additionally
/// vanishes on the subspace.
struct AffineGaugeResult {
    Rational value;
    VecQ shift;
    std::vector<GaugeTerm> coefficients;
    VecQ dual_certificate;
};

AffineGaugeResult gauge_over_affine(const std::vector<VecQ>& dictionary,
                                    const std::vector<VecQ>& subspace,
                                    const VecQ& point);

/// min over s in span(subspace) of the descriptor norm of point + s.
/// Exact for polyhedral kinds (vertex gauge) and for weighted l2 (normal
/// equations); the l2 value is exact-squared even when the root is not.
struct MinNormResult {
    NormValue value;
    VecQ shift;
};

MinNormResult min_norm_over_affine(const NormDescriptor& desc,
                                   const VecQ& point,
                                   const std::vector<VecQ>& subspace);

/// Same minimization with the norm given in sup form over a fixed list of
/// functionals: min_s max_l |<dual_list[l], point + s>|.
MinNormResult min_sup_norm_over_affine(const std::vector<VecQ>& dual_list,
                                       const VecQ& point,
                                       const std::vector<VecQ>& subspace);

} // namespace l0t
