#pragma once

// Module homomorphisms as per-atom matrices, their pointwise operator
// norms, dual modules, functional witnesses, quotient-operator detection,
// annihilators, and bounded bilinear forms.

#include "l0t/module.hpp"

#include <string>
#include <vector>

namespace l0t {

struct Homomorphism {
    ModuleSpecPtr source;
    ModuleSpecPtr target;
    std::vector<MatQ> matrices; // per atom, target_dim x source_dim
};

Homomorphism make_hom(ModuleSpecPtr source, ModuleSpecPtr target,
                      std::vector<MatQ> matrices);
Homomorphism identity_hom(const ModuleSpecPtr& module);

Element hom_apply(const Homomorphism& T, const Element& v);

/// Pointwise operator norm. Exact routes: vertex sweep when the source is
/// polyhedral-kind, dual-vertex sweep when the source is l2 and the target
/// polyhedral-kind. Both-l2 fibers go through a float singular value
/// (tol 1e-9). Anything else is unsupported.
NormFunction hom_pointwise_norm(const Homomorphism& T);

ModuleSpecPtr dual_module(const ModuleSpecPtr& M);

/// Per-atom dot product of a dual element against a primal element.
L0Function pairing(const Element& omega, const Element& v);

/// omega in the dual unit sphere with pairing(omega, v) = |v|. Exact for
/// polyhedral fibers; l2 fibers divide by the float face when |v| is
/// irrational. Null atoms get the first dual vertex (polyhedral) or zero.
Element hahn_banach_witness(const Element& v);

struct PreimageProbe {
    int atom = 0;
    int vertex = 0;
    NormValue min_norm;
};

struct QuotientOperatorReport {
    bool verdict = false;
    std::string reason;               // empty when verdict holds
    std::vector<PreimageProbe> probes;
};

/// Quotient operators: per-atom surjectivity, operator norm at most 1, and
/// min-norm preimage exactly 1 on every target-ball vertex. The norm bound
/// closes the gap vertex agreement alone leaves open (an operator can cover
/// all target vertices at cost 1 yet overshoot elsewhere).
QuotientOperatorReport is_quotient_operator(const Homomorphism& T);

/// V-perp inside the dual module, fiberwise.
Submodule annihilator(const Submodule& V);

/// Restriction-vs-quotient comparison on the generators of V's dual ball:
/// for every dual vertex d of the ambient fiber, the V*-norm of d's
/// restriction must equal the coset norm of d modulo V-perp. Agreement on
/// these generators extends to everything by convexity, since the coset
/// norm never exceeds the ambient dual norm.
bool quotient_dual_check(const Submodule& V);

struct BilinearForm {
    ModuleSpecPtr left;
    ModuleSpecPtr right;
    std::vector<MatQ> matrices; // per atom, left_dim x right_dim; value x^T B y
};

BilinearForm make_bilinear(ModuleSpecPtr left, ModuleSpecPtr right,
                           std::vector<MatQ> matrices);

L0Function bilinear_apply(const BilinearForm& b, const Element& v, const Element& w);

/// sup of |b(x, y)| over both unit balls, pointwise; same route matrix as
/// hom_pointwise_norm.
NormFunction bilinear_norm(const BilinearForm& b);

/// v -> b(v, .) as a map into the right dual; |curry(b)| = |b|.
Homomorphism curry(const BilinearForm& b);

} // namespace l0t
