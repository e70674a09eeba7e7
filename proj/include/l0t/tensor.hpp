#pragma once

// Fiberwise tensor products: coefficient matrices per atom, the null
// criterion, projective / injective / Hilbert-Schmidt pointwise norms with
// certificates, maps of homomorphisms, and the operator realizations.

#include "l0t/hom.hpp"
#include "l0t/module.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l0t {

struct Tensor {
    ModuleSpecPtr left;
    ModuleSpecPtr right;
    std::vector<MatQ> matrices; // per atom, left_dim x right_dim
};

Tensor make_tensor(ModuleSpecPtr left, ModuleSpecPtr right, std::vector<MatQ> matrices);
Tensor zero_tensor(const ModuleSpecPtr& left, const ModuleSpecPtr& right);
Tensor tensor_add(const Tensor& a, const Tensor& b);
Tensor tensor_scale(const Rational& c, const Tensor& a);
bool tensor_equal(const Tensor& a, const Tensor& b);

using Representation = std::vector<std::pair<Element, Element>>;

/// Sum of outer products per atom; representation-independent.
Tensor from_representation(const Representation& rep);
Tensor elementary_tensor(const Element& v, const Element& w);

bool is_null(const Tensor& a);

/// Dual criterion: a tensor vanishes iff every dual-vertex pair evaluates
/// to zero. Returns whether the criterion's verdict matches is_null; the
/// vertex sets span the duals, so disagreement would expose a bug.
bool null_criterion_agrees(const Tensor& a);

enum class TensorFlavor { Pi, Eps, Hs };

enum class PiRoute { Vertex, Nuclear, Bracket };

struct PiWitnessTerm {
    Rational coeff; // > 0
    VecQ x;
    VecQ y;
};

struct PiAtom {
    NormValue value;
    PiRoute route = PiRoute::Vertex;
    std::vector<PiWitnessTerm> witness; // vertex route: sum coeff x y^T = A
    MatQ dual_certificate;              // vertex route: |b| <= 1, <B,A> = value
    std::optional<Rational> lower;      // bracket route bounds
    std::optional<Rational> upper;
};

struct PiResult {
    MeasureSpacePtr space;
    std::vector<PiAtom> atoms;
    NormFunction norms() const;
};

/// Projective pointwise norm. Polyhedral pairs run an exact gauge LP over
/// vertex outer products; l2 pairs use the nuclear norm (float, tol 1e-7);
/// a polyhedral factor against a planar l2 factor gets certified rational
/// bounds from bracketing polygons.
PiResult projective_norm(const Tensor& a);

/// Injective pointwise norm: dual-vertex sweeps, exact where polyhedral
/// data exists on at least one side; spectral float for l2 x l2.
NormFunction injective_norm(const Tensor& a);

/// Weighted squared Frobenius norm per atom; exact; l2 fibers only.
L0Function hs_norm_squared(const Tensor& a);

/// eps <= HS <= pi per atom (l2 fibers); float faces compared with the
/// routes' combined tolerances. On violation returns false and, when asked,
/// reports the offending atom with all three values.
bool crossnorm_sandwich_check(const Tensor& a, std::string* report = nullptr);

/// (T x S)(alpha): per atom M_T A M_S^T. The flavor names the norm the
/// operator identity |T x S| = |T||S| is checked under; the map itself is
/// flavor-independent.
Tensor tensor_of_homs(const Homomorphism& T, const Homomorphism& S,
                      const Tensor& a, TensorFlavor flavor);

/// Frobenius pairing <B, A> per atom: the linearization of a bounded
/// bilinear form through the projective product.
L0Function pairing_with_bilinear(const BilinearForm& b, const Tensor& a);

/// omega^T A eta per atom; both functionals must sit in their dual discs.
L0Function iota_evaluate(const Tensor& a, const Element& omega, const Element& eta);

/// L_alpha: M* -> N (matrix A^T) and R_alpha: N* -> M (matrix A);
/// both have pointwise operator norm equal to the injective norm.
std::pair<Homomorphism, Homomorphism> realize_L_R(const Tensor& a);

} // namespace l0t
