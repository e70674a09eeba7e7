#pragma once

// lp-sums of module copies over a finite index set, order-continuous
// function modules over a finite point set, and the structural
// isomorphisms tying both to tensor products with scalar factors.

#include "l0t/tensor.hpp"

#include <string>
#include <vector>

namespace l0t {

struct IndexedFamily {
    std::vector<Element> members; // nonempty, all over the same module
};

IndexedFamily make_family(std::vector<Element> members);

/// Finite discrete point set; every map from it is continuous, so the
/// order-continuous function module is simply one block per point.
struct FiniteSpaceK {
    std::vector<std::string> points; // nonempty, distinct
};

FiniteSpaceK make_points(std::vector<std::string> points);

/// Scalar module: one-dimensional l1 fiber on every atom.
ModuleSpecPtr scalar_module(const MeasureSpacePtr& space);

/// Pointwise p-combination of the members' norms (p = 1, 2 or infinity;
/// pass the corresponding lp kind). Exact faces survive sums and maxes;
/// the 2-combination keeps exact squares.
NormFunction ellp_norm(const IndexedFamily& fam, NormKind p);

/// Direct sum of `count` copies of M with the sum-of-block-norms fiber.
ModuleSpecPtr ell1_sum_module(int count, const ModuleSpecPtr& M);

struct VvIsoResult {
    IndexedFamily rows;
    bool equal;
};

/// Rows of the coefficient matrices as elements of the right factor;
/// `equal` asserts the projective norm is the l1-combination of the row
/// norms per atom (the l1-factor isomorphism).
VvIsoResult vv_iso_check(const Tensor& a);

/// The scalar double-construction coincidence: each atom row of a, read in
/// the l1 fiber, has norm equal to the plain sum of coordinate absolute
/// values. One row per atom.
bool two_ell1_check(const MeasureSpacePtr& space, const MatQ& a);

struct SphereQuotientResult {
    Homomorphism phi; // ell1_sum over G -> M, f -> sum f_g g
    bool verdict;     // phi is a quotient operator
};

/// Generators must lie on the unit sphere. The verdict holds exactly when
/// the symmetric hull of the generators' fiber vectors is the unit ball.
SphereQuotientResult sphere_quotient(const std::vector<Element>& G);

/// Diagonal tensors over l2 copies: sum f_i (e_i x e_i) has projective
/// norm sum |f_i| and injective norm max |f_i| per atom.
bool diagonal_check(const std::vector<L0Function>& fs);

/// Functions K -> M as |K| blocks of M's fibers under the max-block norm.
ModuleSpecPtr uc_module(const FiniteSpaceK& K, const ModuleSpecPtr& M);

/// Evaluation at a point: the block projection, with pointwise norm equal
/// to the support indicator of M.
Homomorphism evaluation_hom(const FiniteSpaceK& K, const ModuleSpecPtr& M,
                            const std::string& point);

/// For tensors whose left factor is uc_module(K, scalar): the injective
/// norm equals the max over points of the row norm in the right factor.
bool inj_tens_uc_check(const Tensor& a);

/// id (x) T on injective products over uc_module(K, scalar): for a quotient
/// operator T, every row built from target-ball vertices lifts rowwise
/// with minimal norm exactly 1, so id (x) T is again a quotient operator.
bool uc_quotient_tensor_check(const Homomorphism& T, const FiniteSpaceK& K);

} // namespace l0t
