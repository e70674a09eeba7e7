#pragma once

// Finite-dimensional norm engine. A descriptor is either a weighted l1/l2/linf
// norm or a polyhedral norm given by a symmetric primal vertex list and the
// matching dual vertex list (a polar pair: every listed vector pairs to at
// most 1 against the other list and achieves 1 somewhere). Vertex lists store
// one representative per antipodal pair; -x is implied.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "l0t/linalg.hpp"
#include "l0t/rational.hpp"

namespace l0t {

enum class NormKind { L1, L2, Linf, Poly };

struct NormDescriptor;

/// Present when a descriptor was assembled as a p-combination of blocks
/// (p = 1 or infinity). The materialized vertex lists already realize the
/// combined norm; the metadata keeps row extraction structural.
struct BlockStructure {
    bool sum; // true: l1 combination, false: linf combination
    std::vector<NormDescriptor> blocks;
};

struct NormDescriptor {
    int dim = 0;
    NormKind kind = NormKind::L1;
    std::vector<Rational> weights; // Lp kinds, all positive, length dim
    std::vector<VecQ> primal;      // Poly, representatives up to sign
    std::vector<VecQ> dual;        // Poly
    std::shared_ptr<const BlockStructure> block;

    bool polyhedral_kind() const { return kind != NormKind::L2; }

    static NormDescriptor lp(NormKind kind, int dim, std::vector<Rational> weights = {});
    /// Validates spans and the pairing bound; full polar certification is
    /// the separate polarity_check.
    static NormDescriptor poly(std::vector<VecQ> primal, std::vector<VecQ> dual);

    bool operator==(const NormDescriptor& other) const;
};

/// A computed norm: float face plus whatever exact form the route preserved.
/// When `exact` is set the value is that rational; when only `exact_sq` is
/// set the value is the square root of that rational (l2 routes).
struct NormValue {
    std::optional<Rational> exact;
    std::optional<Rational> exact_sq;
    double value = 0.0;
    double tol = 0.0;

    static NormValue from_exact(const Rational& q);
    static NormValue from_exact_sq(const Rational& sq, double tol = 1e-9);
    static NormValue from_float(double v, double tol);
    static NormValue zero() { return from_exact(Rational(0)); }

    bool is_exact_zero() const { return exact && *exact == 0; }
};

NormValue nv_add(const NormValue& a, const NormValue& b);
NormValue nv_mul(const NormValue& a, const NormValue& b);
NormValue nv_max(const NormValue& a, const NormValue& b);
/// Exact when both carry squares: norms are nonnegative so squares order them.
bool nv_less_equal(const NormValue& a, const NormValue& b);
bool nv_equal(const NormValue& a, const NormValue& b, double tol);
/// Rational upper bound value + tol, for exact comparisons against floats.
Rational nv_upper(const NormValue& a);

NormValue norm_eval(const NormDescriptor& desc, const VecQ& x);

NormDescriptor dual_descriptor(const NormDescriptor& desc);

/// Unit-ball vertex representatives (one per antipodal pair).
/// ErrorKind::Unsupported for l2 kinds.
std::vector<VecQ> primal_vertex_reps(const NormDescriptor& desc);
std::vector<VecQ> dual_vertex_reps(const NormDescriptor& desc);

enum class Polarity { Certified, Plausible, Refuted };
std::string polarity_name(Polarity p);

/// Refutes on a violated pairing bound or a vertex that never achieves 1;
/// certifies conv(+-D) = polar of conv(+-V) by facet enumeration in dim <= 3;
/// returns Plausible above dimension 3.
Polarity polarity_check(const std::vector<VecQ>& V, const std::vector<VecQ>& D);

/// Facet normals of conv(+-V), i.e. the vertices of the polar body, as
/// representatives up to sign. Exact; dim <= 3 only.
std::vector<VecQ> polar_vertices(const std::vector<VecQ>& V, int dim);

NormDescriptor block_l1_descriptor(const std::vector<NormDescriptor>& blocks);
NormDescriptor block_linf_descriptor(const std::vector<NormDescriptor>& blocks);

} // namespace l0t
