#pragma once

// Banach modules over a finite atomic base, held fiberwise: one normed
// space per atom, elements as one coordinate vector per atom. Everything
// is pure and exact except where a fiber's l2 norm is irrational, in which
// case the float face of NormValue carries the value.

#include "l0t/measure.hpp"
#include "l0t/norms.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace l0t {

class ModuleSpec {
public:
    ModuleSpec(MeasureSpacePtr space, std::vector<NormDescriptor> fibers);

    const MeasureSpacePtr& space() const { return space_; }
    int atom_count() const { return space_->atom_count(); }
    const NormDescriptor& fiber(int k) const { return fibers_[k]; }
    const std::vector<NormDescriptor>& fibers() const { return fibers_; }
    int dim(int k) const { return fibers_[k].dim; }

    /// Atoms carrying a nonzero fiber.
    std::vector<std::string> support_atoms() const;

    bool operator==(const ModuleSpec& other) const;

private:
    MeasureSpacePtr space_;
    std::vector<NormDescriptor> fibers_;
};

using ModuleSpecPtr = std::shared_ptr<const ModuleSpec>;

ModuleSpecPtr make_module(MeasureSpacePtr space, std::vector<NormDescriptor> fibers);

bool same_module(const ModuleSpecPtr& a, const ModuleSpecPtr& b);

class Element {
public:
    Element(ModuleSpecPtr module, std::vector<VecQ> vectors);

    const ModuleSpecPtr& module() const { return module_; }
    const VecQ& at(int k) const { return vectors_[k]; }
    const std::vector<VecQ>& vectors() const { return vectors_; }
    bool is_zero() const;

private:
    ModuleSpecPtr module_;
    std::vector<VecQ> vectors_;
};

Element zero_element(const ModuleSpecPtr& module);
Element elem_add(const Element& a, const Element& b);
Element elem_sub(const Element& a, const Element& b);
Element elem_neg(const Element& a);
Element elem_scale(const Rational& c, const Element& a);
bool elem_equal(const Element& a, const Element& b);

/// One norm value per atom; the exact faces survive whenever the route did
/// not pass through an irrational square root.
struct NormFunction {
    MeasureSpacePtr space;
    std::vector<NormValue> values;

    bool all_exact() const;
    /// Rational projection: exact values verbatim, float faces converted.
    L0Function to_l0() const;
};

bool nf_equal(const NormFunction& a, const NormFunction& b, double tol);
bool nf_less_equal(const NormFunction& a, const NormFunction& b);

NormFunction pointwise_norm(const Element& v);

/// Integral of min(|a-b|, 1) against the normalized weights.
NormValue module_distance(const Element& a, const Element& b);

Element scalar_action(const L0Function& f, const Element& v);

/// Zero where |v| vanishes, v/|v| elsewhere. Exact whenever each active
/// fiber norm is rational; irrational l2 norms divide by the float face.
Element sgn(const Element& v);

bool unit_disc_member(const Element& v, double tol = 0.0);
bool unit_sphere_member(const Element& v, double tol = 0.0);

/// Piecewise assembly: parts carry disjoint atom subsets covering the space.
Element glue(const std::vector<std::pair<std::vector<std::string>, Element>>& parts);

class Submodule {
public:
    Submodule(ModuleSpecPtr module, std::vector<std::vector<VecQ>> basis);

    const ModuleSpecPtr& module() const { return module_; }
    const std::vector<VecQ>& basis_at(int k) const { return basis_[k]; }
    int rank_at(int k) const { return static_cast<int>(basis_[k].size()); }
    bool contains(const Element& v) const;

private:
    ModuleSpecPtr module_;
    std::vector<std::vector<VecQ>> basis_;
};

Submodule zero_submodule(const ModuleSpecPtr& module);
Submodule full_submodule(const ModuleSpecPtr& module);
Submodule span_submodule(const ModuleSpecPtr& module, const std::vector<Element>& generators);

/// |w + V| per atom, the fiberwise coset minimum.
NormFunction quotient_norm(const Submodule& V, const Element& w);

} // namespace l0t
