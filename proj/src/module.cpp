#include "l0t/module.hpp"

#include "l0t/error.hpp"
#include "l0t/simplex.hpp"

#include <algorithm>
#include <set>

namespace l0t {

ModuleSpec::ModuleSpec(MeasureSpacePtr space, std::vector<NormDescriptor> fibers)
    : space_(std::move(space)), fibers_(std::move(fibers)) {
    if (!space_)
        fail(ErrorKind::Precondition, "module needs a measure space");
    if (static_cast<int>(fibers_.size()) != space_->atom_count())
        fail(ErrorKind::Precondition, "one fiber per atom required");
}

std::vector<std::string> ModuleSpec::support_atoms() const {
    std::vector<std::string> out;
    for (int k = 0; k < atom_count(); ++k)
        if (fibers_[k].dim > 0) out.push_back(space_->atom(k).id);
    return out;
}

bool ModuleSpec::operator==(const ModuleSpec& other) const {
    if (!same_space(space_, other.space_)) return false;
    return fibers_ == other.fibers_;
}

ModuleSpecPtr make_module(MeasureSpacePtr space, std::vector<NormDescriptor> fibers) {
    return std::make_shared<ModuleSpec>(std::move(space), std::move(fibers));
}

bool same_module(const ModuleSpecPtr& a, const ModuleSpecPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Element::Element(ModuleSpecPtr module, std::vector<VecQ> vectors)
    : module_(std::move(module)), vectors_(std::move(vectors)) {
    if (!module_)
        fail(ErrorKind::Precondition, "element needs a module");
    if (static_cast<int>(vectors_.size()) != module_->atom_count())
        fail(ErrorKind::Precondition, "one fiber vector per atom required");
    for (int k = 0; k < module_->atom_count(); ++k)
        if (vectors_[k].size() != module_->dim(k))
            fail(ErrorKind::Precondition, "fiber vector dimension mismatch");
}

bool Element::is_zero() const {
    return std::all_of(vectors_.begin(), vectors_.end(),
                       [](const VecQ& v) { return v.isZero(); });
}

Element zero_element(const ModuleSpecPtr& module) {
    std::vector<VecQ> vs;
    for (int k = 0; k < module->atom_count(); ++k) vs.push_back(zero_vec(module->dim(k)));
    return Element(module, std::move(vs));
}

namespace {

void require_same_module(const Element& a, const Element& b) {
    if (!same_module(a.module(), b.module()))
        fail(ErrorKind::Precondition, "elements live in different modules");
}

} // namespace

Element elem_add(const Element& a, const Element& b) {
    require_same_module(a, b);
    std::vector<VecQ> vs;
    for (int k = 0; k < a.module()->atom_count(); ++k) vs.push_back(a.at(k) + b.at(k));
    return Element(a.module(), std::move(vs));
}

Element elem_sub(const Element& a, const Element& b) {
    require_same_module(a, b);
    std::vector<VecQ> vs;
    for (int k = 0; k < a.module()->atom_count(); ++k) vs.push_back(a.at(k) - b.at(k));
    return Element(a.module(), std::move(vs));
}

Element elem_neg(const Element& a) {
    std::vector<VecQ> vs;
    for (int k = 0; k < a.module()->atom_count(); ++k) vs.push_back(-a.at(k));
    return Element(a.module(), std::move(vs));
}

Element elem_scale(const Rational& c, const Element& a) {
    std::vector<VecQ> vs;
    for (int k = 0; k < a.module()->atom_count(); ++k) vs.push_back(c * a.at(k));
    return Element(a.module(), std::move(vs));
}

bool elem_equal(const Element& a, const Element& b) {
    if (!same_module(a.module(), b.module())) return false;
    for (int k = 0; k < a.module()->atom_count(); ++k)
        if (!vec_equal(a.at(k), b.at(k))) return false;
    return true;
}

bool NormFunction::all_exact() const {
    return std::all_of(values.begin(), values.end(),
                       [](const NormValue& v) { return v.exact.has_value(); });
}

L0Function NormFunction::to_l0() const {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const NormValue& v : values)
        out.push_back(v.exact ? *v.exact : rational_from_double(v.value));
    return L0Function(space, std::move(out));
}

bool nf_equal(const NormFunction& a, const NormFunction& b, double tol) {
    if (!same_space(a.space, b.space)) return false;
    for (size_t k = 0; k < a.values.size(); ++k)
        if (!nv_equal(a.values[k], b.values[k], tol)) return false;
    return true;
}

bool nf_less_equal(const NormFunction& a, const NormFunction& b) {
    if (!same_space(a.space, b.space)) return false;
    for (size_t k = 0; k < a.values.size(); ++k)
        if (!nv_less_equal(a.values[k], b.values[k])) return false;
    return true;
}

NormFunction pointwise_norm(const Element& v) {
    NormFunction out;
    out.space = v.module()->space();
    for (int k = 0; k < v.module()->atom_count(); ++k)
        out.values.push_back(norm_eval(v.module()->fiber(k), v.at(k)));
    return out;
}

NormValue module_distance(const Element& a, const Element& b) {
    require_same_module(a, b);
    const auto& w = a.module()->space()->prob_weights();
    NormValue acc = NormValue::zero();
    for (int k = 0; k < a.module()->atom_count(); ++k) {
        NormValue n = norm_eval(a.module()->fiber(k), VecQ(a.at(k) - b.at(k)));
        NormValue clipped;
        if (n.exact) {
            clipped = NormValue::from_exact(std::min(*n.exact, Rational(1)));
        } else if (n.exact_sq && *n.exact_sq >= 1) {
            clipped = NormValue::from_exact(Rational(1));
        } else if (n.exact_sq) {
            clipped = n;
        } else {
            clipped = n.value >= 1 ? NormValue::from_exact(Rational(1)) : n;
        }
        acc = nv_add(acc, nv_mul(NormValue::from_exact(w[k]), clipped));
    }
    return acc;
}

Element scalar_action(const L0Function& f, const Element& v) {
    if (!same_space(f.space(), v.module()->space()))
        fail(ErrorKind::Precondition, "scalar field lives on a different space");
    std::vector<VecQ> vs;
    for (int k = 0; k < v.module()->atom_count(); ++k) vs.push_back(f.at(k) * v.at(k));
    return Element(v.module(), std::move(vs));
}

Element sgn(const Element& v) {
    std::vector<VecQ> vs;
    for (int k = 0; k < v.module()->atom_count(); ++k) {
        const VecQ& x = v.at(k);
        if (x.isZero()) {
            vs.push_back(x);
            continue;
        }
        NormValue n = norm_eval(v.module()->fiber(k), x);
        const Rational scale = n.exact ? *n.exact : rational_from_double(n.value);
        vs.push_back(VecQ(x / scale));
    }
    return Element(v.module(), std::move(vs));
}

namespace {

bool nv_at_most_one(const NormValue& n, double tol) {
    if (n.exact) return *n.exact <= 1;
    if (n.exact_sq) return *n.exact_sq <= 1;
    return n.value <= 1 + tol;
}

bool nv_is_one(const NormValue& n, double tol) {
    if (n.exact) return *n.exact == 1;
    if (n.exact_sq) return *n.exact_sq == 1;
    return std::abs(n.value - 1) <= tol;
}

} // namespace

bool unit_disc_member(const Element& v, double tol) {
    for (int k = 0; k < v.module()->atom_count(); ++k) {
        NormValue n = norm_eval(v.module()->fiber(k), v.at(k));
        if (!nv_at_most_one(n, tol)) return false;
    }
    return true;
}

bool unit_sphere_member(const Element& v, double tol) {
    for (int k = 0; k < v.module()->atom_count(); ++k) {
        if (v.at(k).isZero()) continue;
        NormValue n = norm_eval(v.module()->fiber(k), v.at(k));
        if (!nv_is_one(n, tol)) return false;
    }
    return true;
}

Element glue(const std::vector<std::pair<std::vector<std::string>, Element>>& parts) {
    if (parts.empty())
        fail(ErrorKind::Precondition, "glue needs at least one part");
    const ModuleSpecPtr& module = parts.front().second.module();
    const MeasureSpacePtr& space = module->space();
    std::vector<int> owner(space->atom_count(), -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (!same_module(parts[p].second.module(), module))
            fail(ErrorKind::Precondition, "glue parts live in different modules");
        for (const std::string& id : parts[p].first) {
            const int k = space->index_of(id);
            if (owner[k] != -1)
                fail(ErrorKind::Precondition, "atom '" + id + "' appears in two parts");
            owner[k] = static_cast<int>(p);
        }
    }
    std::vector<VecQ> vs;
    for (int k = 0; k < space->atom_count(); ++k) {
        if (owner[k] < 0)
            fail(ErrorKind::Precondition,
                 "atom '" + space->atom(k).id + "' missing from the partition");
        vs.push_back(parts[owner[k]].second.at(k));
    }
    return Element(module, std::move(vs));
}

Submodule::Submodule(ModuleSpecPtr module, std::vector<std::vector<VecQ>> basis)
    : module_(std::move(module)), basis_(std::move(basis)) {
    if (!module_)
        fail(ErrorKind::Precondition, "submodule needs a module");
    if (static_cast<int>(basis_.size()) != module_->atom_count())
        fail(ErrorKind::Precondition, "one fiber basis per atom required");
    for (int k = 0; k < module_->atom_count(); ++k) {
        for (const VecQ& b : basis_[k])
            if (b.size() != module_->dim(k))
                fail(ErrorKind::Precondition, "basis vector dimension mismatch");
        if (!basis_[k].empty()) {
            MatQ B = columns(basis_[k], module_->dim(k));
            if (rank_of(B) != static_cast<int>(basis_[k].size()))
                fail(ErrorKind::Precondition, "fiber basis is dependent");
        }
    }
}

bool Submodule::contains(const Element& v) const {
    if (!same_module(v.module(), module_)) return false;
    for (int k = 0; k < module_->atom_count(); ++k) {
        if (v.at(k).isZero()) continue;
        if (basis_[k].empty()) return false;
        MatQ B = columns(basis_[k], module_->dim(k));
        if (!solve_exact(B, v.at(k))) return false;
    }
    return true;
}

Submodule zero_submodule(const ModuleSpecPtr& module) {
    return Submodule(module, std::vector<std::vector<VecQ>>(module->atom_count()));
}

Submodule full_submodule(const ModuleSpecPtr& module) {
    std::vector<std::vector<VecQ>> basis(module->atom_count());
    for (int k = 0; k < module->atom_count(); ++k)
        for (int i = 0; i < module->dim(k); ++i) {
            VecQ e = zero_vec(module->dim(k));
            e[i] = 1;
            basis[k].push_back(e);
        }
    return Submodule(module, std::move(basis));
}

Submodule span_submodule(const ModuleSpecPtr& module, const std::vector<Element>& generators) {
    std::vector<std::vector<VecQ>> basis(module->atom_count());
    for (int k = 0; k < module->atom_count(); ++k) {
        std::vector<VecQ> cols;
        for (const Element& g : generators) {
            if (!same_module(g.module(), module))
                fail(ErrorKind::Precondition, "generator outside the module");
            if (!g.at(k).isZero()) cols.push_back(g.at(k));
        }
        // reduce to an independent subset, greedily and exactly
        std::vector<VecQ> kept;
        for (const VecQ& c : cols) {
            std::vector<VecQ> probe = kept;
            probe.push_back(c);
            MatQ P = columns(probe, module->dim(k));
            if (rank_of(P) == static_cast<int>(probe.size())) kept.push_back(c);
        }
        basis[k] = std::move(kept);
    }
    return Submodule(module, std::move(basis));
}

NormFunction quotient_norm(const Submodule& V, const Element& w) {
    if (!same_module(V.module(), w.module()))
        fail(ErrorKind::Precondition, "element outside the ambient module");
    NormFunction out;
    out.space = w.module()->space();
    for (int k = 0; k < w.module()->atom_count(); ++k) {
        auto r = min_norm_over_affine(w.module()->fiber(k), w.at(k), V.basis_at(k));
        out.values.push_back(r.value);
    }
    return out;
}

} // namespace l0t
