#include "l0t/pullback.hpp"

#include "l0t/error.hpp"

namespace l0t {

namespace {

void require_over_target(const AtomMap& phi, const MeasureSpacePtr& space) {
    if (!same_space(space, phi.target))
        fail(ErrorKind::Precondition, "object does not live over the map's target");
}

} // namespace

AtomMap make_atom_map(MeasureSpacePtr source, MeasureSpacePtr target,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> image(source->atom_count(), -1);
    for (const auto& [from, to] : pairs) {
        const int i = source->index_of(from);
        if (image[i] != -1)
            fail(ErrorKind::Precondition, "atom mapped twice: " + from);
        image[i] = target->index_of(to);
    }
    for (int i = 0; i < source->atom_count(); ++i)
        if (image[i] == -1)
            fail(ErrorKind::Precondition,
                 "atom unmapped: " + source->atom(i).id);
    return AtomMap{std::move(source), std::move(target), std::move(image)};
}

AtomMap identity_atom_map(const MeasureSpacePtr& space) {
    std::vector<int> image(space->atom_count());
    for (int i = 0; i < space->atom_count(); ++i) image[i] = i;
    return AtomMap{space, space, std::move(image)};
}

AtomMap compose_atom_maps(const AtomMap& first, const AtomMap& second) {
    if (!same_space(second.target, first.source))
        fail(ErrorKind::Precondition, "maps do not compose");
    std::vector<int> image(second.source->atom_count());
    for (size_t i = 0; i < image.size(); ++i) image[i] = first.image[second.image[i]];
    return AtomMap{second.source, first.target, std::move(image)};
}

ModuleSpecPtr pullback_module(const AtomMap& phi, const ModuleSpecPtr& M) {
    require_over_target(phi, M->space());
    std::vector<NormDescriptor> fibers;
    for (int x = 0; x < phi.source->atom_count(); ++x)
        fibers.push_back(M->fiber(phi.image[x]));
    return make_module(phi.source, std::move(fibers));
}

Element pullback_element(const AtomMap& phi, const Element& v) {
    require_over_target(phi, v.module()->space());
    std::vector<VecQ> vectors;
    for (int x = 0; x < phi.source->atom_count(); ++x)
        vectors.push_back(v.at(phi.image[x]));
    return Element(pullback_module(phi, v.module()), std::move(vectors));
}

L0Function pullback_l0(const AtomMap& phi, const L0Function& f) {
    require_over_target(phi, f.space());
    std::vector<Rational> values;
    for (int x = 0; x < phi.source->atom_count(); ++x)
        values.push_back(f.at(phi.image[x]));
    return L0Function(phi.source, std::move(values));
}

Element pullback_functional(const AtomMap& phi, const Element& omega) {
    // dual coordinates copy like primal ones; the fiber descriptors are
    // already the duals, so pullback_element does the work
    return pullback_element(phi, omega);
}

Tensor pullback_tensor(const AtomMap& phi, const Tensor& a) {
    require_over_target(phi, a.left->space());
    std::vector<MatQ> ms;
    for (int x = 0; x < phi.source->atom_count(); ++x)
        ms.push_back(a.matrices[phi.image[x]]);
    return make_tensor(pullback_module(phi, a.left), pullback_module(phi, a.right),
                       std::move(ms));
}

bool pullback_tensor_check(const AtomMap& phi, const Tensor& a, TensorFlavor flavor) {
    Tensor pa = pullback_tensor(phi, a);
    if (flavor == TensorFlavor::Hs) {
        L0Function hx = hs_norm_squared(pa);
        L0Function hy = hs_norm_squared(a);
        for (int x = 0; x < phi.source->atom_count(); ++x)
            if (hx.at(x) != hy.at(phi.image[x])) return false;
        return true;
    }
    NormFunction nx, ny;
    if (flavor == TensorFlavor::Pi) {
        nx = projective_norm(pa).norms();
        ny = projective_norm(a).norms();
    } else {
        nx = injective_norm(pa);
        ny = injective_norm(a);
    }
    for (int x = 0; x < phi.source->atom_count(); ++x)
        if (!nv_equal(nx.values[x], ny.values[phi.image[x]], 1e-7)) return false;
    return true;
}

} // namespace l0t
