#pragma once

// Pullbacks along maps of atoms: modules, elements, functionals, and
// tensors, with the norm-transport identities. Fibers are copied, so every
// pointwise quantity of a pulled-back object is the original composed with
// the map.

#include "l0t/tensor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace l0t {

struct AtomMap {
    MeasureSpacePtr source;
    MeasureSpacePtr target;
    std::vector<int> image; // source atom index -> target atom index
};

AtomMap make_atom_map(MeasureSpacePtr source, MeasureSpacePtr target,
                      const std::vector<std::pair<std::string, std::string>>& pairs);
AtomMap identity_atom_map(const MeasureSpacePtr& space);

/// first after second: maps X -> Z through second: X -> Y, first: Y -> Z.
AtomMap compose_atom_maps(const AtomMap& first, const AtomMap& second);

ModuleSpecPtr pullback_module(const AtomMap& phi, const ModuleSpecPtr& M);

Element pullback_element(const AtomMap& phi, const Element& v);

L0Function pullback_l0(const AtomMap& phi, const L0Function& f);

/// Pullback of a dual element: a functional on M becomes a functional on
/// the pullback of M over each source atom. In the atomic model this map
/// is onto the full dual, which is what makes the pairing identity
/// I(omega)(pullback v) = omega(v) composed with the map exhaustive.
Element pullback_functional(const AtomMap& phi, const Element& omega);

Tensor pullback_tensor(const AtomMap& phi, const Tensor& a);

/// Norm transport through the flavor's pointwise norm: the pulled-back
/// tensor's norm at x equals the original's at phi(x), exactly on exact
/// routes and within 1e-7 on float routes.
bool pullback_tensor_check(const AtomMap& phi, const Tensor& a, TensorFlavor flavor);

} // namespace l0t
