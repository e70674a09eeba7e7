#pragma once

// Internal JSON emission for work documents. The parser in document.cpp
// accepts exactly what Builder writes, which is what keeps emitted
// counterexample and instance documents round-trippable.

#include "l0t/document.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace l0t::docjson {

using Json = nlohmann::json;

Json vec(const VecQ& v);
Json mat(const MatQ& m);

/// lp and poly descriptors only; block metadata is flattened to the norm
/// it denotes (merged lp weights or materialized vertex lists).
Json descriptor(const std::string& id, const NormDescriptor& d);

class Builder {
public:
    Builder();

    void space(const std::string& id, const MeasureSpacePtr& s);
    /// Registers one norm per atom under "<id>.n<k>".
    void module(const std::string& id, const std::string& space_id, const ModuleSpecPtr& M);
    void element(const std::string& id, const std::string& module_id, const Element& v);
    void hom(const std::string& id, const std::string& source_id,
             const std::string& target_id, const Homomorphism& T);
    void form(const std::string& id, const std::string& left_id,
              const std::string& right_id, const BilinearForm& b);
    void tensor(const std::string& id, const std::string& left_id,
                const std::string& right_id, const Tensor& a);
    void atom_map(const std::string& id, const std::string& source_id,
                  const std::string& target_id, const AtomMap& phi);
    void family_geometric(const std::string& id, const std::string& base_id,
                          const Rational& ratio);
    void family_harmonic(const std::string& id, const std::string& space_id);
    void assertion(Json a);

    std::string dump() const;

private:
    Json doc_;
};

} // namespace l0t::docjson
