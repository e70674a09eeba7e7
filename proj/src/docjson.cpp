#include "docjson.hpp"

#include "l0t/error.hpp"

namespace l0t::docjson {

Json vec(const VecQ& v) {
    Json a = Json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(format_rational(v[i]));
    return a;
}

Json mat(const MatQ& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json descriptor(const std::string& id, const NormDescriptor& d) {
    Json n{{"id", id}};
    if (d.kind == NormKind::Poly) {
        n["kind"] = "poly";
        Json primal = Json::array(), dual = Json::array();
        for (const VecQ& v : d.primal) primal.push_back(vec(v));
        for (const VecQ& v : d.dual) dual.push_back(vec(v));
        n["primal"] = std::move(primal);
        n["dual"] = std::move(dual);
        return n;
    }
    n["kind"] = d.kind == NormKind::L1 ? "l1" : d.kind == NormKind::L2 ? "l2" : "linf";
    n["dim"] = d.dim;
    bool unit = true;
    for (const Rational& w : d.weights) unit = unit && w == 1;
    if (!d.weights.empty() && !unit) {
        Json ws = Json::array();
        for (const Rational& w : d.weights) ws.push_back(format_rational(w));
        n["weights"] = std::move(ws);
    }
    return n;
}

Builder::Builder() { doc_["version"] = "1"; }

void Builder::space(const std::string& id, const MeasureSpacePtr& s) {
    Json atoms = Json::array();
    for (int k = 0; k < s->atom_count(); ++k)
        atoms.push_back({{"id", s->atom(k).id}, {"mass", format_rational(s->atom(k).weight)}});
    doc_["spaces"].push_back({{"id", id}, {"atoms", std::move(atoms)}});
}

void Builder::module(const std::string& id, const std::string& space_id,
                     const ModuleSpecPtr& M) {
    Json fibers = Json::array();
    for (int k = 0; k < M->atom_count(); ++k) {
        std::string nid = id + ".n" + std::to_string(k);
        doc_["norms"].push_back(descriptor(nid, M->fiber(k)));
        fibers.push_back(nid);
    }
    doc_["modules"].push_back({{"id", id}, {"space", space_id}, {"fibers", std::move(fibers)}});
}

void Builder::element(const std::string& id, const std::string& module_id,
                      const Element& v) {
    Json vectors = Json::array();
    for (int k = 0; k < v.module()->atom_count(); ++k) vectors.push_back(vec(v.at(k)));
    doc_["elements"].push_back(
        {{"id", id}, {"module", module_id}, {"vectors", std::move(vectors)}});
}

void Builder::hom(const std::string& id, const std::string& source_id,
                  const std::string& target_id, const Homomorphism& T) {
    Json mats = Json::array();
    for (const MatQ& m : T.matrices) mats.push_back(mat(m));
    doc_["homs"].push_back({{"id", id},
                            {"source", source_id},
                            {"target", target_id},
                            {"matrices", std::move(mats)}});
}

void Builder::form(const std::string& id, const std::string& left_id,
                   const std::string& right_id, const BilinearForm& b) {
    Json mats = Json::array();
    for (const MatQ& m : b.matrices) mats.push_back(mat(m));
    doc_["forms"].push_back({{"id", id},
                             {"left", left_id},
                             {"right", right_id},
                             {"matrices", std::move(mats)}});
}

void Builder::tensor(const std::string& id, const std::string& left_id,
                     const std::string& right_id, const Tensor& a) {
    Json mats = Json::array();
    for (const MatQ& m : a.matrices) mats.push_back(mat(m));
    doc_["tensors"].push_back({{"id", id},
                               {"left", left_id},
                               {"right", right_id},
                               {"matrices", std::move(mats)}});
}

void Builder::atom_map(const std::string& id, const std::string& source_id,
                       const std::string& target_id, const AtomMap& phi) {
    Json pairs = Json::array();
    for (int k = 0; k < phi.source->atom_count(); ++k)
        pairs.push_back({phi.source->atom(k).id, phi.target->atom(phi.image[k]).id});
    doc_["atom_maps"].push_back({{"id", id},
                                 {"source", source_id},
                                 {"target", target_id},
                                 {"pairs", std::move(pairs)}});
}

void Builder::family_geometric(const std::string& id, const std::string& base_id,
                               const Rational& ratio) {
    doc_["families"].push_back(
        {{"id", id}, {"kind", "geometric"}, {"base", base_id}, {"ratio", format_rational(ratio)}});
}

void Builder::family_harmonic(const std::string& id, const std::string& space_id) {
    doc_["families"].push_back({{"id", id}, {"kind", "harmonic"}, {"space", space_id}});
}

void Builder::assertion(Json a) { doc_["assertions"].push_back(std::move(a)); }

std::string Builder::dump() const { return doc_.dump(2) + "\n"; }

} // namespace l0t::docjson
