#pragma once

// Work documents: one JSON object declaring spaces, norms, modules,
// elements, homs, bilinear forms, tensors, atom maps, countable families,
// and named assertions. Rationals travel as "p/q" strings with q > 0.
// Parsing resolves every reference up front; assertions run one at a time
// and report pass/fail with a short detail line.

#include "l0t/pullback.hpp"
#include "l0t/spaces.hpp"
#include "l0t/summability.hpp"
#include "l0t/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace l0t {

struct Assertion {
    std::string name;
    std::string type;
    std::string payload; // the assertion object, reserialized JSON
};

struct WorkDocument {
    std::string version;
    std::map<std::string, MeasureSpacePtr> spaces;
    std::map<std::string, NormDescriptor> norms;
    std::map<std::string, ModuleSpecPtr> modules;
    std::map<std::string, Element> elements;
    std::map<std::string, Homomorphism> homs;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, Tensor> tensors;
    std::map<std::string, AtomMap> atom_maps;
    std::map<std::string, CountableFamily> families;
    std::vector<Assertion> assertions;
};

/// Parse and resolve. Malformed JSON or rationals raise Parse (with the
/// byte position for JSON syntax), unknown ids raise Reference.
WorkDocument parse_document(const std::string& text);

struct AssertionOutcome {
    bool pass = false;
    std::string detail; // empty on pass unless the check yields values
};

AssertionOutcome run_assertion(const WorkDocument& doc, const Assertion& a);

/// Lookups by id; ErrorKind::Reference when missing.
const Element& doc_element(const WorkDocument& doc, const std::string& id);
const Tensor& doc_tensor(const WorkDocument& doc, const std::string& id);

/// "p/q" for exact values, "sqrt(p/q)" for exact squares, otherwise a
/// fixed-precision decimal with its tolerance. Stable across runs.
std::string format_norm_value(const NormValue& v);

} // namespace l0t
