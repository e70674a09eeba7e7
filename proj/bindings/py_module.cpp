// Python face of the library: document checking, pointwise norms, tensor
// norms, and the seeded verification suites. Documents travel as JSON
// strings and every value comes back formatted, so rationals stay exact
// end to end.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l0t/cli.hpp"
#include "l0t/document.hpp"
#include "l0t/error.hpp"
#include "l0t/registry.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace l0t;

py::list check_document(const std::string& text) {
    WorkDocument doc = parse_document(text);
    py::list rows;
    for (const Assertion& a : doc.assertions) {
        AssertionOutcome o = run_assertion(doc, a);
        rows.append(py::make_tuple(a.name, o.pass, o.detail));
    }
    return rows;
}

py::dict element_norm(const std::string& text, const std::string& element) {
    WorkDocument doc = parse_document(text);
    NormFunction n = pointwise_norm(doc_element(doc, element));
    py::dict out;
    for (size_t k = 0; k < n.values.size(); ++k)
        out[py::str(n.space->atom(static_cast<int>(k)).id)] = format_norm_value(n.values[k]);
    return out;
}

py::dict tensor_norm(const std::string& text, const std::string& tensor,
                     const std::string& flavor) {
    if (flavor != "pi" && flavor != "eps" && flavor != "hs")
        fail(ErrorKind::Precondition, "flavor must be pi, eps, or hs");
    WorkDocument doc = parse_document(text);
    const Tensor& t = doc_tensor(doc, tensor);
    std::vector<NormValue> values;
    if (flavor == "hs") {
        L0Function h = hs_norm_squared(t);
        for (int k = 0; k < t.left->atom_count(); ++k)
            values.push_back(NormValue::from_exact_sq(h.at(k)));
    } else {
        values = (flavor == "pi" ? projective_norm(t).norms() : injective_norm(t)).values;
    }
    py::dict out;
    for (int k = 0; k < t.left->atom_count(); ++k)
        out[py::str(t.left->space()->atom(k).id)] = format_norm_value(values[k]);
    return out;
}

py::tuple verify(const std::string& theorem, std::uint64_t seed, int cases, double tol) {
    SuiteResult r = run_suite(theorem, seed, cases, -1, tol);
    py::list rows;
    for (const SuiteCase& c : r.results) rows.append(py::make_tuple(c.index, c.pass, c.detail));
    return py::make_tuple(r.cases - r.failures, r.cases, rows);
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli_run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "pointwise tensor norms over finite atomic measure spaces";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("check_document", &check_document, py::arg("text"),
          "Run every assertion in a work document; returns (name, passed, detail) rows.");
    m.def("element_norm", &element_norm, py::arg("text"), py::arg("element"),
          "Pointwise norm of an element, one formatted value per atom.");
    m.def("tensor_norm", &tensor_norm, py::arg("text"), py::arg("tensor"), py::arg("flavor"),
          "Tensor norm per atom; flavor is pi, eps, or hs.");
    m.def("verify", &verify, py::arg("theorem"), py::arg("seed") = 1, py::arg("cases") = 25,
          py::arg("tol") = 1e-7, "Run one seeded suite; returns (passed, total, case rows).");
    m.def("theorem_ids", [] { return theorem_ids(); }, "Suite identifiers accepted by verify.");
    m.def("cli", &cli, py::arg("args"),
          "Invoke the command line entry; returns (exit code, stdout, stderr).");
}
