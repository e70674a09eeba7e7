#include "l0t/cli.hpp"

#include "l0t/document.hpp"
#include "l0t/error.hpp"
#include "l0t/registry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

namespace l0t {

namespace {

using Json = nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CheckTally {
    int total = 0;
    int passed = 0;
};

void run_check_line(const WorkDocument& doc, const Assertion& a, std::ostream& out,
                    CheckTally& tally) {
    AssertionOutcome o = run_assertion(doc, a);
    ++tally.total;
    if (o.pass) {
        ++tally.passed;
        out << "CHECK " << a.name << ": PASS\n";
    } else {
        out << "CHECK " << a.name << ": FAIL" << (o.detail.empty() ? "" : " " + o.detail)
            << "\n";
    }
}

int finish(const CheckTally& t, std::ostream& out) {
    out << t.passed << "/" << t.total << " assertions passed\n";
    return t.passed == t.total ? 0 : 1;
}

int cmd_check(const std::string& path, std::ostream& out) {
    WorkDocument doc = parse_document(slurp(path));
    CheckTally tally;
    for (const Assertion& a : doc.assertions) run_check_line(doc, a, out, tally);
    return finish(tally, out);
}

bool mentions(const Assertion& a, const char* field, const std::string& ref) {
    Json p = Json::parse(a.payload);
    return p.contains(field) && p.at(field).is_string() &&
           p.at(field).get<std::string>() == ref;
}

int cmd_norm(const std::string& path, const std::string& ref, std::ostream& out) {
    WorkDocument doc = parse_document(slurp(path));
    NormFunction n = pointwise_norm(doc_element(doc, ref));
    for (size_t k = 0; k < n.values.size(); ++k)
        out << n.space->atom(static_cast<int>(k)).id << ": "
            << format_norm_value(n.values[k]) << "\n";
    CheckTally tally;
    for (const Assertion& a : doc.assertions)
        if (a.type == "norm" && mentions(a, "element", ref))
            run_check_line(doc, a, out, tally);
    return tally.total == 0 ? 0 : finish(tally, out);
}

int cmd_tensor(const std::string& flavor, const std::string& path, const std::string& ref,
               std::ostream& out) {
    WorkDocument doc = parse_document(slurp(path));
    const Tensor& t = doc_tensor(doc, ref);
    std::vector<NormValue> values;
    if (flavor == "hs") {
        L0Function h = hs_norm_squared(t);
        for (int k = 0; k < t.left->atom_count(); ++k)
            values.push_back(NormValue::from_exact_sq(h.at(k)));
    } else {
        values = (flavor == "pi" ? projective_norm(t).norms() : injective_norm(t)).values;
    }
    for (int k = 0; k < t.left->atom_count(); ++k)
        out << t.left->space()->atom(k).id << ": " << format_norm_value(values[k]) << "\n";
    CheckTally tally;
    for (const Assertion& a : doc.assertions) {
        const bool match =
            flavor == "hs"
                ? a.type == "hs_sq" && mentions(a, "tensor", ref)
                : a.type == "tensor_norm" && mentions(a, "tensor", ref) &&
                      Json::parse(a.payload).value("flavor", "") == flavor;
        if (match) run_check_line(doc, a, out, tally);
    }
    return tally.total == 0 ? 0 : finish(tally, out);
}

int cmd_verify(const std::string& id, std::uint64_t seed, int cases, int emit, double tol,
               std::ostream& out) {
    SuiteResult r = run_suite(id, seed, cases, emit, tol);
    out << "VERIFY " << id << " seed=" << seed << " cases=" << cases << "\n";
    for (const SuiteCase& c : r.results) {
        out << "CASE " << c.index << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.detail.empty()) out << " " << c.detail;
        out << "\n";
    }
    out << "suite " << id << ": " << (r.cases - r.failures) << "/" << r.cases << " passed\n";
    if (!r.counterexample.empty()) {
        int first = -1;
        for (const SuiteCase& c : r.results)
            if (!c.pass) {
                first = c.index;
                break;
            }
        out << "counterexample (case " << first << "):\n" << r.counterexample;
    }
    if (!r.emitted.empty()) out << "instance (case " << emit << "):\n" << r.emitted;
    return r.failures == 0 ? 0 : 1;
}

int cmd_report(std::uint64_t seed, int cases, double tol, std::ostream& out) {
    out << "REPORT seed=" << seed << " cases=" << cases << "\n";
    int suites_passed = 0;
    const auto& ids = theorem_ids();
    for (const std::string& id : ids) {
        SuiteResult r = run_suite(id, seed, cases, -1, tol);
        out << id << ": " << (r.cases - r.failures) << "/" << r.cases << " passed\n";
        if (r.failures == 0) ++suites_passed;
    }
    out << "overall: " << suites_passed << "/" << ids.size() << " suites passed\n";
    return suites_passed == static_cast<int>(ids.size()) ? 0 : 1;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pointwise tensor norms over finite atomic measure spaces"};
    app.require_subcommand(1);

    std::string doc_path, ref, theorem, flavor;
    std::uint64_t seed = 1;
    int cases = 25, emit = -1;
    double tol = 1e-7;

    auto* check = app.add_subcommand("check", "run every assertion in a document");
    check->add_option("doc", doc_path, "work document")->required();

    auto* norm = app.add_subcommand("norm", "pointwise norm of a documented element");
    norm->add_option("doc", doc_path, "work document")->required();
    norm->add_option("ref", ref, "element id")->required();

    auto* tensor = app.add_subcommand("tensor", "pointwise tensor norm of a documented tensor");
    tensor->add_option("flavor", flavor, "pi, eps or hs (squared frobenius)")
        ->required()
        ->check(CLI::IsMember({"pi", "eps", "hs"}));
    tensor->add_option("doc", doc_path, "work document")->required();
    tensor->add_option("ref", ref, "tensor id")->required();

    auto* verify = app.add_subcommand("verify", "run one seeded property suite");
    verify->add_option("theorem", theorem, "suite id")->required();
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--cases", cases, "number of cases");
    verify->add_option("--emit", emit, "also print the document of this case");
    verify->add_option("--tol", tol, "float-route comparison tolerance");

    auto* report = app.add_subcommand("report", "run every suite");
    report->add_option("--seed", seed, "generator seed");
    report->add_option("--cases", cases, "cases per suite");
    report->add_option("--tol", tol, "float-route comparison tolerance");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(doc_path, out);
        if (app.got_subcommand(norm)) return cmd_norm(doc_path, ref, out);
        if (app.got_subcommand(tensor)) return cmd_tensor(flavor, doc_path, ref, out);
        if (app.got_subcommand(verify)) return cmd_verify(theorem, seed, cases, emit, tol, out);
        return cmd_report(seed, cases, tol, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace l0t
