#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/docjson.hpp"
#include "l0t/document.hpp"
#include "l0t/error.hpp"

using namespace l0t;

namespace {

VecQ vec2(const Rational& x, const Rational& y) {
    VecQ v(2);
    v[0] = x;
    v[1] = y;
    return v;
}

ErrorKind kind_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected a parse failure");
    return ErrorKind::Internal;
}

const char* tiny = R"({
  "version": "1",
  "spaces": [{"id": "X", "atoms": [{"id": "a", "mass": "1"}, {"id": "b", "mass": "1/2"}]}],
  "norms": [{"id": "n1", "kind": "l1", "dim": 2}, {"id": "n2", "kind": "linf", "dim": 2, "weights": ["2", "1/3"]}],
  "modules": [{"id": "M", "space": "X", "fibers": ["n1", "n2"]}],
  "elements": [{"id": "v", "module": "M", "vectors": [["1", "2"], ["-3", "0"]]}]
})";

std::string patched(std::string text, const std::string& from, const std::string& to) {
    return text.replace(text.find(from), from.size(), to);
}

} // namespace

TEST_CASE("documents parse and resolve") {
    WorkDocument doc = parse_document(tiny);
    CHECK(doc.version == "1");
    CHECK(doc.spaces.at("X")->atom_count() == 2);
    CHECK(doc.norms.at("n2").kind == NormKind::Linf);
    CHECK(doc.modules.at("M")->dim(0) == 2);
    NormFunction n = pointwise_norm(doc_element(doc, "v"));
    CHECK(*n.values[0].exact == 3);
    CHECK(*n.values[1].exact == 6); // weighted sup: 2 * |-3|
}

TEST_CASE("malformed input is rejected") {
    CHECK(kind_of("{") == ErrorKind::Parse);
    CHECK(kind_of("[1, 2]") == ErrorKind::Parse);
    CHECK(kind_of(R"({"version": "2"})") == ErrorKind::Parse);
    CHECK(kind_of(R"({"spaces": []})") == ErrorKind::Parse); // missing version
    CHECK(kind_of(patched(tiny, R"("mass": "1"})", R"("mass": "1/0"})")) == ErrorKind::Parse);
    CHECK(kind_of(patched(tiny, R"("mass": "1"})", R"("mass": "one"})")) == ErrorKind::Parse);
    CHECK(kind_of(patched(tiny, R"("id": "v")", R"("id": "v", "extra": 1)")) ==
          ErrorKind::Parse);
    CHECK(kind_of(patched(tiny, R"({"id": "n1", "kind": "l1", "dim": 2})",
                          R"({"id": "n1", "kind": "l7", "dim": 2})")) == ErrorKind::Parse);
    // byte position travels with JSON syntax errors
    try {
        parse_document("{\n  \"version\": 1x\n}");
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("duplicate ids are rejected") {
    std::string dup = patched(tiny, R"([{"id": "v", "module": "M", "vectors": [["1", "2"], ["-3", "0"]]}])",
                              R"([{"id": "v", "module": "M", "vectors": [["1", "2"], ["-3", "0"]]},
                                  {"id": "v", "module": "M", "vectors": [["0", "0"], ["0", "0"]]}])");
    CHECK(kind_of(dup) == ErrorKind::Parse);
}

TEST_CASE("unresolved references are rejected") {
    CHECK(kind_of(patched(tiny, R"("module": "M")", R"("module": "Q")")) ==
          ErrorKind::Reference);
    CHECK(kind_of(patched(tiny, R"("fibers": ["n1", "n2"])", R"("fibers": ["n1", "zz"])")) ==
          ErrorKind::Reference);
    std::string with_assert = patched(
        tiny, R"(["1", "2"], ["-3", "0"]]}])",
        R"(["1", "2"], ["-3", "0"]]}],
  "assertions": [{"name": "n", "type": "norm", "element": "ghost", "expected": ["0", "0"]}])");
    CHECK(kind_of(with_assert) == ErrorKind::Reference);
    WorkDocument doc = parse_document(tiny);
    CHECK_THROWS_AS(doc_element(doc, "nope"), Error);
    CHECK_THROWS_AS(doc_tensor(doc, "v"), Error);
}

TEST_CASE("assertion outcomes carry details") {
    std::string text = patched(
        tiny, R"(["1", "2"], ["-3", "0"]]}])",
        R"(["1", "2"], ["-3", "0"]]}],
  "assertions": [
    {"name": "good", "type": "norm", "element": "v", "expected": ["3/1", "6/1"]},
    {"name": "bad", "type": "norm", "element": "v", "expected": ["3/1", "5/1"]},
    {"name": "same", "type": "elem_equal", "a": "v", "b": "v"}
  ])");
    WorkDocument doc = parse_document(text);
    REQUIRE(doc.assertions.size() == 3);
    CHECK(run_assertion(doc, doc.assertions[0]).pass);
    AssertionOutcome bad = run_assertion(doc, doc.assertions[1]);
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("atom b") != std::string::npos);
    CHECK(bad.detail.find("6/1") != std::string::npos);
    CHECK(run_assertion(doc, doc.assertions[2]).pass);
}

TEST_CASE("tensors accept matrices or pairs but not both") {
    std::string base = patched(
        tiny, R"(["1", "2"], ["-3", "0"]]}])",
        R"(["1", "2"], ["-3", "0"]]}],
  "tensors": [%T%])");
    std::string mats =
        R"({"id": "t", "left": "M", "right": "M", "matrices": [[["1","0"],["0","1"]], [["1","0"],["0","0"]]]})";
    std::string pairs = R"({"id": "t", "left": "M", "right": "M", "pairs": [["v", "v"]]})";
    WorkDocument d1 = parse_document(patched(base, "%T%", mats));
    CHECK(d1.tensors.at("t").matrices[0](1, 1) == 1);
    WorkDocument d2 = parse_document(patched(base, "%T%", pairs));
    CHECK(d2.tensors.at("t").matrices[0](0, 1) == 2); // v (x) v at atom a
    std::string both = patched(base, "%T%",
                               R"({"id": "t", "left": "M", "right": "M",
                                   "matrices": [[["1"]]], "pairs": [["v", "v"]]})");
    CHECK(kind_of(both) == ErrorKind::Parse);
}

TEST_CASE("family kinds parse and run") {
    std::string text = patched(
        tiny, R"(["1", "2"], ["-3", "0"]]}])",
        R"(["1", "2"], ["-3", "0"]]}],
  "families": [
    {"id": "geo", "kind": "geometric", "base": "v", "ratio": "1/3"},
    {"id": "pow", "kind": "p_series", "base": "v", "p": 2},
    {"id": "fin", "kind": "finite", "terms": ["v", "v"]},
    {"id": "sg", "kind": "scalar_geometric", "space": "X", "ratios": ["1/2", "1/4"]},
    {"id": "slow", "kind": "harmonic", "space": "X"}
  ],
  "assertions": [
    {"name": "geo sums", "type": "summable", "family": "geo", "horizon": 12,
     "expected": ["summable", "summable"]},
    {"name": "slow diverges", "type": "summable", "family": "slow", "horizon": 40,
     "expected": ["not_summable", "not_summable"]}
  ])");
    WorkDocument doc = parse_document(text);
    CHECK(doc.families.size() == 5);
    SumResult fin = family_sum(doc.families.at("fin"), Rational(1, 100));
    CHECK(fin.cutoff == 2);
    CHECK(fin.error[0] == 0);
    for (const Assertion& a : doc.assertions) CHECK(run_assertion(doc, a).pass);
}

TEST_CASE("builder emissions are deterministic and reparse") {
    auto build = [] {
        docjson::Builder b;
        auto X = make_space({{"a", Rational(1)}, {"b", Rational(2)}});
        auto M = make_module(X, {NormDescriptor::lp(NormKind::L1, 2),
                                 NormDescriptor::poly({vec2(1, 0), vec2(0, 1)},
                                                      {vec2(1, 1), vec2(1, -1)})});
        b.space("X", X);
        b.module("M", "X", M);
        std::vector<VecQ> vs{vec2(1, 2), vec2(0, 1)};
        Element v(M, vs);
        b.element("v", "M", v);
        b.hom("T", "M", "M", identity_hom(M));
        b.tensor("t", "M", "M", make_tensor(M, M, {MatQ::Identity(2, 2), MatQ::Identity(2, 2)}));
        b.atom_map("phi", "X", "X", identity_atom_map(X));
        b.family_geometric("F", "v", Rational(1, 2));
        b.assertion({{"name", "n"}, {"type", "norm"}, {"element", "v"},
                     {"expected", nlohmann::json::array({"3/1", "1/1"})}});
        return b.dump();
    };
    std::string one = build();
    CHECK(one == build());
    WorkDocument doc = parse_document(one);
    CHECK(doc.modules.at("M")->fiber(1).kind == NormKind::Poly);
    REQUIRE(doc.assertions.size() == 1);
    CHECK(run_assertion(doc, doc.assertions[0]).pass);
}

TEST_CASE("norm values format stably") {
    CHECK(format_norm_value(NormValue::from_exact(Rational(3))) == "3/1");
    CHECK(format_norm_value(NormValue::from_exact(Rational(-7, 2))) == "-7/2");
    CHECK(format_norm_value(NormValue::from_exact_sq(Rational(2))) == "sqrt(2/1)");
    CHECK(format_norm_value(NormValue::from_exact_sq(Rational(9, 4))) == "3/2");
    CHECK(format_norm_value(NormValue::from_float(1.5, 1e-7)) == "1.500000000 (tol 1.0e-07)");
}
