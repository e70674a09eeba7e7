#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l0t/error.hpp"
#include "l0t/registry.hpp"

using namespace l0t;

TEST_CASE("theorem ids enumerate the suites") {
    const auto& ids = theorem_ids();
    CHECK(ids.size() == 19);
    CHECK(is_theorem_id("TH-PI-ELEM"));
    CHECK(is_theorem_id("TH-SUM-CAUCHY"));
    CHECK_FALSE(is_theorem_id("TH-PI-ELEM "));
    CHECK_FALSE(is_theorem_id("nope"));
    for (const auto& id : ids) CHECK(is_theorem_id(id));
}

TEST_CASE("every suite passes a seeded run") {
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        SuiteResult r = run_suite(id, 11, 6);
        CHECK(r.failures == 0);
        CHECK(r.cases == 6);
        CHECK(r.results.size() == 6);
        for (const SuiteCase& c : r.results) {
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("identical seeds reproduce identical runs") {
    SuiteResult a = run_suite("TH-HOM-TENSOR", 5, 4, 2);
    SuiteResult b = run_suite("TH-HOM-TENSOR", 5, 4, 2);
    REQUIRE(a.results.size() == b.results.size());
    for (size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].pass == b.results[i].pass);
        CHECK(a.results[i].detail == b.results[i].detail);
    }
    CHECK(a.emitted == b.emitted);
    CHECK_FALSE(a.emitted.empty());
    CHECK(a.emitted != run_suite("TH-HOM-TENSOR", 6, 4, 2).emitted);
}

TEST_CASE("emitted instances replay through their own assertions") {
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        SuiteResult r = run_suite(id, 3, 2, 1);
        REQUIRE_FALSE(r.emitted.empty());
        WorkDocument doc = parse_document(r.emitted);
        CHECK_FALSE(doc.assertions.empty());
        for (const Assertion& a : doc.assertions) {
            AssertionOutcome o = run_assertion(doc, a);
            CAPTURE(a.name);
            CAPTURE(o.detail);
            CHECK(o.pass);
        }
    }
}

TEST_CASE("bad suite requests are input errors") {
    CHECK_THROWS_AS(run_suite("TH-UNKNOWN", 1, 5), Error);
    CHECK_THROWS_AS(run_suite("TH-VV", 1, 0), Error);
    try {
        run_suite("TH-UNKNOWN", 1, 5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Reference);
    }
}
