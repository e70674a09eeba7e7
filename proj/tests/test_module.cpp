#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l0t/error.hpp"
#include "l0t/module.hpp"

#include <random>

using namespace l0t;

namespace {

VecQ vq(std::initializer_list<Rational> xs) {
    VecQ v(static_cast<int>(xs.size()));
    int i = 0;
    for (const Rational& x : xs) v[i++] = x;
    return v;
}

MeasureSpacePtr two_atoms() {
    return make_space({{"a", Rational(1)}, {"b", Rational(1)}});
}

ModuleSpecPtr l1_pair() {
    auto X = two_atoms();
    return make_module(X, {NormDescriptor::lp(NormKind::L1, 2),
                           NormDescriptor::lp(NormKind::L1, 2)});
}

Element rnd_element(const ModuleSpecPtr& M, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<VecQ> vs;
    for (int k = 0; k < M->atom_count(); ++k) {
        VecQ v(M->dim(k));
        for (int i = 0; i < M->dim(k); ++i) v[i] = Rational(num(rng), den(rng));
        vs.push_back(v);
    }
    return Element(M, std::move(vs));
}

} // namespace

TEST_CASE("pointwise norm per atom") {
    auto M = l1_pair();
    Element v(M, {vq({1, -2}), vq({0, 3})});
    auto n = pointwise_norm(v).to_l0();
    CHECK(n.values() == std::vector<Rational>{Rational(3), Rational(3)});

    CHECK(pointwise_norm(zero_element(M)).to_l0().is_zero());
}

TEST_CASE("scalar action and homogeneity") {
    auto M = l1_pair();
    Element v(M, {vq({1, 0}), vq({0, 1})});
    L0Function f(M->space(), {Rational(2), Rational(-1)});
    auto fv = scalar_action(f, v);
    CHECK(vec_equal(fv.at(0), vq({2, 0})));
    CHECK(vec_equal(fv.at(1), vq({0, -1})));

    // |f v| = |f| |v| exactly
    Element w(M, {vq({1, -2}), vq({0, 3})});
    L0Function g(M->space(), {Rational(2), Rational(0)});
    auto lhs = pointwise_norm(scalar_action(g, w)).to_l0();
    CHECK(lhs.values() == std::vector<Rational>{Rational(6), Rational(0)});

    auto one = constant_function(M->space(), Rational(1));
    CHECK(elem_equal(scalar_action(one, w), w));
}

TEST_CASE("sgn and reconstruction") {
    auto X = two_atoms();
    auto M = make_module(X, {NormDescriptor::lp(NormKind::L2, 2),
                             NormDescriptor::lp(NormKind::L1, 2)});
    Element v(M, {vq({3, -4}), vq({0, 0})});
    auto s = sgn(v);
    CHECK(vec_equal(s.at(0), vq({Rational(3, 5), Rational(-4, 5)})));
    CHECK(s.at(1).isZero());
    CHECK(unit_sphere_member(s));

    // v = |v| . sgn(v) on polyhedral fibers, exactly
    auto P = l1_pair();
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        Element w = rnd_element(P, rng);
        auto rebuilt = scalar_action(pointwise_norm(w).to_l0(), sgn(w));
        CHECK(elem_equal(rebuilt, w));
    }
}

TEST_CASE("support and membership") {
    auto X = two_atoms();
    auto M0 = make_module(X, {NormDescriptor::lp(NormKind::L1, 0),
                              NormDescriptor::lp(NormKind::L1, 0)});
    CHECK(M0->support_atoms().empty());

    auto M = make_module(X, {NormDescriptor::lp(NormKind::L1, 2),
                             NormDescriptor::lp(NormKind::L1, 0)});
    CHECK(M->support_atoms() == std::vector<std::string>{"a"});

    auto P = l1_pair();
    Element on_sphere(P, {vq({1, 0}), vq({0, 0})});
    CHECK(unit_sphere_member(on_sphere));
    CHECK(unit_disc_member(on_sphere));
    Element outside(P, {vq({Rational(1, 2), 0}), vq({2, 0})});
    CHECK(!unit_disc_member(outside));
    CHECK(!unit_sphere_member(outside));
}

TEST_CASE("glue") {
    auto M = l1_pair();
    Element v(M, {vq({1, 1}), vq({2, 2})});
    Element w(M, {vq({-1, 0}), vq({0, -2})});

    auto both = glue({{{"a", "b"}, v}});
    CHECK(elem_equal(both, v));

    auto mixed = glue({{{"a"}, v}, {{"b"}, w}});
    CHECK(vec_equal(mixed.at(0), v.at(0)));
    CHECK(vec_equal(mixed.at(1), w.at(1)));

    // norms glue the same way
    auto n = pointwise_norm(mixed).to_l0();
    CHECK(n.at(0) == pointwise_norm(v).to_l0().at(0));
    CHECK(n.at(1) == pointwise_norm(w).to_l0().at(1));

    CHECK_THROWS_AS(glue({{{"a"}, v}}), Error);
    CHECK_THROWS_AS(glue({{{"a", "b"}, v}, {{"b"}, w}}), Error);
}

TEST_CASE("quotient norm") {
    auto X = two_atoms();
    auto M = make_module(X, {NormDescriptor::lp(NormKind::Linf, 2),
                             NormDescriptor::lp(NormKind::Linf, 2)});
    Element gen(M, {vq({1, 1}), vq({1, 1})});
    auto V = span_submodule(M, {gen});

    Element w(M, {vq({1, 0}), vq({2, 2})});
    auto q = quotient_norm(V, w);
    CHECK(*q.values[0].exact == Rational(1, 2));
    CHECK(*q.values[1].exact == 0); // (2,2) lies in V fiberwise

    CHECK(V.contains(elem_scale(Rational(5), gen)));
    CHECK(!V.contains(w));

    auto Z = zero_submodule(M);
    CHECK(nf_equal(quotient_norm(Z, w), pointwise_norm(w), 0.0));
}

TEST_CASE("norm axioms over the scalar ring") {
    auto M = l1_pair();
    std::mt19937_64 rng(17);
    for (int it = 0; it < 30; ++it) {
        Element v = rnd_element(M, rng), w = rnd_element(M, rng);
        auto nv = pointwise_norm(v).to_l0();
        auto nw = pointwise_norm(w).to_l0();
        auto nvw = pointwise_norm(elem_add(v, w)).to_l0();
        for (int k = 0; k < 2; ++k) {
            CHECK(nvw.at(k) <= nv.at(k) + nw.at(k));
            CHECK(nv.at(k) >= 0);
        }
        CHECK((nv.is_zero() == v.is_zero()));
    }
}

TEST_CASE("module distance") {
    auto M = l1_pair();
    std::mt19937_64 rng(19);
    for (int it = 0; it < 30; ++it) {
        Element v = rnd_element(M, rng), w = rnd_element(M, rng), u = rnd_element(M, rng);
        auto d = module_distance(v, w);
        REQUIRE(d.exact.has_value());
        CHECK(*d.exact >= 0);
        CHECK(*d.exact <= 1);
        CHECK(*d.exact == *module_distance(w, v).exact);
        CHECK((*d.exact == 0) == elem_equal(v, w));
        CHECK(*module_distance(v, u).exact <= *d.exact + *module_distance(w, u).exact);

        // agrees with the scalar distance of the pointwise norm gap
        auto gap = pointwise_norm(elem_sub(v, w)).to_l0();
        auto zero = constant_function(M->space(), Rational(0));
        CHECK(*d.exact == l0_distance(gap, zero));
    }

    // geometric contraction toward the limit
    Element v = rnd_element(M, rng);
    if (!v.is_zero()) {
        auto prev = module_distance(elem_scale(Rational(1, 2), v), v);
        for (int n = 2; n <= 5; ++n) {
            Rational c = 1 - Rational(1, BigInt(1) << n);
            auto cur = module_distance(elem_scale(c, v), v);
            CHECK(nv_less_equal(cur, prev));
            prev = cur;
        }
    }
}
