#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l0t/error.hpp"
#include "l0t/pullback.hpp"

#include <random>

using namespace l0t;

namespace {

VecQ vq(std::initializer_list<Rational> xs) {
    VecQ v(static_cast<int>(xs.size()));
    int i = 0;
    for (const Rational& x : xs) v[i++] = x;
    return v;
}

MatQ mq(int rows, int cols, std::initializer_list<Rational> entries) {
    MatQ m(rows, cols);
    int i = 0;
    for (const Rational& e : entries) {
        m(i / cols, i % cols) = e;
        ++i;
    }
    return m;
}

MeasureSpacePtr space_x() {
    return make_space({{"x1", Rational(1)}, {"x2", Rational(2)}, {"x3", Rational(1, 2)}});
}
MeasureSpacePtr space_y() {
    return make_space({{"y1", Rational(3)}, {"y2", Rational(1)}});
}
MeasureSpacePtr space_z() { return make_space({{"z", Rational(4)}}); }

AtomMap collapse_xy() {
    return make_atom_map(space_x(), space_y(),
                         {{"x1", "y1"}, {"x2", "y2"}, {"x3", "y1"}});
}

VecQ rnd_vecq(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    VecQ v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Rational(num(rng), den(rng));
    return v;
}

MatQ rnd_mat(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

// hexagon fiber on y1, l1 fiber on y2: exact norms throughout
ModuleSpecPtr mixed_over_y() {
    NormDescriptor hex = NormDescriptor::poly(
        {vq({1, 0}), vq({Rational(1, 2), 1}), vq({Rational(-1, 2), 1})},
        {vq({1, Rational(1, 2)}), vq({0, 1}), vq({-1, Rational(1, 2)})});
    return make_module(space_y(), {hex, NormDescriptor::lp(NormKind::L1, 2)});
}

} // namespace

TEST_CASE("atom maps") {
    auto phi = collapse_xy();
    CHECK(phi.image == std::vector<int>{0, 1, 0});

    auto id = identity_atom_map(space_y());
    CHECK(id.image == std::vector<int>{0, 1});

    auto psi = make_atom_map(space_y(), space_z(), {{"y1", "z"}, {"y2", "z"}});
    auto comp = compose_atom_maps(psi, phi);
    CHECK(comp.image == std::vector<int>{0, 0, 0});
    CHECK(same_space(comp.source, phi.source));
    CHECK(same_space(comp.target, psi.target));

    CHECK_THROWS_AS(make_atom_map(space_x(), space_y(), {{"x1", "y1"}}), Error);
    CHECK_THROWS_AS(make_atom_map(space_x(), space_y(),
                                  {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x3", "y1"}}),
                    Error);
    CHECK_THROWS_AS(make_atom_map(space_x(), space_y(),
                                  {{"x1", "nope"}, {"x2", "y1"}, {"x3", "y1"}}),
                    Error);
    CHECK_THROWS_AS(compose_atom_maps(phi, psi), Error);
}

TEST_CASE("modules and elements transport") {
    auto phi = collapse_xy();
    auto M = mixed_over_y();

    auto PM = pullback_module(phi, M);
    CHECK(same_space(PM->space(), phi.source));
    for (int x = 0; x < 3; ++x) CHECK(PM->fiber(x) == M->fiber(phi.image[x]));

    Element v(M, {vq({1, 0}), vq({3, 0})}); // norms 1 and 3
    Element pv = pullback_element(phi, v);
    NormFunction nv = pointwise_norm(pv);
    CHECK(*nv.values[0].exact == 1);
    CHECK(*nv.values[1].exact == 3);
    CHECK(*nv.values[2].exact == 1);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        Element w(M, {rnd_vecq(rng, 2), rnd_vecq(rng, 2)});
        NormFunction ny = pointwise_norm(w);
        NormFunction nx = pointwise_norm(pullback_element(phi, w));
        for (int x = 0; x < 3; ++x)
            CHECK(nv_equal(nx.values[x], ny.values[phi.image[x]], 0.0));
    }

    // identity pullback reproduces the module and the element
    auto id = identity_atom_map(space_y());
    CHECK(same_module(pullback_module(id, M), M));
    CHECK(elem_equal(pullback_element(id, v), v));

    auto wrong = make_module(space_x(), {NormDescriptor::lp(NormKind::L1, 1),
                                         NormDescriptor::lp(NormKind::L1, 1),
                                         NormDescriptor::lp(NormKind::L1, 1)});
    CHECK_THROWS_AS(pullback_module(phi, wrong), Error);
}

TEST_CASE("scalar functions compose with the map") {
    auto phi = collapse_xy();
    L0Function f(space_y(), {Rational(5), Rational(-2)});
    L0Function pf = pullback_l0(phi, f);
    CHECK(pf.at(0) == 5);
    CHECK(pf.at(1) == -2);
    CHECK(pf.at(2) == 5);
    CHECK(same_space(pf.space(), phi.source));
}

TEST_CASE("functionals pair through the map") {
    auto phi = collapse_xy();
    auto M = mixed_over_y();
    auto D = dual_module(M);
    std::mt19937_64 rng(23);

    for (int t = 0; t < 10; ++t) {
        Element omega(D, {rnd_vecq(rng, 2), rnd_vecq(rng, 2)});
        Element v(M, {rnd_vecq(rng, 2), rnd_vecq(rng, 2)});

        L0Function lhs = pairing(pullback_functional(phi, omega), pullback_element(phi, v));
        L0Function rhs = pullback_l0(phi, pairing(omega, v));
        CHECK(lhs == rhs);

        NormFunction nd = pointwise_norm(omega);
        NormFunction pd = pointwise_norm(pullback_functional(phi, omega));
        for (int x = 0; x < 3; ++x)
            CHECK(nv_equal(pd.values[x], nd.values[phi.image[x]], 0.0));
    }
}

TEST_CASE("dual pullback is onto each fiber") {
    auto phi = collapse_xy();
    auto M = mixed_over_y();
    auto D = dual_module(M);

    std::vector<Element> pulled;
    for (int i = 0; i < 2; ++i) {
        VecQ e = VecQ::Zero(2);
        e[i] = 1;
        pulled.push_back(pullback_functional(phi, Element(D, {e, e})));
    }
    for (int x = 0; x < 3; ++x) {
        MatQ span(2, 2);
        for (int i = 0; i < 2; ++i) span.col(i) = pulled[i].at(x);
        CHECK(rank_of(span) == 2);
    }
}

TEST_CASE("tensors transport with all three norms") {
    auto phi = collapse_xy();
    std::mt19937_64 rng(29);

    auto M = mixed_over_y();
    auto a = make_tensor(M, M, {mq(2, 2, {1, 0, 0, 1}), rnd_mat(rng, 2, 2)});
    Tensor pa = pullback_tensor(phi, a);
    CHECK(pa.matrices[0] == a.matrices[0]);
    CHECK(pa.matrices[1] == a.matrices[1]);
    CHECK(pa.matrices[2] == a.matrices[0]);

    CHECK(pullback_tensor_check(phi, a, TensorFlavor::Pi));
    CHECK(pullback_tensor_check(phi, a, TensorFlavor::Eps));

    // float routes transport within their own tolerance
    auto H = make_module(space_y(), {NormDescriptor::lp(NormKind::L2, 2),
                                     NormDescriptor::lp(NormKind::L2, 2, {Rational(2), Rational(3)})});
    for (int t = 0; t < 5; ++t) {
        auto b = make_tensor(H, H, {rnd_mat(rng, 2, 2), rnd_mat(rng, 2, 2)});
        CHECK(pullback_tensor_check(phi, b, TensorFlavor::Pi));
        CHECK(pullback_tensor_check(phi, b, TensorFlavor::Eps));
        CHECK(pullback_tensor_check(phi, b, TensorFlavor::Hs));
    }

    Element v(M, {vq({1, 0}), vq({0, 2})});
    Element w(M, {vq({Rational(1, 2), 1}), vq({-1, 1})});
    Tensor elem = elementary_tensor(v, w);
    Tensor pe = pullback_tensor(phi, elem);
    Tensor factored = elementary_tensor(pullback_element(phi, v), pullback_element(phi, w));
    CHECK(tensor_equal(pe, factored));
}

TEST_CASE("pullback is functorial") {
    auto phi = collapse_xy();
    auto psi = make_atom_map(space_y(), space_z(), {{"y1", "z"}, {"y2", "z"}});
    auto comp = compose_atom_maps(psi, phi);

    auto M = make_module(space_z(), {NormDescriptor::lp(NormKind::L1, 2)});
    std::mt19937_64 rng(31);
    Element v(M, {rnd_vecq(rng, 2)});
    CHECK(elem_equal(pullback_element(comp, v),
                     pullback_element(phi, pullback_element(psi, v))));

    auto a = make_tensor(M, M, {rnd_mat(rng, 2, 2)});
    CHECK(tensor_equal(pullback_tensor(comp, a),
                       pullback_tensor(phi, pullback_tensor(psi, a))));

    // composing with the identity changes nothing
    auto idx = identity_atom_map(space_x());
    auto same = compose_atom_maps(phi, idx);
    CHECK(same.image == phi.image);
}
