#include "qhopf/numrep.hpp"
#include "qhopf/random.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();
const AlgElement one = AlgElement::unit();
const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement as = AlgElement::generator(Generator::a_star);
const AlgElement b = AlgElement::generator(Generator::b);
const AlgElement bs = AlgElement::generator(Generator::b_star);

AlgElement gen(Generator g) { return AlgElement::generator(g); }

FreeWord random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
    FreeWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.letters.push_back(static_cast<Generator>(letter(rng)));
    return w;
}

}  // namespace

TEST_CASE("defining relations") {
    CHECK(mul(as, a) - Q * mul(a, as) == AlgElement(ParamScalar(1) - Q));
    CHECK(mul(bs, b) - P * mul(b, bs) == AlgElement(ParamScalar(1) - P));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(as, b) == mul(b, as));
    CHECK(mul(a, bs) == mul(bs, a));
    CHECK(mul(one - mul(a, as), one - mul(b, bs)).is_zero());
}

TEST_CASE("normal form of a^* a") {
    const AlgElement x = mul(as, a);
    CHECK(x.to_string() == "1 - q*(1 - a a^*)");
    CHECK(x == one - Q * AlgElement::monomial({0, 1, 0, 0}));
}

TEST_CASE("basis monomial bookkeeping") {
    const BasisMonomial m{2, 1, 0, -3};
    CHECK(m.winding() == 5);
    CHECK(m.degree() == 2 + 2 + 3);
    CHECK(m.valid());
    CHECK_FALSE(BasisMonomial{0, 1, 1, 0}.valid());
    AlgElement x;
    CHECK_THROWS_AS(x.add_term({0, 1, 1, 0}, 1), std::invalid_argument);
    x.add_term(m, P);
    x.add_term(m, -P);
    CHECK(x.is_zero());
}

TEST_CASE("generator rewriting and the closed-form product agree") {
    std::mt19937_64 rng(21);
    const RandomShape shape{4, 3, 2};
    for (int i = 0; i < 150; ++i) {
        const AlgElement x = random_element(rng, shape), y = random_element(rng, shape);
        const AlgElement xy = mul(x, y);
        CHECK(xy == mul_by_generators(x, y));
        CHECK(xy == mul_serial(x, y));
    }
}

TEST_CASE("multiplication by a single generator on either side") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_element(rng);
        for (Generator g : {Generator::a, Generator::a_star, Generator::b, Generator::b_star}) {
            CHECK(mul_by_generator(x, g, Side::left) == mul(gen(g), x));
            CHECK(mul_by_generator(x, g, Side::right) == mul(x, gen(g)));
        }
    }
}

TEST_CASE("associativity, unit and involution on random elements") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(x, one) == x);
        CHECK(mul(one, x) == x);
        CHECK(star(star(x)) == x);
        CHECK(star(mul(x, y)) == mul(star(y), star(x)));
        CHECK(star(x + y) == star(x) + star(y));
    }
}

TEST_CASE("free words normalize to their matrix value in truncated representations") {
    std::mt19937_64 rng(24);
    const int N = 30;
    for (Family family : {Family::rho1, Family::rho2}) {
        const TruncatedRep rep = build_rep(family, 0.7, 0.0, N, 0.4, 0.3);
        for (int i = 0; i < 60; ++i) {
            const FreeWord w = random_word(rng, 7);
            CMatrix direct = CMatrix::Identity(N, N);
            for (Generator g : w.letters) direct = direct * CMatrix(rep.generator(g));
            const CMatrix normal = evaluate(normalize_word(w), rep);
            const int safe = N - static_cast<int>(w.letters.size());
            CHECK((direct - normal).leftCols(safe).norm() < 1e-12);
        }
    }
}

TEST_CASE("words normalize to the fold of generator products") {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 100; ++i) {
        FreeWord w = random_word(rng, 6);
        w.prefactor = P - Q;
        AlgElement fold = AlgElement(w.prefactor);
        for (Generator g : w.letters) fold = mul(fold, gen(g));
        CHECK(normalize_word(w) == fold);
    }
    CHECK(normalize_word(FreeWord{}) == one);
}

TEST_CASE("winding decomposition") {
    const AlgElement x = a + bs + mul(a, b) + AlgElement(P);
    const auto parts = winding_decompose(x);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == a + bs);
    CHECK(parts.at(0) == mul(a, b) + AlgElement(P));
    CHECK_FALSE(is_coinvariant(x));
    CHECK(is_coinvariant(parts.at(0)));
    CHECK(is_coinvariant(AlgElement()));

    std::mt19937_64 rng(26);
    for (int i = 0; i < 50; ++i) {
        const AlgElement y = random_element(rng);
        AlgElement sum;
        for (const auto& [w, part] : winding_decompose(y)) {
            sum += part;
            for (const auto& [mono, c] : part.terms()) CHECK(mono.winding() == w);
        }
        CHECK(sum == y);
    }
}

TEST_CASE("the base embeds as coinvariants") {
    const AlgElement f0 = iota(S2Generator::f0), f1 = iota(S2Generator::f1), f1s = iota(S2Generator::f1_star);
    CHECK(f0 == mul(b, bs));
    CHECK(f1 == mul(b, a));
    CHECK(f1s == mul(as, bs));
    CHECK(star(f1) == f1s);
    for (const auto& f : {f0, f1, f1s}) CHECK(is_coinvariant(f));

    CHECK(f0 == star(f0));
    CHECK(mul(f1s, f1) - Q * mul(f1, f1s) - (P - Q) * f0 == AlgElement(ParamScalar(1) - P));
    CHECK(mul(f0, f1) - P * mul(f1, f0) == (ParamScalar(1) - P) * f1);
    CHECK(mul(one - f0, mul(f1, f1s) - f0).is_zero());

    std::mt19937_64 rng(27);
    for (int i = 0; i < 50; ++i) CHECK(is_coinvariant(iota(random_base_polynomial(rng))));
    CHECK(iota(S2Polynomial{S2Word{P, {S2Generator::f1, S2Generator::f1_star}}}) == P * mul(f1, f1s));
}

TEST_CASE("printing") {
    CHECK(to_string(BasisMonomial{}) == "1");
    CHECK(AlgElement().to_string() == "0");
    CHECK(to_string(BasisMonomial{-2, 0, 1, 1}) == "a^*^2 (1 - b b^*) b");
    CHECK(to_string(Generator::b_star) == "b^*");
}
