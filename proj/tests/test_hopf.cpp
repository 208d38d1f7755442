#include "qhopf/hopf.hpp"
#include "qhopf/random.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();
const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement as = AlgElement::generator(Generator::a_star);
const AlgElement b = AlgElement::generator(Generator::b);
const AlgElement bs = AlgElement::generator(Generator::b_star);

LaurentElement random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k(-4, 4), c(-3, 3);
    LaurentElement x;
    for (int i = 0; i < 3; ++i) x.add_term(k(rng), ParamScalar(c(rng)) + ParamScalar(c(rng)) * Q);
    return x;
}

}  // namespace

TEST_CASE("Laurent polynomials") {
    const LaurentElement u = LaurentElement::u_power(1);
    const LaurentElement us = LaurentElement::u_power(-1);
    CHECK(u * us == LaurentElement(1));
    CHECK(star(u) == us);
    CHECK((u + us) * (u - us) == LaurentElement::u_power(2) - LaurentElement::u_power(-2));
    CHECK(LaurentElement::u_power(-2, 3).to_string() == "3*u^-2");
}

TEST_CASE("Hopf structure of O(U(1))") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const LaurentElement x = random_laurent(rng);
        // m (S (x) id) Delta = counit = m (id (x) S) Delta
        LaurentElement left, right;
        for (const auto& [key, c] : coproduct(x)) {
            left += antipode(LaurentElement::u_power(key.first, c)) * LaurentElement::u_power(key.second);
            right += LaurentElement::u_power(key.first, c) * antipode(LaurentElement::u_power(key.second));
        }
        CHECK(left == LaurentElement(counit(x)));
        CHECK(right == LaurentElement(counit(x)));
        CHECK(antipode(antipode(x)) == x);
        CHECK(star(star(x)) == x);
    }
    CHECK(counit(LaurentElement::u_power(5, P)) == P);
}

TEST_CASE("coaction on generators") {
    CotensorElement ca, cb;
    ca.add(a, 1);
    cb.add(b, -1);
    CHECK(coaction(a) == ca);
    CHECK(coaction(b) == cb);
    CHECK(coaction(mul(a, bs)).to_string() == "(a b^*) (x) u^2");
    CHECK(coaction(AlgElement::unit()) == unit_cotensor(0));
}

TEST_CASE("coaction is a *-algebra map, counital and coassociative") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_element(rng), y = random_element(rng);
        CHECK(coaction(mul(x, y)) == coaction(x) * coaction(y));
        CHECK(coaction(star(x)) == star(coaction(x)));
        CHECK(apply_counit(coaction(x)) == x);
        CHECK(coaction_twice(x) == coaction_then_coproduct(x));
    }
}

TEST_CASE("coinvariants are exactly the fixed points of the coaction") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 50; ++i) {
        const AlgElement x = random_coinvariant(rng);
        CotensorElement fixed;
        fixed.add(x, 0);
        CHECK(coaction(x) == fixed);
        const AlgElement y = random_element(rng);
        CotensorElement y_fixed;
        y_fixed.add(y, 0);
        CHECK((coaction(y) == y_fixed) == is_coinvariant(y));
    }
}
