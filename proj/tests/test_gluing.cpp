#include "qhopf/gluing.hpp"
#include "qhopf/random.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();
const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement b = AlgElement::generator(Generator::b);

DiscElement disc(Param tag, int mu, int m, const ParamScalar& c = 1) { return DiscElement::monomial(tag, {mu, m}, c); }

// Images of a basis monomial read off generator by generator:
//   chi_p: a -> 1 (x) u, (1 - a a^*) -> 0, (1 - b b^*) -> (1 - x x^*) (x) 1, b -> x (x) u^*,
//   chi_q: a -> y (x) u, (1 - b b^*) -> 0, (1 - a a^*) -> (1 - y y^*) (x) 1, b -> 1 (x) u^*.
// Moving x_nu across (1 - x x^*)^n costs p^{n nu}.
TrivializedElement chi_reference(const BasisMonomial& mono, Param leg) {
    TrivializedElement out(leg);
    const int w = mono.mu - mono.nu;
    if (leg == Param::p) {
        if (mono.m == 0) out.add_term({mono.nu, mono.n}, w, ParamScalar::power(Param::p, mono.n * mono.nu));
    } else {
        if (mono.n == 0) out.add_term({mono.mu, mono.m}, w, 1);
    }
    return out;
}

}  // namespace

TEST_CASE("disc products") {
    const DiscElement x = DiscElement::generator(Param::p);
    const DiscElement xs = DiscElement::generator(Param::p, true);
    CHECK(disc_mul(xs, x) == DiscElement::unit(Param::p) - disc(Param::p, 0, 1, P));
    CHECK(disc_mul(x, xs) == DiscElement::unit(Param::p) - disc(Param::p, 0, 1));
    CHECK(disc_mul(disc(Param::p, 0, 1), x) == disc(Param::p, 1, 1, P));
    CHECK(disc_mul(DiscElement::generator(Param::q, true), DiscElement::generator(Param::q)) ==
          DiscElement::unit(Param::q) - disc(Param::q, 0, 1, Q));
    CHECK_THROWS_AS(disc_mul(x, DiscElement::generator(Param::q)), std::invalid_argument);
    CHECK_THROWS_AS(x + DiscElement::generator(Param::q), std::invalid_argument);
    CHECK(disc(Param::q, -1, 0).to_string() == "y^*");
}

TEST_CASE("boundary maps") {
    const DiscElement x = DiscElement::generator(Param::p);
    const DiscElement xs = DiscElement::generator(Param::p, true);
    CHECK(boundary(x) == LaurentElement::u_power(1));
    CHECK(boundary(disc(Param::p, 0, 1)).is_zero());
    CHECK(boundary(disc_mul(xs, x)) == LaurentElement(1));
    CHECK(boundary(disc(Param::q, -2, 0, Q)) == LaurentElement::u_power(-2, Q));
}

TEST_CASE("transition map") {
    CHECK(phi12(BoundaryTensor{{{0, 1}, 1}}) == BoundaryTensor{{{-1, 1}, 1}});
    CHECK(phi12(BoundaryTensor{{{0, 0}, 1}}) == BoundaryTensor{{{0, 0}, 1}});
    CHECK(phi12(BoundaryTensor{{{1, 1}, 1}}) == BoundaryTensor{{{0, 1}, 1}});
}

TEST_CASE("trivializations on generators") {
    CHECK(chi(a, Param::p) == TrivializedElement::pure(DiscElement::unit(Param::p), 1));
    CHECK(chi(b, Param::q) == TrivializedElement::pure(DiscElement::unit(Param::q), -1));
    CHECK(chi(a, Param::q) == TrivializedElement::pure(DiscElement::generator(Param::q), 1));
    CHECK(chi(b, Param::p) == TrivializedElement::pure(DiscElement::generator(Param::p), -1));
    const DiscElement xxs = DiscElement::unit(Param::p) - disc(Param::p, 0, 1);
    CHECK(chi(iota(S2Generator::f0), Param::p) == TrivializedElement::pure(xxs, 0));
    CHECK(gluing_check(a));
    CHECK(gluing_check(b));
}

TEST_CASE("trivializations match the generator-by-generator images on basis monomials") {
    for (int mu = -3; mu <= 3; ++mu)
        for (int nu = -3; nu <= 3; ++nu)
            for (int d = 0; d <= 3; ++d)
                for (int side = 0; side < (d == 0 ? 1 : 2); ++side) {
                    const BasisMonomial mono{mu, side == 0 ? d : 0, side == 1 ? d : 0, nu};
                    const AlgElement x = AlgElement::monomial(mono);
                    for (Param leg : {Param::p, Param::q}) CHECK(chi(x, leg) == chi_reference(mono, leg));
                }
}

TEST_CASE("trivializations are algebra maps, colinear, and glue") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_element(rng), y = random_element(rng);
        for (Param leg : {Param::p, Param::q}) {
            CHECK(chi(mul(x, y), leg) == chi(x, leg) * chi(y, leg));
            CHECK(chi_after_coaction(x, leg) == coproduct_after_chi(x, leg));
        }
        CHECK(gluing_check(x));
    }
}

TEST_CASE("base elements carry no fibre degree") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        const AlgElement f = random_coinvariant(rng);
        for (Param leg : {Param::p, Param::q}) {
            const TrivializedElement t = chi(f, leg);
            for (const auto& [key, c] : t.terms()) CHECK(key.second == 0);
        }
    }
}

TEST_CASE("a non-glued pair is detected") {
    // a b^* has winding 2: the two boundary images differ unless phi12 is applied.
    const AlgElement x = mul(a, AlgElement::generator(Generator::b_star));
    const BoundaryTensor lhs = boundary_leg(chi(x, Param::p));
    const BoundaryTensor rhs = boundary_leg(chi(x, Param::q));
    CHECK(lhs != rhs);
    CHECK(lhs == phi12(rhs));
}
