#include "qhopf/chern.hpp"
#include "qhopf/galois.hpp"
#include "qhopf/numrep.hpp"
#include "qhopf/random.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();
const ParamScalar ONE(1);
const AlgElement one = AlgElement::unit();
const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement as = AlgElement::generator(Generator::a_star);
const AlgElement b = AlgElement::generator(Generator::b);
const AlgElement bs = AlgElement::generator(Generator::b_star);

// Sum of r l over the terms l (x) r of the connection: the matrix trace of E_mu
// without fixing an ordering of the rows.
AlgElement flipped_leg_product(int mu) {
    const TensorElement l = strong_connection(-mu);
    AlgElement out;
    for (const auto& [key, c] : l.terms())
        out += c * mul(AlgElement::monomial(key.second), AlgElement::monomial(key.first));
    return out;
}

}  // namespace

TEST_CASE("E_{-1} and its mirror") {
    const CoinvariantMatrix e = idempotent(-1);
    REQUIRE(e.rows() == 2);
    CHECK(e.at(0, 0) == mul(a, as));
    CHECK(e.at(0, 1) == Q * mul(mul(a, one - mul(a, as)), b));
    CHECK(e.at(1, 0) == mul(as, bs));
    CHECK(e.at(1, 1) == Q * mul(mul(one - mul(a, as), bs), b));
    CHECK(matrix_trace(e) == mul(a, as) + Q * mul(mul(one - mul(a, as), bs), b));

    const CoinvariantMatrix f = idempotent(1);
    CHECK(f.at(0, 0) == mul(b, bs));
    CHECK(f.at(0, 1) == P * mul(mul(b, one - mul(b, bs)), a));
    CHECK(f.at(1, 0) == mul(bs, as));
    CHECK(f.at(1, 1) == P * mul(mul(one - mul(b, bs), as), a));
}

TEST_CASE("idempotents for |mu| <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (int mu : {-n, n}) {
            CAPTURE(mu);
            const CoinvariantMatrix e = idempotent(mu);
            CHECK(e.rows() == static_cast<std::size_t>(n + 1));
            CHECK(e.all_coinvariant());
            CHECK(matrix_product(e, e) == e);
            CHECK(matrix_product_serial(e, e) == e);
            CHECK(matrix_trace(e) == flipped_leg_product(mu));
        }
    CHECK_THROWS_AS(idempotent(0), std::invalid_argument);
}

TEST_CASE("a perturbed matrix is not idempotent") {
    CoinvariantMatrix e = idempotent(-2);
    e.at(0, 0) += AlgElement(Q);
    CHECK_FALSE(matrix_product(e, e) == e);
}

TEST_CASE("matrix trace") {
    CHECK(matrix_trace(CoinvariantMatrix::identity(2)) == AlgElement(2));
    CHECK_THROWS_AS(matrix_trace(CoinvariantMatrix(2, 3)), std::invalid_argument);
    CHECK(is_coinvariant(matrix_trace(idempotent(-2))));
}

TEST_CASE("trace functional anchor values") {
    CHECK(trace_functional(one).is_zero());
    CHECK(trace_functional(one - mul(a, as)) == ONE / (ONE - Q));
    CHECK(trace_functional(AlgElement::monomial({0, 0, 2, 0})) == -ONE / (ONE - P * P));
    CHECK(trace_functional(AlgElement::monomial({2, 1, 0, 2})).is_zero());
    const AlgElement f0 = iota(S2Generator::f0), f1 = iota(S2Generator::f1), f1s = iota(S2Generator::f1_star);
    CHECK(f0 - mul(f1, f1s) == one - mul(a, as));
    CHECK_THROWS_AS(trace_functional(a), std::domain_error);
}

TEST_CASE("trace functional is a trace on the base") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_coinvariant(rng), y = random_coinvariant(rng);
        CHECK(trace_functional(mul(x, y)) == trace_functional(mul(y, x)));
        CHECK(trace_functional(x + y) == trace_functional(x) + trace_functional(y));
    }
}

TEST_CASE("trace functional matches truncated operator traces") {
    const double p = 0.5, q = 1.0 / 3.0;
    for (int mu = -3; mu <= 3; ++mu)
        for (int d = 0; d <= 6; ++d)
            for (int side = 0; side < (d == 0 ? 1 : 2); ++side) {
                const AlgElement x = AlgElement::monomial({mu, side == 0 ? d : 0, side == 1 ? d : 0, mu});
                const NumericTrace t = numeric_trace(x, 300, p, q);
                CHECK(std::abs(t.value - trace_functional(x).eval(p, q)) <= t.tail_bound + 1e-9);
            }
}

TEST_CASE("pairings are integers and agree with truncated traces") {
    CHECK(pairing(-1) == ParamScalar(-1));
    for (int n = 1; n <= 4; ++n)
        for (int mu : {-n, n}) {
            CAPTURE(mu);
            const ParamScalar v = pairing(mu);
            CHECK(v.is_integer());
            const NumericTrace t = numeric_trace(matrix_trace(idempotent(mu)), 300, 0.5, 1.0 / 3.0);
            CHECK(std::abs(t.value - v.eval(0.5, 1.0 / 3.0)) <= t.tail_bound + 1e-9);
        }
}
