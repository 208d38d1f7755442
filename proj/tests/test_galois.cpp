#include "oracles.hpp"

#include "qhopf/galois.hpp"

#include <doctest.h>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();
const AlgElement one = AlgElement::unit();
const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement as = AlgElement::generator(Generator::a_star);
const AlgElement b = AlgElement::generator(Generator::b);
const AlgElement bs = AlgElement::generator(Generator::b_star);

AlgElement power(const AlgElement& x, int k) {
    AlgElement out = one;
    for (int i = 0; i < k; ++i) out = mul(out, x);
    return out;
}

// Gauss-binomial expansion of l(u^n) built from generator products, with the
// binomials taken from the inversion count:
//   sum_k [n k]_q q^{n-k} (1 - a a^*)^{n-k} a^{*k} b^{n-k} (x) a^k b^{*(n-k)}
// and the mirror a <-> b, q <-> p for u^{*n}.
TensorElement connection_reference(int n, int sign) {
    const Param r = sign > 0 ? Param::q : Param::p;
    const AlgElement& x = sign > 0 ? a : b;
    const AlgElement& xs = sign > 0 ? as : bs;
    const AlgElement& y = sign > 0 ? b : a;
    const AlgElement& ys = sign > 0 ? bs : as;
    const AlgElement defect = one - mul(x, xs);
    TensorElement out;
    for (int k = 0; k <= n; ++k) {
        const ParamScalar c = oracle::gauss_by_inversions(n, k, r) * ParamScalar::power(r, n - k);
        const AlgElement left = mul(mul(power(defect, n - k), power(xs, k)), power(y, n - k));
        const AlgElement right = mul(power(x, k), power(ys, n - k));
        out += TensorElement::pure(c * left, right);
    }
    return out;
}

}  // namespace

TEST_CASE("lifted canonical map on the seed tensors") {
    const TensorElement lu = TensorElement::pure(as, a) + TensorElement::pure(Q * mul(b, one - mul(a, as)), bs);
    const TensorElement lus = TensorElement::pure(bs, b) + TensorElement::pure(P * mul(a, one - mul(b, bs)), as);
    CHECK(lifted_can(lu) == unit_cotensor(1));
    CHECK(lifted_can(lus) == unit_cotensor(-1));
    CHECK(lifted_can(TensorElement::unit()) == unit_cotensor(0));
    CHECK(strong_connection(1) == lu);
    CHECK(strong_connection(-1) == lus);
    CHECK(strong_connection(0) == TensorElement::unit());
    CHECK(galois_witness(1) == lu);
    CHECK(galois_witness(-1) == lus);
}

TEST_CASE("closed form at n = 2") {
    const AlgElement d = one - mul(a, as);
    const TensorElement expected = TensorElement::pure(power(as, 2), power(a, 2)) +
                                   TensorElement::pure((ParamScalar(1) + Q) * Q * mul(mul(d, as), b), mul(a, bs)) +
                                   TensorElement::pure(Q * Q * mul(mul(d, d), power(b, 2)), power(bs, 2));
    CHECK(strong_connection_closed(2, 1) == expected);
    CHECK(strong_connection(2) == expected);
}

TEST_CASE("recursion, closed form and the generator expansion agree") {
    for (int n = 1; n <= 6; ++n)
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            const TensorElement reference = connection_reference(n, sign);
            CHECK(strong_connection_closed(n, sign) == reference);
            CHECK(strong_connection(sign * n) == reference);
        }
}

TEST_CASE("strong connection identities") {
    for (int k = -6; k <= 6; ++k) {
        CAPTURE(k);
        const TensorElement l = strong_connection(k);
        CHECK(lifted_can(l) == unit_cotensor(k));
        CHECK(multiply_legs(l) == one);
        for (const auto& [key, c] : l.terms()) {
            CHECK(key.first.winding() == -k);
            CHECK(key.second.winding() == k);
        }
        for (const auto& [key, c] : right_coaction(l)) CHECK(std::get<2>(key) == k);
        for (const auto& [key, c] : left_coaction(l)) CHECK(std::get<0>(key) == k);
    }
    const ConnectionReport report = check_connection_properties(8);
    CHECK(report.pass());
    CHECK(report.k_max == 8);
}

TEST_CASE("partition of unity for k = 1") {
    const AlgElement sum = mul(as, a) + Q * mul(mul(b, one - mul(a, as)), bs);
    CHECK(sum == one);
}

TEST_CASE("galois witnesses compose") {
    for (int k = -6; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(lifted_can(galois_witness(k)) == unit_cotensor(k));
    }
}

TEST_CASE("sandwich and leg multiplication") {
    const TensorElement outer = TensorElement::pure(a, b);
    const TensorElement inner = TensorElement::pure(as, bs);
    CHECK(sandwich(outer, inner) == TensorElement::pure(mul(a, as), mul(bs, b)));
    CHECK(multiply_legs(TensorElement::pure(as, a)) == mul(as, a));
    CHECK(sandwich(TensorElement::unit(), inner) == inner);
}

TEST_CASE("a corrupted connection is rejected") {
    TensorElement l = strong_connection(2);
    l.add_term({}, {}, Q);
    CHECK(lifted_can(l) != unit_cotensor(2));
    TensorElement scaled;
    const TensorElement l3 = strong_connection(3);
    for (const auto& [key, c] : l3.terms()) scaled.add_term(key.first, key.second, c * P);
    CHECK(multiply_legs(scaled) != one);
}
