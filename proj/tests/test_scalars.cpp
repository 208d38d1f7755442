#include "oracles.hpp"

#include "qhopf/disc_kernel.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

const ParamScalar P = ParamScalar::p();
const ParamScalar Q = ParamScalar::q();

ParamScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, 2), pick(0, 3);
    ParamScalar num = ParamScalar::monomial(e(rng), e(rng), c(rng)) + ParamScalar::monomial(e(rng), e(rng), c(rng));
    if (pick(rng) == 0) return num;
    return num / (ParamScalar(1) - ParamScalar::monomial(1 + e(rng), e(rng)));
}

}  // namespace

TEST_CASE("canonical forms cancel common factors") {
    CHECK((ParamScalar(1) - P * P) / (ParamScalar(1) - P) == ParamScalar(1) + P);
    CHECK((P * P - Q * Q) / (P - Q) == P + Q);
    CHECK((Q / P) * (P / Q) == ParamScalar(1));
    CHECK((ParamScalar(1) / (ParamScalar(1) - Q)).to_string() == "1/(1 - q)");
    CHECK(ParamScalar(mpq_class(-3, 4)).to_string() == "-3/4");
    CHECK(ParamScalar().is_zero());
    CHECK((P - P).to_string() == "0");
}

TEST_CASE("field axioms on random rational functions") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const ParamScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x - x == ParamScalar());
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("evaluation agrees with exact substitution") {
    std::mt19937_64 rng(5);
    const mpq_class pv(2, 7), qv(3, 5);
    for (int i = 0; i < 100; ++i) {
        const ParamScalar x = random_scalar(rng);
        const ParamScalar s = x.substitute(&pv, &qv);
        REQUIRE(s.is_constant());
        CHECK(x.eval(pv.get_d(), qv.get_d()) == doctest::Approx(s.constant_value().get_d()).epsilon(1e-12));
    }
}

TEST_CASE("poles are reported") {
    const ParamScalar x = ParamScalar(1) / (ParamScalar(1) - Q);
    CHECK_THROWS_AS(x.eval(0.5, 1.0), std::domain_error);
    const mpq_class one(1);
    CHECK_THROWS_AS(x.substitute(nullptr, &one), std::domain_error);
    CHECK_THROWS_AS(ParamScalar(1) / ParamScalar(), std::domain_error);
}

TEST_CASE("signed powers") {
    CHECK(Q.pow(-2) * Q.pow(2) == ParamScalar(1));
    CHECK(ParamScalar::monomial(-1, 2) == Q * Q / P);
    CHECK((ParamScalar(1) + P).pow(0) == ParamScalar(1));
}

TEST_CASE("integer detection") {
    CHECK(ParamScalar(-1).is_integer());
    CHECK_FALSE(ParamScalar(mpq_class(1, 2)).is_integer());
    CHECK_FALSE(P.is_integer());
    CHECK(((ParamScalar(1) - Q) / (ParamScalar(1) - Q)).is_integer());
}

TEST_CASE("Gauss binomials match the inversion count") {
    for (Param r : {Param::p, Param::q})
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) {
                const ParamScalar expected = oracle::gauss_by_inversions(n, k, r);
                CHECK(qbinomial(n, k, r) == expected);
                CHECK(qbinomial_quotient(n, k, r) == expected);
            }
    CHECK(qbinomial(2, 1) == ParamScalar(1) + Q);
    CHECK(qbinomial(4, 2) == ParamScalar(1) + Q + ParamScalar(2) * Q.pow(2) + Q.pow(3) + Q.pow(4));
    CHECK_THROWS_AS(qbinomial(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(qbinomial(-1, 0), std::invalid_argument);
}

TEST_CASE("disc products agree with the weighted-shift representation") {
    const int N = 40;
    const double r = 0.35;
    const Eigen::MatrixXd x = oracle::disc_shift(N, r);
    for (int mu1 = -3; mu1 <= 3; ++mu1)
        for (int m1 = 0; m1 <= 2; ++m1)
            for (int mu2 = -3; mu2 <= 3; ++mu2)
                for (int m2 = 0; m2 <= 2; ++m2) {
                    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(N, N);
                    for (const DiscTerm& t : disc_product(mu1, m1, mu2, m2)) {
                        double c = 0.0;
                        for (const auto& [e, v] : t.coeff) c += static_cast<double>(v) * std::pow(r, e);
                        sum += c * oracle::disc_word(t.shift, t.power, x);
                    }
                    const Eigen::MatrixXd direct = oracle::disc_word(mu1, m1, x) * oracle::disc_word(mu2, m2, x);
                    // Columns far from the truncation edge are exact.
                    const int safe = N - 8;
                    CHECK((sum - direct).leftCols(safe).norm() < 1e-10);
                }
}

TEST_CASE("Laurent coefficients convert to scalars") {
    CHECK(laurent_to_scalar(LaurentR{{-1, 2}, {1, -1}}, Param::q) == ParamScalar(2) / Q - Q);
    CHECK(laurent_to_scalar(LaurentPQ{{{1, -1}, 3}}) == ParamScalar(3) * P / Q);
    CHECK(laurent_to_scalar(LaurentPQ{}).is_zero());
}
