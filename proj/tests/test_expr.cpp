#include "qhopf/expr.hpp"
#include "qhopf/random.hpp"
#include "qhopf/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

std::string tree(const std::string& text) { return to_string(*parse_expression(text)); }

std::size_t error_position(const std::string& text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
}

const AlgElement a = AlgElement::generator(Generator::a);
const AlgElement as = AlgElement::generator(Generator::a_star);
const AlgElement b = AlgElement::generator(Generator::b);

}  // namespace

TEST_CASE("tree forms") {
    CHECK(tree("a^* * a") == "Mul(Star(a), a)");
    CHECK(tree("(1 - a*a^*)^2") == "Pow(Sub(1, Mul(a, Star(a))), 2)");
    CHECK(tree("q * b * (1 - a * a^*)") == "Mul(Mul(q, b), Sub(1, Mul(a, Star(a))))");
    CHECK(tree("a b a^*") == "Mul(Mul(a, b), Star(a))");
    CHECK(tree("a^*^2") == "Pow(Star(a), 2)");
    CHECK(tree("a - b - a") == "Sub(Sub(a, b), a)");
    CHECK(tree("-a + 2/3 p") == "Add(Neg(a), Mul(Div(2, 3), p))");
    CHECK(tree("u^-2") == "Pow(u, -2)");
    CHECK(tree("u^(-2)") == "Pow(u, -2)");
    CHECK(tree("iota(f0 f1)") == "Iota(Mul(f0, f1))");
}

TEST_CASE("syntax errors carry positions") {
    CHECK(error_position("a +") == 3);
    CHECK(error_position("a $ b") == 2);
    CHECK(error_position("(a") == 2);
    CHECK(error_position("a^") == 2);
    CHECK(error_position("a^-1") == 1);
    CHECK(error_position("b^(-1)") == 1);
    CHECK(error_position("f0 a") == 3);
    CHECK(error_position("u a") == 2);
    CHECK(error_position("iota(a)") == 0);
}

TEST_CASE("evaluation") {
    CHECK(parse_element("a^* * a") == mul(as, a));
    CHECK(parse_element("q * b * (1 - a * a^*)") ==
          ParamScalar::q() * mul(b, AlgElement::unit() - mul(a, as)));
    CHECK(parse_element("f1") == iota(S2Generator::f1));
    CHECK(parse_element("iota(f1^* f1)") == mul(iota(S2Generator::f1_star), iota(S2Generator::f1)));
    CHECK(parse_element("(1 - p^2)/(1 - p)") == AlgElement(ParamScalar(1) + ParamScalar::p()));
    CHECK(std::get<LaurentElement>(evaluate_text("u^-2 * u^3")) == LaurentElement::u_power(1));
    CHECK(std::get<LaurentElement>(evaluate_text("(u^2)^-1")) == LaurentElement::u_power(-2));
    CHECK(std::get<ParamScalar>(evaluate_text("2^-1")) == ParamScalar(mpq_class(1, 2)));
    CHECK_THROWS_AS(evaluate_text("1/0"), std::domain_error);
    CHECK_THROWS_AS(evaluate_text("(1 + u)^-1"), std::domain_error);
    CHECK_THROWS_AS(parse_element("u"), std::domain_error);
    CHECK_THROWS_AS(evaluate_text("a / b"), ParseError);
}

TEST_CASE("canonical text is a parse fixpoint") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        const AlgElement x = random_element(rng);
        const std::string once = x.to_string();
        const AlgElement back = parse_element(once);
        CHECK(back == x);
        CHECK(back.to_string() == once);
    }
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(72);
    for (int i = 0; i < 100; ++i) {
        const AlgElement x = random_element(rng);
        CHECK(element_from_json(to_json(x)) == x);
        CHECK(element_from_json(Json::parse(to_json(x).dump())) == x);
    }
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"mu": 1}])")), std::invalid_argument);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"mu": 0, "m": 1, "n": 1, "nu": 0, "coeff": "1"}])")),
                    std::invalid_argument);
}

TEST_CASE("scalar text") {
    CHECK(ParamScalar::parse("1/(1 - q)").to_string() == "1/(1 - q)");
    CHECK(ParamScalar::parse("0.25") == ParamScalar(mpq_class(1, 4)));
    CHECK_THROWS(ParamScalar::parse("a"));
}
