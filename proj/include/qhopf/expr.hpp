#pragma once

// Text input for elements of O(S^3_pq), O(S^2_pq) (through iota) and O(U(1)).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := '-' unary | postfix
//   postfix := atom ('^' ('*' | int | '-' int | '(' ['-'] int ')'))*
//   atom    := number | 'p' | 'q' | 'a' | 'b' | 'f0' | 'f1' | 'u'
//            | 'iota' '(' expr ')' | '(' expr ')'
//
// Postfix operators apply left to right, so a^*^2 = (a^*)^2.

#include "qhopf/hopf.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace qhopf {

enum class ExprKind { number, param, generator, add, sub, neg, mul, div, star, pow, iota };

/// Which algebra an expression lives in before evaluation.
enum class ExprFamily { scalar, sphere, base, circle };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind = ExprKind::number;
    ExprFamily family = ExprFamily::scalar;
    mpq_class number;
    Param param = Param::p;
    std::string name;  // generator name: a, b, f0, f1, u
    int exponent = 0;
    ExprPtr lhs, rhs;
    std::size_t position = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Throws ParseError on malformed input, on negative powers of anything but
/// u (or scalars), and on f-generators mixed with a, b outside iota(...).
ExprPtr parse_expression(const std::string& text);

/// Tree form, e.g. "Mul(Star(a), a)".
std::string to_string(const Expr& e);

using Value = std::variant<ParamScalar, AlgElement, LaurentElement>;

/// Bare f-generators are mapped through iota.
/// Throws std::domain_error on division by a non-scalar or zero, or on
/// inverting a non-monomial Laurent element.
Value evaluate(const Expr& e);

Value evaluate_text(const std::string& text);
/// Scalars are promoted to multiples of the unit. Throws std::domain_error for O(U(1)) values.
AlgElement parse_element(const std::string& text);

std::string to_string(const Value& v);

}  // namespace qhopf
