#include "qhopf/expr.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qhopf {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '.') {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            if (s.substr(start, i - start) == ".") throw ParseError("malformed number", start);
            out.push_back({Tok::number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, s.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

mpq_class parse_number(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return mpq_class(text);
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class den = 1;
    for (char d : frac) {
        num = num * 10 + (d - '0');
        den *= 10;
    }
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

const char* family_name(ExprFamily f) {
    switch (f) {
        case ExprFamily::scalar: return "scalar";
        case ExprFamily::sphere: return "a, b";
        case ExprFamily::base: return "f0, f1";
        case ExprFamily::circle: return "u";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[i_]; }
    const Token& next() { return tokens_[i_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++i_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    static ExprFamily combine(ExprFamily x, ExprFamily y, std::size_t pos) {
        if (x == ExprFamily::scalar) return y;
        if (y == ExprFamily::scalar || x == y) return x;
        throw ParseError(std::string("cannot combine ") + family_name(x) + " with " + family_name(y) +
                             (x == ExprFamily::circle || y == ExprFamily::circle ? "" : " outside iota(...)"),
                         pos);
    }

    static ExprPtr binary(ExprKind kind, ExprPtr l, ExprPtr r, std::size_t pos) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->family = combine(l->family, r->family, pos);
        e->position = pos;
        e->lhs = std::move(l);
        e->rhs = std::move(r);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = next();
            e = binary(op.kind == Tok::plus ? ExprKind::add : ExprKind::sub, e, term(), op.pos);
        }
        return e;
    }

    bool starts_atom() const {
        const Tok k = peek().kind;
        return k == Tok::number || k == Tok::ident || k == Tok::lparen;
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (peek().kind == Tok::star) {
                const std::size_t pos = next().pos;
                e = binary(ExprKind::mul, e, unary(), pos);
            } else if (peek().kind == Tok::slash) {
                const std::size_t pos = next().pos;
                ExprPtr r = unary();
                if (r->family != ExprFamily::scalar) throw ParseError("division by a non-scalar", pos);
                e = binary(ExprKind::div, e, r, pos);
            } else if (starts_atom()) {
                const std::size_t pos = peek().pos;
                e = binary(ExprKind::mul, e, unary(), pos);
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        if (peek().kind == Tok::minus) {
            const std::size_t pos = next().pos;
            auto e = std::make_shared<Expr>();
            e->kind = ExprKind::neg;
            e->lhs = unary();
            e->family = e->lhs->family;
            e->position = pos;
            return e;
        }
        return postfix();
    }

    int exponent_literal() {
        bool neg = false;
        const bool paren = accept(Tok::lparen);
        if (accept(Tok::minus)) neg = true;
        if (peek().kind != Tok::number || peek().text.find('.') != std::string::npos)
            throw ParseError("expected an integer exponent or '*'", peek().pos);
        const Token& t = next();
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.pos);
        }
        if (v > 10000) throw ParseError("exponent out of range", t.pos);
        if (paren) expect(Tok::rparen, "')'");
        return static_cast<int>(neg ? -v : v);
    }

    ExprPtr postfix() {
        ExprPtr e = atom();
        while (peek().kind == Tok::caret) {
            const std::size_t pos = next().pos;
            auto node = std::make_shared<Expr>();
            node->position = pos;
            node->family = e->family;
            if (accept(Tok::star)) {
                node->kind = ExprKind::star;
            } else {
                node->kind = ExprKind::pow;
                node->exponent = exponent_literal();
                if (node->exponent < 0 && e->family != ExprFamily::circle && e->family != ExprFamily::scalar)
                    throw ParseError("negative power is only defined for the unitary u", pos);
            }
            node->lhs = e;
            e = node;
        }
        return e;
    }

    ExprPtr atom() {
        const Token& t = peek();
        auto e = std::make_shared<Expr>();
        e->position = t.pos;
        if (t.kind == Tok::number) {
            next();
            e->kind = ExprKind::number;
            e->number = parse_number(t.text);
            return e;
        }
        if (t.kind == Tok::lparen) {
            next();
            ExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind != Tok::ident) throw ParseError(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
        next();
        if (t.text == "p" || t.text == "q") {
            e->kind = ExprKind::param;
            e->param = t.text == "p" ? Param::p : Param::q;
            return e;
        }
        if (t.text == "a" || t.text == "b" || t.text == "f0" || t.text == "f1" || t.text == "u") {
            e->kind = ExprKind::generator;
            e->name = t.text;
            e->family = t.text == "u" ? ExprFamily::circle
                        : (t.text[0] == 'f' ? ExprFamily::base : ExprFamily::sphere);
            return e;
        }
        if (t.text == "iota") {
            expect(Tok::lparen, "'(' after iota");
            ExprPtr inner = expr();
            expect(Tok::rparen, "')'");
            if (inner->family != ExprFamily::base && inner->family != ExprFamily::scalar)
                throw ParseError("iota expects an expression in f0, f1", t.pos);
            e->kind = ExprKind::iota;
            e->family = ExprFamily::sphere;
            e->lhs = std::move(inner);
            return e;
        }
        throw ParseError("unknown symbol '" + t.text + "'", t.pos);
    }

    std::vector<Token> tokens_;
    std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
    auto bin = [&](const char* name) { return std::string(name) + "(" + to_string(*e.lhs) + ", " + to_string(*e.rhs) + ")"; };
    switch (e.kind) {
        case ExprKind::number: return e.number.get_str();
        case ExprKind::param: return e.param == Param::p ? "p" : "q";
        case ExprKind::generator: return e.name;
        case ExprKind::add: return bin("Add");
        case ExprKind::sub: return bin("Sub");
        case ExprKind::mul: return bin("Mul");
        case ExprKind::div: return bin("Div");
        case ExprKind::neg: return "Neg(" + to_string(*e.lhs) + ")";
        case ExprKind::star: return "Star(" + to_string(*e.lhs) + ")";
        case ExprKind::pow: return "Pow(" + to_string(*e.lhs) + ", " + std::to_string(e.exponent) + ")";
        case ExprKind::iota: return "Iota(" + to_string(*e.lhs) + ")";
    }
    return "?";
}

// ---- evaluation ----------------------------------------------------------------------

namespace {

AlgElement as_element(const Value& v) {
    if (const auto* s = std::get_if<ParamScalar>(&v)) return AlgElement(*s);
    return std::get<AlgElement>(v);
}

LaurentElement as_laurent(const Value& v) {
    if (const auto* s = std::get_if<ParamScalar>(&v)) return LaurentElement(*s);
    return std::get<LaurentElement>(v);
}

Value generator_value(const std::string& name) {
    if (name == "a") return AlgElement::generator(Generator::a);
    if (name == "b") return AlgElement::generator(Generator::b);
    if (name == "f0") return iota(S2Generator::f0);
    if (name == "f1") return iota(S2Generator::f1);
    return LaurentElement::u_power(1);
}

Value scale(const Value& v, const ParamScalar& c) {
    return std::visit([&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LaurentElement>) return LaurentElement(c) * x;
        else return x * c;
    }, v);
}

Value combine(const Value& x, const Value& y, ExprKind op) {
    const bool xs = std::holds_alternative<ParamScalar>(x);
    const bool ys = std::holds_alternative<ParamScalar>(y);
    if (xs && ys) {
        const auto& a = std::get<ParamScalar>(x);
        const auto& b = std::get<ParamScalar>(y);
        switch (op) {
            case ExprKind::add: return a + b;
            case ExprKind::sub: return a - b;
            case ExprKind::mul: return a * b;
            default: break;
        }
    }
    const bool circle = std::holds_alternative<LaurentElement>(x) || std::holds_alternative<LaurentElement>(y);
    if (circle) {
        const LaurentElement a = as_laurent(x), b = as_laurent(y);
        switch (op) {
            case ExprKind::add: return a + b;
            case ExprKind::sub: return a - b;
            case ExprKind::mul: return a * b;
            default: break;
        }
    } else {
        if (op == ExprKind::mul && xs) return scale(y, std::get<ParamScalar>(x));
        if (op == ExprKind::mul && ys) return scale(x, std::get<ParamScalar>(y));
        const AlgElement a = as_element(x), b = as_element(y);
        switch (op) {
            case ExprKind::add: return a + b;
            case ExprKind::sub: return a - b;
            case ExprKind::mul: return mul(a, b);
            default: break;
        }
    }
    throw std::logic_error("combine: unsupported operator");
}

Value power(const Value& v, int k) {
    if (const auto* s = std::get_if<ParamScalar>(&v)) {
        if (k < 0 && s->is_zero()) throw std::domain_error("negative power of zero");
        return s->pow(k);
    }
    if (const auto* l = std::get_if<LaurentElement>(&v)) {
        LaurentElement base = *l;
        if (k < 0) {
            if (base.terms().size() != 1) throw std::domain_error("only monomials in u are invertible");
            const auto& [e, c] = *base.terms().begin();
            base = LaurentElement::u_power(-e, ParamScalar(1) / c);
            k = -k;
        }
        LaurentElement out(1);
        for (int i = 0; i < k; ++i) out = out * base;
        return out;
    }
    if (k < 0) throw std::domain_error("negative power is only defined for the unitary u");
    const auto& x = std::get<AlgElement>(v);
    AlgElement out = AlgElement::unit();
    for (int i = 0; i < k; ++i) out = mul(out, x);
    return out;
}

Value star_value(const Value& v) {
    return std::visit([](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ParamScalar>) return x;  // p, q and rationals are real
        else return star(x);
    }, v);
}

}  // namespace

Value evaluate(const Expr& e) {
    switch (e.kind) {
        case ExprKind::number: return ParamScalar(e.number);
        case ExprKind::param: return ParamScalar::param(e.param);
        case ExprKind::generator: return generator_value(e.name);
        case ExprKind::add:
        case ExprKind::sub:
        case ExprKind::mul: return combine(evaluate(*e.lhs), evaluate(*e.rhs), e.kind);
        case ExprKind::div: {
            const Value r = evaluate(*e.rhs);
            const auto* d = std::get_if<ParamScalar>(&r);
            if (d == nullptr) throw std::domain_error("division by a non-scalar");
            if (d->is_zero()) throw std::domain_error("division by zero");
            return scale(evaluate(*e.lhs), ParamScalar(1) / *d);
        }
        case ExprKind::neg: return scale(evaluate(*e.lhs), ParamScalar(-1));
        case ExprKind::star: return star_value(evaluate(*e.lhs));
        case ExprKind::pow: return power(evaluate(*e.lhs), e.exponent);
        case ExprKind::iota: return as_element(evaluate(*e.lhs));  // f-generators already map through iota
    }
    throw std::logic_error("evaluate: unknown node");
}

Value evaluate_text(const std::string& text) { return evaluate(*parse_expression(text)); }

AlgElement parse_element(const std::string& text) {
    const Value v = evaluate_text(text);
    if (std::holds_alternative<LaurentElement>(v)) throw std::domain_error("expected an element of O(S^3_pq), got one of O(U(1))");
    return as_element(v);
}

std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

ParamScalar ParamScalar::parse(const std::string& text) {
    const Value v = evaluate_text(text);
    const auto* s = std::get_if<ParamScalar>(&v);
    if (s == nullptr) throw std::invalid_argument("not a scalar expression: " + text);
    return *s;
}

}  // namespace qhopf
