#pragma once

// Exact coefficient field: rational functions in the deformation parameters
// p and q with rational coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

enum class Param { p, q };

/// Bivariate polynomial in p, q over Q.
///
/// Terms are kept sorted ascending in graded-lexicographic order with p < q
/// (total degree first, then the q exponent), with no zero coefficients.
class Poly {
public:
    struct Term {
        int p_exp = 0;
        int q_exp = 0;
        mpq_class coeff;
    };

    Poly() = default;
    explicit Poly(const mpq_class& c);
    static Poly monomial(int p_exp, int q_exp, const mpq_class& c = 1);
    static Poly variable(Param v) { return v == Param::p ? monomial(1, 0) : monomial(0, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    /// Largest term in grlex order. Undefined on zero.
    const Term& leading() const { return terms_.back(); }
    int total_degree() const;
    int degree_in(Param v) const;
    int min_exponent(Param v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b);

    /// Multiplies by p^dp q^dq; both shifts must keep exponents non-negative.
    Poly shifted(int dp, int dq) const;

    double eval(double p, double q) const;
    std::string to_string() const;

private:
    friend class PolyBuilder;
    std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// A greatest common divisor (up to a rational unit). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Rational function num/den in canonical form: gcd(num, den) is a unit and
/// the grlex-leading coefficient of den is 1. The zero element is 0/1.
class ParamScalar {
public:
    ParamScalar() : den_(mpq_class(1)) {}
    ParamScalar(int c) : ParamScalar(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
    ParamScalar(const mpq_class& c);                   // NOLINT(google-explicit-constructor)
    explicit ParamScalar(const Poly& num);
    ParamScalar(const Poly& num, const Poly& den);

    static ParamScalar param(Param v) { return ParamScalar(Poly::variable(v)); }
    static ParamScalar p() { return param(Param::p); }
    static ParamScalar q() { return param(Param::q); }
    /// p^p_exp q^q_exp for signed exponents.
    static ParamScalar monomial(int p_exp, int q_exp, const mpq_class& c = 1);
    /// r^k with r the chosen parameter, k signed.
    static ParamScalar power(Param v, int k) {
        return v == Param::p ? monomial(k, 0) : monomial(0, k);
    }
    static ParamScalar parse(const std::string& text);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// True iff the value is an integer constant.
    bool is_integer() const;
    /// Constant value; throws std::domain_error when not constant.
    mpq_class constant_value() const;

    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    ParamScalar& operator/=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    ParamScalar pow(int k) const;

    /// Floating evaluation. Throws std::domain_error at a pole.
    double eval(double p, double q) const;
    /// Exact specialization of p and/or q to rationals.
    ParamScalar substitute(const mpq_class* p, const mpq_class* q) const;

    /// Canonical text, e.g. "(1 - q^2)/(1 - p)".
    std::string to_string() const;
    /// True if the rendering is a single product (safe to prefix with "-" or
    /// follow with "*" without parentheses).
    bool renders_atomic() const;
    /// True if the numerator is a single term with negative coefficient.
    bool has_negative_sign() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

enum class ScalarOp { add, sub, mul, div };
ParamScalar scalar_arith(const ParamScalar& x, const ParamScalar& y, ScalarOp op);

/// Gauss binomial in the chosen parameter, computed by the Pascal recursion
/// C(n,k) = C(n-1,k-1) + r^k C(n-1,k). Throws std::invalid_argument if k > n
/// or either is negative.
ParamScalar qbinomial(int n, int k, Param r = Param::q);

/// Same value through the quotient of products (r-1)...(r^n-1) / ... .
ParamScalar qbinomial_quotient(int n, int k, Param r = Param::q);

double scalar_eval(const ParamScalar& x, double p_val, double q_val);

}  // namespace qhopf
