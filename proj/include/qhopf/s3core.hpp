#pragma once

// The *-algebra O(S^3_pq) on its monomial basis
//   a_mu (1 - a a^*)^m (1 - b b^*)^n b_nu,   m n = 0,
// where a_mu = a^mu for mu >= 0 and (a^*)^|mu| otherwise (same for b_nu).

#include "qhopf/scalars.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qhopf {

struct BasisMonomial {
    int mu = 0;  // signed power of a
    int m = 0;   // power of (1 - a a^*)
    int n = 0;   // power of (1 - b b^*)
    int nu = 0;  // signed power of b

    auto operator<=>(const BasisMonomial&) const = default;

    /// Exponent of u picked up under the coaction: a -> +1, b -> -1.
    int winding() const { return mu - nu; }
    /// Letter count of the monomial written as a word in a, a^*, b, b^*.
    int degree() const;
    bool is_unit() const { return mu == 0 && m == 0 && n == 0 && nu == 0; }
    bool valid() const { return m >= 0 && n >= 0 && m * n == 0; }
};

enum class Generator { a, a_star, b, b_star };
enum class Side { left, right };

/// Finite linear combination of basis monomials. Zero coefficients are never stored.
class AlgElement {
public:
    using TermMap = std::map<BasisMonomial, ParamScalar>;

    AlgElement() = default;
    AlgElement(const ParamScalar& c);  // NOLINT(google-explicit-constructor)
    AlgElement(int c) : AlgElement(ParamScalar(c)) {}  // NOLINT(google-explicit-constructor)

    static AlgElement unit() { return AlgElement(1); }
    static AlgElement monomial(const BasisMonomial& mono, const ParamScalar& c = 1);
    static AlgElement generator(Generator g);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of a monomial (zero if absent).
    ParamScalar coeff(const BasisMonomial& mono) const;
    /// Maximal monomial degree; 0 for scalars and zero.
    int degree() const;

    void add_term(const BasisMonomial& mono, const ParamScalar& c);

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const ParamScalar& c);
    friend AlgElement operator+(AlgElement x, const AlgElement& y) { return x += y; }
    friend AlgElement operator-(AlgElement x, const AlgElement& y) { return x -= y; }
    friend AlgElement operator*(AlgElement x, const ParamScalar& c) { return x *= c; }
    friend AlgElement operator*(const ParamScalar& c, AlgElement x) { return x *= c; }
    friend bool operator==(const AlgElement&, const AlgElement&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Sink receiving (monomial, coefficient) pairs.
using TermSink = std::function<void(const BasisMonomial&, const ParamScalar&)>;

/// Product of two basis monomials, expanded on the basis. The coefficients
/// handed to the sink are Laurent monomial sums in p, q.
void multiply_monomials(const BasisMonomial& x, const BasisMonomial& y, const TermSink& sink);

/// Product in O(S^3_pq). Parallel over the left factor's terms when built with OpenMP.
AlgElement mul(const AlgElement& x, const AlgElement& y);
/// Same product, single-threaded.
AlgElement mul_serial(const AlgElement& x, const AlgElement& y);
/// Same product computed by expanding y into generator words and folding
/// mul_by_generator; an independent route used as a reference.
AlgElement mul_by_generators(const AlgElement& x, const AlgElement& y);

/// g x (left) or x g (right) using the commutation rules of the defining relations.
AlgElement mul_by_generator(const AlgElement& x, Generator g, Side side);

AlgElement star(const AlgElement& x);

struct FreeWord {
    std::vector<Generator> letters;
    ParamScalar prefactor = 1;
};

/// Canonical form of a word: the a-letters are moved in front of the b-letters
/// (they commute), then each part is reduced. The empty word is the unit.
AlgElement normalize_word(const FreeWord& w);

/// Split by winding w = mu - nu. The degree label of the U(1)-grading is -w.
std::map<int, AlgElement> winding_decompose(const AlgElement& x);

bool is_coinvariant(const AlgElement& x);

// ---- the base O(S^2_pq) -------------------------------------------------------

enum class S2Generator { f0, f1, f1_star };

struct S2Word {
    ParamScalar coeff = 1;
    std::vector<S2Generator> letters;
};

using S2Polynomial = std::vector<S2Word>;

/// Image under f0 -> b b^*, f1 -> b a, f1^* -> a^* b^*.
AlgElement iota(S2Generator g);
AlgElement iota(const S2Polynomial& f);

// ---- text -----------------------------------------------------------------------

std::string to_string(Generator g);
/// `a^mu (1 - a a^*)^m (1 - b b^*)^n b^nu`, with a^* / b^* powers for negative exponents.
std::string to_string(const BasisMonomial& mono);

}  // namespace qhopf
