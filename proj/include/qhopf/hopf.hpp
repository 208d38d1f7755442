#pragma once

// O(U(1)) = Laurent polynomials in the unitary group-like u, and the right
// coaction of O(U(1)) on O(S^3_pq).

#include "qhopf/s3core.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace qhopf {

class LaurentElement {
public:
    using TermMap = std::map<int, ParamScalar>;

    LaurentElement() = default;
    LaurentElement(const ParamScalar& c);  // NOLINT(google-explicit-constructor)
    static LaurentElement u_power(int k, const ParamScalar& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int k, const ParamScalar& c);

    LaurentElement operator-() const;
    LaurentElement& operator+=(const LaurentElement& o);
    LaurentElement& operator-=(const LaurentElement& o);
    friend LaurentElement operator+(LaurentElement x, const LaurentElement& y) { return x += y; }
    friend LaurentElement operator-(LaurentElement x, const LaurentElement& y) { return x -= y; }
    friend LaurentElement operator*(const LaurentElement& x, const LaurentElement& y);
    friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// u^k -> u^k (x) u^k; stored as the diagonal of O(U(1)) (x) O(U(1)).
using LaurentTensor = std::map<std::pair<int, int>, ParamScalar>;

LaurentTensor coproduct(const LaurentElement& x);
/// Evaluation at u = 1.
ParamScalar counit(const LaurentElement& x);
/// u^k -> u^{-k}.
LaurentElement antipode(const LaurentElement& x);
/// The involution u^* = u^{-1}; coefficients are real.
LaurentElement star(const LaurentElement& x);

/// Element of O(S^3_pq) (x) O(U(1)).
class CotensorElement {
public:
    using Key = std::pair<BasisMonomial, int>;
    using TermMap = std::map<Key, ParamScalar>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const BasisMonomial& mono, int u_power, const ParamScalar& c);
    /// Adds x (x) u^k.
    void add(const AlgElement& x, int u_power);

    CotensorElement& operator-=(const CotensorElement& o);
    friend bool operator==(const CotensorElement&, const CotensorElement&) = default;

    /// Componentwise product: (s (x) u^k)(t (x) u^l) = st (x) u^{k+l}.
    friend CotensorElement operator*(const CotensorElement& x, const CotensorElement& y);

    std::string to_string() const;

private:
    TermMap terms_;
};

/// 1 (x) u^k.
CotensorElement unit_cotensor(int k);

/// Delta_R(a) = a (x) u, Delta_R(b) = b (x) u^*; a monomial of winding w goes to t (x) u^w.
CotensorElement coaction(const AlgElement& x);
/// Involution on both legs.
CotensorElement star(const CotensorElement& x);
/// (id (x) counit).
AlgElement apply_counit(const CotensorElement& x);

/// Triple-indexed values in O(S^3_pq) (x) O(U(1)) (x) O(U(1)).
using CotensorTriple = std::map<std::tuple<BasisMonomial, int, int>, ParamScalar>;

/// (Delta_R (x) id) o Delta_R
CotensorTriple coaction_twice(const AlgElement& x);
/// (id (x) Delta) o Delta_R
CotensorTriple coaction_then_coproduct(const AlgElement& x);

}  // namespace qhopf
