#pragma once

// Quantum discs O(D_p), O(D_q), their boundary maps onto O(S^1), the local
// trivializations chi_p, chi_q of O(S^3_pq) and the transition map phi_12.

#include "qhopf/hopf.hpp"

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace qhopf {

/// x_mu (1 - x x^*)^m in a quantum disc.
struct DiscMonomial {
    int mu = 0;
    int m = 0;
    auto operator<=>(const DiscMonomial&) const = default;
};

/// Element of O(D_r): generator x with x^* x - r x x^* = 1 - r. The p-disc
/// generator prints as x, the q-disc generator as y.
class DiscElement {
public:
    using TermMap = std::map<DiscMonomial, ParamScalar>;

    explicit DiscElement(Param tag) : tag_(tag) {}
    static DiscElement unit(Param tag, const ParamScalar& c = 1);
    static DiscElement monomial(Param tag, const DiscMonomial& mono, const ParamScalar& c = 1);
    /// x (or x^* when starred).
    static DiscElement generator(Param tag, bool starred = false);

    Param tag() const { return tag_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const DiscMonomial& mono, const ParamScalar& c);

    DiscElement& operator+=(const DiscElement& o);
    DiscElement& operator-=(const DiscElement& o);
    friend DiscElement operator+(DiscElement x, const DiscElement& y) { return x += y; }
    friend DiscElement operator-(DiscElement x, const DiscElement& y) { return x -= y; }
    friend bool operator==(const DiscElement&, const DiscElement&) = default;

    std::string to_string() const;

private:
    void check_tag(const DiscElement& o) const;
    Param tag_;
    TermMap terms_;
};

/// Throws std::invalid_argument when the two discs differ.
DiscElement disc_mul(const DiscElement& x, const DiscElement& y);

/// x -> u; (1 - x x^*) -> 0.
LaurentElement boundary(const DiscElement& x);

/// Element of O(D_r) (x) O(U(1)).
class TrivializedElement {
public:
    using Key = std::pair<DiscMonomial, int>;
    using TermMap = std::map<Key, ParamScalar>;

    explicit TrivializedElement(Param tag) : tag_(tag) {}
    static TrivializedElement pure(const DiscElement& d, int u_power);

    Param tag() const { return tag_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const DiscMonomial& mono, int u_power, const ParamScalar& c);

    TrivializedElement& operator+=(const TrivializedElement& o);
    TrivializedElement& operator-=(const TrivializedElement& o);
    friend TrivializedElement operator*(const TrivializedElement& x, const TrivializedElement& y);
    friend bool operator==(const TrivializedElement&, const TrivializedElement&) = default;

    std::string to_string() const;

private:
    Param tag_;
    TermMap terms_;
};

/// chi_p (leg = p) or chi_q (leg = q): the algebra map fixed on generators by
///   chi_p(a) = 1 (x) u, chi_p(b) = x (x) u^*,  chi_q(a) = y (x) u, chi_q(b) = 1 (x) u^*.
TrivializedElement chi(const AlgElement& x, Param leg);

/// Element of O(S^1) (x) O(U(1)), keyed by (power of the boundary u, power of the fibre u).
using BoundaryTensor = std::map<std::pair<int, int>, ParamScalar>;

/// (pi (x) id)
BoundaryTensor boundary_leg(const TrivializedElement& t);
/// b (x) u^k -> b u^{-k} (x) u^k.
BoundaryTensor phi12(const BoundaryTensor& t);
std::string to_string(const BoundaryTensor& t);

/// (pi_p (x) id)(chi_p(x)) == phi12((pi_q (x) id)(chi_q(x))).
bool gluing_check(const AlgElement& x);

using TrivializedTriple = std::map<std::tuple<DiscMonomial, int, int>, ParamScalar>;

/// (chi (x) id) o Delta_R
TrivializedTriple chi_after_coaction(const AlgElement& x, Param leg);
/// (id (x) Delta) o chi
TrivializedTriple coproduct_after_chi(const AlgElement& x, Param leg);

}  // namespace qhopf
