#pragma once

// Strong connection l : O(U(1)) -> O(S^3_pq) (x) O(S^3_pq) and the identities
// that make O(S^2_pq) ⊂ O(S^3_pq) a principal extension.

#include "qhopf/hopf.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qhopf {

/// Element of O(S^3_pq) (x) O(S^3_pq).
class TensorElement {
public:
    using Key = std::pair<BasisMonomial, BasisMonomial>;
    using TermMap = std::map<Key, ParamScalar>;

    /// 1 (x) 1.
    static TensorElement unit();
    /// s (x) t, expanded on both legs.
    static TensorElement pure(const AlgElement& s, const AlgElement& t);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const BasisMonomial& left, const BasisMonomial& right, const ParamScalar& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    friend TensorElement operator-(TensorElement x, const TensorElement& y) { return x -= y; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// sum o' i' (x) i'' o''  for outer = sum o' (x) o'' and inner = sum i' (x) i''.
TensorElement sandwich(const TensorElement& outer, const TensorElement& inner);

/// m(t): multiply the two legs.
AlgElement multiply_legs(const TensorElement& t);

/// (m (x) id) o (id (x) Delta_R): s (x) t -> s t (x) u^{winding(t)}.
CotensorElement lifted_can(const TensorElement& t);

/// l(u^k) by the recursion l(u^k) = u^[1] l(u^{k-1}) u^[2], seeded by l(u) or l(u^*).
TensorElement strong_connection(int k);

/// Closed Gauss-binomial form of l(u^n) (sign > 0) or l(u^{*n}) (sign < 0), n >= 1.
TensorElement strong_connection_closed(int n, int sign);

/// Elements of O(U(1)) (x) A (x) A and A (x) A (x) O(U(1)).
using LeftColinear = std::map<std::tuple<int, BasisMonomial, BasisMonomial>, ParamScalar>;
using RightColinear = std::map<std::tuple<BasisMonomial, BasisMonomial, int>, ParamScalar>;

/// Delta_L^(x) = ((S^{-1} (x) id) o flip o Delta_R) (x) id, using S^{-1} = S on O(U(1)).
LeftColinear left_coaction(const TensorElement& t);
/// id (x) Delta_R.
RightColinear right_coaction(const TensorElement& t);

struct ConnectionFailure {
    int k = 0;
    std::string identity;
    std::string difference;
};

struct ConnectionReport {
    int k_max = 0;
    std::vector<ConnectionFailure> failures;
    bool pass() const { return failures.empty(); }
};

/// For |k| <= k_max: lifted_can(l(u^k)) = 1 (x) u^k, right and left colinearity,
/// and m(l(u^k)) = 1.
ConnectionReport check_connection_properties(int k_max);

/// Preimage of 1 (x) u^k under the lifted canonical map, composed from the
/// k = +-1 preimages by the product rule for can.
TensorElement galois_witness(int k);

}  // namespace qhopf
