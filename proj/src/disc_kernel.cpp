#include "qhopf/disc_kernel.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <stdexcept>

namespace qhopf {

std::vector<DiscTerm> disc_product(int mu1, int m1, int mu2, int m2) {
    // P x = r x P and P x^* = r^{-1} x^* P, hence P^{m1} x_{mu2} = r^{m1 mu2} x_{mu2} P^{m1}.
    const int base = m1 * mu2;

    // x^s x^{*t} = x_{s-t} prod_{i=1..k} (1 - r^{-(t-i)} P)
    // x^{*s} x^t = x_{t-s} prod_{i=0..k-1} (1 - r^{t-i} P),   k = min(s, t)
    std::vector<int> factors;
    if (mu1 > 0 && mu2 < 0) {
        const int s = mu1, t = -mu2, k = std::min(s, t);
        for (int i = 1; i <= k; ++i) factors.push_back(-(t - i));
    } else if (mu1 < 0 && mu2 > 0) {
        const int s = -mu1, t = mu2, k = std::min(s, t);
        for (int i = 0; i < k; ++i) factors.push_back(t - i);
    }
    if (factors.size() > 60) throw std::overflow_error("disc_product: exponent too large");

    // Expand prod (1 - r^e P) as a polynomial in P.
    std::vector<LaurentR> poly{LaurentR{{0, 1}}};
    for (int e : factors) {
        std::vector<LaurentR> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            for (const auto& [k, v] : poly[j]) {
                next[j][k] += v;
                next[j + 1][k + e] -= v;
            }
        }
        for (auto& c : next)
            for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
        poly = std::move(next);
    }

    std::vector<DiscTerm> out;
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (poly[j].empty()) continue;
        DiscTerm t;
        t.shift = mu1 + mu2;
        t.power = static_cast<int>(j) + m1 + m2;
        for (const auto& [k, v] : poly[j]) t.coeff[k + base] = v;
        out.push_back(std::move(t));
    }
    return out;
}

ParamScalar laurent_to_scalar(const LaurentPQ& c) {
    int min_p = INT_MAX, min_q = INT_MAX;
    bool any = false;
    for (const auto& [e, v] : c) {
        if (v == 0) continue;
        min_p = std::min(min_p, e.first);
        min_q = std::min(min_q, e.second);
        any = true;
    }
    if (!any) return {};
    const int sp = std::min(min_p, 0);
    const int sq = std::min(min_q, 0);
    Poly num;
    for (const auto& [e, v] : c)
        if (v != 0) num += Poly::monomial(e.first - sp, e.second - sq, mpq_class(static_cast<long>(v)));
    return ParamScalar(num, Poly::monomial(-sp, -sq));
}

ParamScalar laurent_to_scalar(const LaurentR& c, Param r) {
    LaurentPQ pq;
    for (const auto& [e, v] : c) pq[r == Param::p ? std::make_pair(e, 0) : std::make_pair(0, e)] += v;
    return laurent_to_scalar(pq);
}

}  // namespace qhopf
