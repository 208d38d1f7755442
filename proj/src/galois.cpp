#include "qhopf/galois.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qhopf {

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& key, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

AlgElement gen(Generator g) { return AlgElement::generator(g); }

AlgElement defect_a() { return AlgElement::unit() - mul(gen(Generator::a), gen(Generator::a_star)); }
AlgElement defect_b() { return AlgElement::unit() - mul(gen(Generator::b), gen(Generator::b_star)); }

AlgElement power(const AlgElement& x, int k) {
    AlgElement out = AlgElement::unit();
    for (int i = 0; i < k; ++i) out = mul(out, x);
    return out;
}

}  // namespace

TensorElement TensorElement::unit() {
    TensorElement out;
    out.add_term(BasisMonomial{}, BasisMonomial{}, 1);
    return out;
}

TensorElement TensorElement::pure(const AlgElement& s, const AlgElement& t) {
    TensorElement out;
    for (const auto& [ms, cs] : s.terms())
        for (const auto& [mt, ct] : t.terms()) out.add_term(ms, mt, cs * ct);
    return out;
}

void TensorElement::add_term(const BasisMonomial& left, const BasisMonomial& right, const ParamScalar& c) {
    accumulate(terms_, Key{left, right}, c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c0] : terms_) {
        const bool neg = c0.has_negative_sign();
        const ParamScalar c = neg ? -c0 : c0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        if (!c.is_one()) os << (c.renders_atomic() ? c.to_string() : "(" + c.to_string() + ")") << "*";
        os << qhopf::to_string(key.first) << " (x) " << qhopf::to_string(key.second);
        first = false;
    }
    return os.str();
}

TensorElement sandwich(const TensorElement& outer, const TensorElement& inner) {
    TensorElement out;
    for (const auto& [ko, co] : outer.terms()) {
        for (const auto& [ki, ci] : inner.terms()) {
            const AlgElement left = mul(AlgElement::monomial(ko.first), AlgElement::monomial(ki.first));
            const AlgElement right = mul(AlgElement::monomial(ki.second), AlgElement::monomial(ko.second));
            const ParamScalar c = co * ci;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) out.add_term(ml, mr, c * cl * cr);
        }
    }
    return out;
}

AlgElement multiply_legs(const TensorElement& t) {
    AlgElement out;
    for (const auto& [key, c] : t.terms())
        multiply_monomials(key.first, key.second,
                           [&](const BasisMonomial& mono, const ParamScalar& s) { out.add_term(mono, c * s); });
    return out;
}

CotensorElement lifted_can(const TensorElement& t) {
    CotensorElement out;
    for (const auto& [key, c] : t.terms()) {
        const int w = key.second.winding();
        multiply_monomials(key.first, key.second,
                           [&](const BasisMonomial& mono, const ParamScalar& s) { out.add_term(mono, w, c * s); });
    }
    return out;
}

namespace {

TensorElement seed(int sign) {
    if (sign > 0) {
        // a^* (x) a + q b (1 - a a^*) (x) b^*
        return TensorElement::pure(gen(Generator::a_star), gen(Generator::a)) +
               TensorElement::pure(ParamScalar::q() * mul(gen(Generator::b), defect_a()), gen(Generator::b_star));
    }
    // b^* (x) b + p a (1 - b b^*) (x) a^*
    return TensorElement::pure(gen(Generator::b_star), gen(Generator::b)) +
           TensorElement::pure(ParamScalar::p() * mul(gen(Generator::a), defect_b()), gen(Generator::a_star));
}

}  // namespace

TensorElement strong_connection(int k) {
    if (k == 0) return TensorElement::unit();
    const TensorElement s = seed(k > 0 ? 1 : -1);
    TensorElement out = s;
    for (int i = 1; i < std::abs(k); ++i) out = sandwich(s, out);
    return out;
}

TensorElement strong_connection_closed(int n, int sign) {
    if (n < 1) throw std::invalid_argument("strong_connection_closed: n must be positive");
    // sign > 0:  sum_k [n k]_q q^{n-k} (1 - a a^*)^{n-k} a^{*k} b^{n-k} (x) a^k b^{*(n-k)}
    // sign < 0:  the same with a <-> b and q <-> p.
    const bool pos = sign > 0;
    const Param r = pos ? Param::q : Param::p;
    const Generator x = pos ? Generator::a : Generator::b;
    const Generator xs = pos ? Generator::a_star : Generator::b_star;
    const Generator y = pos ? Generator::b : Generator::a;
    const Generator ys = pos ? Generator::b_star : Generator::a_star;
    const AlgElement defect = pos ? defect_a() : defect_b();

    TensorElement out;
    for (int k = 0; k <= n; ++k) {
        const ParamScalar c = qbinomial(n, k, r) * ParamScalar::power(r, n - k);
        const AlgElement left = mul(mul(power(defect, n - k), power(gen(xs), k)), power(gen(y), n - k));
        const AlgElement right = mul(power(gen(x), k), power(gen(ys), n - k));
        out += TensorElement::pure(c * left, right);
    }
    return out;
}

LeftColinear left_coaction(const TensorElement& t) {
    LeftColinear out;
    for (const auto& [key, c] : t.terms()) accumulate(out, std::make_tuple(-key.first.winding(), key.first, key.second), c);
    return out;
}

RightColinear right_coaction(const TensorElement& t) {
    RightColinear out;
    for (const auto& [key, c] : t.terms()) accumulate(out, std::make_tuple(key.first, key.second, key.second.winding()), c);
    return out;
}

namespace {

template <class Map>
std::string map_difference(const Map& x, const Map& y) {
    Map diff = x;
    for (const auto& [key, c] : y) accumulate(diff, key, -c);
    std::ostringstream os;
    int shown = 0;
    for (const auto& [key, c] : diff) {
        if (shown++ == 4) {
            os << " ...";
            break;
        }
        os << (shown > 1 ? "; " : "") << c.to_string();
    }
    os << " (" << diff.size() << " nonzero coefficients)";
    return os.str();
}

}  // namespace

ConnectionReport check_connection_properties(int k_max) {
    ConnectionReport report;
    report.k_max = k_max;
    for (int k = -k_max; k <= k_max; ++k) {
        const TensorElement l = strong_connection(k);

        const CotensorElement can = lifted_can(l);
        if (!(can == unit_cotensor(k))) {
            CotensorElement diff = can;
            diff -= unit_cotensor(k);
            report.failures.push_back({k, "lifted canonical map", diff.to_string()});
        }

        // (id (x) Delta_R) l(u^k) = l(u^k) (x) u^k
        RightColinear right_expected;
        for (const auto& [key, c] : l.terms()) accumulate(right_expected, std::make_tuple(key.first, key.second, k), c);
        const RightColinear right = right_coaction(l);
        if (right != right_expected)
            report.failures.push_back({k, "right colinearity", map_difference(right, right_expected)});

        // Delta_L^(x) l(u^k) = u^k (x) l(u^k)
        LeftColinear left_expected;
        for (const auto& [key, c] : l.terms()) accumulate(left_expected, std::make_tuple(k, key.first, key.second), c);
        const LeftColinear left = left_coaction(l);
        if (left != left_expected)
            report.failures.push_back({k, "left colinearity", map_difference(left, left_expected)});

        const AlgElement m = multiply_legs(l);
        if (!(m == AlgElement::unit()))
            report.failures.push_back({k, "counit law m(l(u^k)) = 1", (m - AlgElement::unit()).to_string()});
    }
    return report;
}

TensorElement galois_witness(int k) {
    // can(sum g_j h_i (x) h~_i g~_j) = 1 (x) hg when can(sum h_i (x) h~_i) = 1 (x) h
    // and can(sum g_j (x) g~_j) = 1 (x) g; here g = u^{+-1} and h = u^{k -+ 1}.
    TensorElement out = TensorElement::unit();
    if (k == 0) return out;
    const TensorElement step = seed(k > 0 ? 1 : -1);
    for (int i = 0; i < std::abs(k); ++i) out = sandwich(step, out);
    return out;
}

}  // namespace qhopf
