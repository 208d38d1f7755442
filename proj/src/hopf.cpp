#include "qhopf/hopf.hpp"

#include <sstream>

namespace qhopf {

LaurentElement::LaurentElement(const ParamScalar& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentElement LaurentElement::u_power(int k, const ParamScalar& c) {
    LaurentElement out;
    out.add_term(k, c);
    return out;
}

void LaurentElement::add_term(int k, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentElement LaurentElement::operator-() const {
    LaurentElement out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentElement operator*(const LaurentElement& x, const LaurentElement& y) {
    LaurentElement out;
    for (const auto& [k, c] : x.terms_)
        for (const auto& [l, d] : y.terms_) out.add_term(k + l, c * d);
    return out;
}

std::string LaurentElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c0] : terms_) {
        const bool neg = c0.has_negative_sign();
        const ParamScalar c = neg ? -c0 : c0;
        std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
        std::string body;
        if (mono.empty()) {
            body = c.renders_atomic() || terms_.size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
        } else if (c.is_one()) {
            body = mono;
        } else {
            body = (c.renders_atomic() ? c.to_string() : "(" + c.to_string() + ")") + "*" + mono;
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) << body;
        first = false;
    }
    return os.str();
}

LaurentTensor coproduct(const LaurentElement& x) {
    LaurentTensor out;
    for (const auto& [k, c] : x.terms()) out.emplace(std::make_pair(k, k), c);
    return out;
}

ParamScalar counit(const LaurentElement& x) {
    ParamScalar s;
    for (const auto& [k, c] : x.terms()) s += c;
    return s;
}

LaurentElement antipode(const LaurentElement& x) {
    LaurentElement out;
    for (const auto& [k, c] : x.terms()) out.add_term(-k, c);
    return out;
}

LaurentElement star(const LaurentElement& x) { return antipode(x); }

// ---- cotensors ------------------------------------------------------------------------

void CotensorElement::add_term(const BasisMonomial& mono, int u_power, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{mono, u_power}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void CotensorElement::add(const AlgElement& x, int u_power) {
    for (const auto& [mono, c] : x.terms()) add_term(mono, u_power, c);
}

CotensorElement& CotensorElement::operator-=(const CotensorElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

CotensorElement operator*(const CotensorElement& x, const CotensorElement& y) {
    CotensorElement out;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            const ParamScalar c = cx * cy;
            multiply_monomials(kx.first, ky.first, [&](const BasisMonomial& mono, const ParamScalar& s) {
                out.add_term(mono, kx.second + ky.second, c * s);
            });
        }
    }
    return out;
}

std::string CotensorElement::to_string() const {
    if (terms_.empty()) return "0";
    // Group by u-power: sum_k x_k (x) u^k.
    std::map<int, AlgElement> legs;
    for (const auto& [key, c] : terms_) legs[key.second].add_term(key.first, c);
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, x] : legs) {
        if (!first) os << " + ";
        os << "(" << x.to_string() << ") (x) " << (k == 0 ? "1" : (k == 1 ? "u" : "u^" + std::to_string(k)));
        first = false;
    }
    return os.str();
}

CotensorElement unit_cotensor(int k) {
    CotensorElement out;
    out.add_term(BasisMonomial{}, k, 1);
    return out;
}

CotensorElement coaction(const AlgElement& x) {
    CotensorElement out;
    for (const auto& [mono, c] : x.terms()) out.add_term(mono, mono.winding(), c);
    return out;
}

CotensorElement star(const CotensorElement& x) {
    CotensorElement out;
    for (const auto& [key, c] : x.terms()) out.add(star(AlgElement::monomial(key.first, c)), -key.second);
    return out;
}

AlgElement apply_counit(const CotensorElement& x) {
    AlgElement out;
    for (const auto& [key, c] : x.terms()) out.add_term(key.first, c);
    return out;
}

namespace {

void add_triple(CotensorTriple& out, const BasisMonomial& mono, int k, int l, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace({mono, k, l}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

}  // namespace

CotensorTriple coaction_twice(const AlgElement& x) {
    CotensorTriple out;
    const CotensorElement outer = coaction(x);
    for (const auto& [key, c] : outer.terms()) {
        const CotensorElement inner_terms = coaction(AlgElement::monomial(key.first, c));
        for (const auto& [inner, d] : inner_terms.terms()) add_triple(out, inner.first, inner.second, key.second, d);
    }
    return out;
}

CotensorTriple coaction_then_coproduct(const AlgElement& x) {
    CotensorTriple out;
    const CotensorElement coacted = coaction(x);
    for (const auto& [key, c] : coacted.terms())
        for (const auto& [kk, d] : coproduct(LaurentElement::u_power(key.second, c)))
            add_triple(out, key.first, kk.first, kk.second, d);
    return out;
}

}  // namespace qhopf
