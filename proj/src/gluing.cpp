#include "qhopf/gluing.hpp"

#include "qhopf/disc_kernel.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhopf {

namespace {

const char* disc_symbol(Param tag) { return tag == Param::p ? "x" : "y"; }

template <class Map, class Key>
void accumulate(Map& m, const Key& key, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

void disc_monomial_product(Param tag, const DiscMonomial& x, const DiscMonomial& y, const ParamScalar& c,
                           const std::function<void(const DiscMonomial&, const ParamScalar&)>& sink) {
    for (const auto& t : disc_product(x.mu, x.m, y.mu, y.m)) {
        ParamScalar s = c * laurent_to_scalar(t.coeff, tag);
        if (!s.is_zero()) sink(DiscMonomial{t.shift, t.power}, s);
    }
}

}  // namespace

// ---- DiscElement ----------------------------------------------------------------------

DiscElement DiscElement::unit(Param tag, const ParamScalar& c) { return monomial(tag, {}, c); }

DiscElement DiscElement::monomial(Param tag, const DiscMonomial& mono, const ParamScalar& c) {
    if (mono.m < 0) throw std::invalid_argument("DiscElement: negative power of (1 - x x^*)");
    DiscElement out(tag);
    out.add_term(mono, c);
    return out;
}

DiscElement DiscElement::generator(Param tag, bool starred) { return monomial(tag, {starred ? -1 : 1, 0}); }

void DiscElement::add_term(const DiscMonomial& mono, const ParamScalar& c) { accumulate(terms_, mono, c); }

void DiscElement::check_tag(const DiscElement& o) const {
    if (tag_ != o.tag_) throw std::invalid_argument("quantum disc elements with different parameters");
}

DiscElement& DiscElement::operator+=(const DiscElement& o) {
    check_tag(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

DiscElement& DiscElement::operator-=(const DiscElement& o) {
    check_tag(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

namespace {

std::string disc_monomial_string(Param tag, const DiscMonomial& mono) {
    const std::string x = disc_symbol(tag);
    std::string s;
    if (mono.mu != 0) {
        s = mono.mu > 0 ? x : x + "^*";
        if (std::abs(mono.mu) > 1) s += "^" + std::to_string(std::abs(mono.mu));
    }
    if (mono.m != 0) {
        if (!s.empty()) s += " ";
        s += "(1 - " + x + " " + x + "^*)";
        if (mono.m > 1) s += "^" + std::to_string(mono.m);
    }
    return s.empty() ? "1" : s;
}

std::string term_string(const std::string& mono, const ParamScalar& c0, bool first, bool lone) {
    const bool neg = c0.has_negative_sign();
    const ParamScalar c = neg ? -c0 : c0;
    std::string body;
    if (mono == "1") {
        body = c.renders_atomic() || lone ? c.to_string() : "(" + c.to_string() + ")";
    } else if (c.is_one()) {
        body = mono;
    } else {
        body = (c.renders_atomic() ? c.to_string() : "(" + c.to_string() + ")") + "*" + mono;
    }
    return (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) + body;
}

}  // namespace

std::string DiscElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        out += term_string(disc_monomial_string(tag_, mono), c, first, terms_.size() == 1);
        first = false;
    }
    return out;
}

DiscElement disc_mul(const DiscElement& x, const DiscElement& y) {
    if (x.tag() != y.tag()) throw std::invalid_argument("disc_mul: mismatched disc parameters");
    DiscElement out(x.tag());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms())
            disc_monomial_product(x.tag(), mx, my, cx * cy,
                                  [&](const DiscMonomial& mono, const ParamScalar& s) { out.add_term(mono, s); });
    return out;
}

LaurentElement boundary(const DiscElement& x) {
    LaurentElement out;
    for (const auto& [mono, c] : x.terms())
        if (mono.m == 0) out.add_term(mono.mu, c);
    return out;
}

// ---- TrivializedElement ---------------------------------------------------------------

TrivializedElement TrivializedElement::pure(const DiscElement& d, int u_power) {
    TrivializedElement out(d.tag());
    for (const auto& [mono, c] : d.terms()) out.add_term(mono, u_power, c);
    return out;
}

void TrivializedElement::add_term(const DiscMonomial& mono, int u_power, const ParamScalar& c) {
    accumulate(terms_, Key{mono, u_power}, c);
}

TrivializedElement& TrivializedElement::operator+=(const TrivializedElement& o) {
    if (tag_ != o.tag_) throw std::invalid_argument("trivialized elements over different discs");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

TrivializedElement& TrivializedElement::operator-=(const TrivializedElement& o) {
    if (tag_ != o.tag_) throw std::invalid_argument("trivialized elements over different discs");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

TrivializedElement operator*(const TrivializedElement& x, const TrivializedElement& y) {
    if (x.tag_ != y.tag_) throw std::invalid_argument("trivialized elements over different discs");
    TrivializedElement out(x.tag_);
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            disc_monomial_product(x.tag_, kx.first, ky.first, cx * cy, [&](const DiscMonomial& mono, const ParamScalar& s) {
                out.add_term(mono, kx.second + ky.second, s);
            });
    return out;
}

std::string TrivializedElement::to_string() const {
    if (terms_.empty()) return "0";
    std::map<int, DiscElement> legs;
    for (const auto& [key, c] : terms_) legs.try_emplace(key.second, tag_).first->second.add_term(key.first, c);
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, d] : legs) {
        if (!first) os << " + ";
        os << "(" << d.to_string() << ") (x) " << (k == 0 ? "1" : (k == 1 ? "u" : "u^" + std::to_string(k)));
        first = false;
    }
    return os.str();
}

// ---- trivializations ------------------------------------------------------------------

namespace {

TrivializedElement image_of(Generator g, Param leg) {
    const bool p_leg = leg == Param::p;
    switch (g) {
        case Generator::a:
            return TrivializedElement::pure(p_leg ? DiscElement::unit(leg) : DiscElement::generator(leg), 1);
        case Generator::a_star:
            return TrivializedElement::pure(p_leg ? DiscElement::unit(leg) : DiscElement::generator(leg, true), -1);
        case Generator::b:
            return TrivializedElement::pure(p_leg ? DiscElement::generator(leg) : DiscElement::unit(leg), -1);
        case Generator::b_star:
            return TrivializedElement::pure(p_leg ? DiscElement::generator(leg, true) : DiscElement::unit(leg), 1);
    }
    throw std::invalid_argument("chi: unknown generator");
}

TrivializedElement power(const TrivializedElement& x, int k, Param leg) {
    TrivializedElement out = TrivializedElement::pure(DiscElement::unit(leg), 0);
    for (int i = 0; i < k; ++i) out = out * x;
    return out;
}

TrivializedElement chi_monomial(const BasisMonomial& mono, Param leg) {
    const TrivializedElement one = TrivializedElement::pure(DiscElement::unit(leg), 0);
    TrivializedElement defect_a = one;
    defect_a -= image_of(Generator::a, leg) * image_of(Generator::a_star, leg);
    TrivializedElement defect_b = one;
    defect_b -= image_of(Generator::b, leg) * image_of(Generator::b_star, leg);

    TrivializedElement out = power(image_of(mono.mu >= 0 ? Generator::a : Generator::a_star, leg), std::abs(mono.mu), leg);
    out = out * power(defect_a, mono.m, leg);
    out = out * power(defect_b, mono.n, leg);
    out = out * power(image_of(mono.nu >= 0 ? Generator::b : Generator::b_star, leg), std::abs(mono.nu), leg);
    return out;
}

}  // namespace

TrivializedElement chi(const AlgElement& x, Param leg) {
    TrivializedElement out(leg);
    for (const auto& [mono, c] : x.terms()) {
        const TrivializedElement t = chi_monomial(mono, leg);
        for (const auto& [key, d] : t.terms()) out.add_term(key.first, key.second, c * d);
    }
    return out;
}

BoundaryTensor boundary_leg(const TrivializedElement& t) {
    BoundaryTensor out;
    for (const auto& [key, c] : t.terms()) {
        const LaurentElement edge = boundary(DiscElement::monomial(t.tag(), key.first, c));
        for (const auto& [k, d] : edge.terms()) accumulate(out, std::make_pair(k, key.second), d);
    }
    return out;
}

BoundaryTensor phi12(const BoundaryTensor& t) {
    // tau_21 = S, so phi_12(b (x) h) = b S(h_(1)) (x) h_(2) and u^k is group-like.
    BoundaryTensor out;
    for (const auto& [key, c] : t) accumulate(out, std::make_pair(key.first - key.second, key.second), c);
    return out;
}

std::string to_string(const BoundaryTensor& t) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ") u^" << key.first << " (x) u^" << key.second;
        first = false;
    }
    return os.str();
}

bool gluing_check(const AlgElement& x) {
    return boundary_leg(chi(x, Param::p)) == phi12(boundary_leg(chi(x, Param::q)));
}

TrivializedTriple chi_after_coaction(const AlgElement& x, Param leg) {
    TrivializedTriple out;
    const CotensorElement coacted = coaction(x);
    for (const auto& [key, c] : coacted.terms()) {
        const TrivializedElement local = chi(AlgElement::monomial(key.first, c), leg);
        for (const auto& [tk, d] : local.terms()) accumulate(out, std::make_tuple(tk.first, tk.second, key.second), d);
    }
    return out;
}

TrivializedTriple coproduct_after_chi(const AlgElement& x, Param leg) {
    TrivializedTriple out;
    const TrivializedElement local = chi(x, leg);
    for (const auto& [key, c] : local.terms())
        for (const auto& [kk, d] : coproduct(LaurentElement::u_power(key.second, c)))
            accumulate(out, std::make_tuple(key.first, kk.first, kk.second), d);
    return out;
}

}  // namespace qhopf
