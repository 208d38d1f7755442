#include "qhopf/s3core.hpp"

#include "qhopf/disc_kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhopf {

int BasisMonomial::degree() const { return std::abs(mu) + 2 * m + 2 * n + std::abs(nu); }

// ---- AlgElement ---------------------------------------------------------------

AlgElement::AlgElement(const ParamScalar& c) {
    if (!c.is_zero()) terms_.emplace(BasisMonomial{}, c);
}

AlgElement AlgElement::monomial(const BasisMonomial& mono, const ParamScalar& c) {
    if (!mono.valid()) return {};
    AlgElement out;
    out.add_term(mono, c);
    return out;
}

AlgElement AlgElement::generator(Generator g) {
    switch (g) {
        case Generator::a: return monomial({1, 0, 0, 0});
        case Generator::a_star: return monomial({-1, 0, 0, 0});
        case Generator::b: return monomial({0, 0, 0, 1});
        case Generator::b_star: return monomial({0, 0, 0, -1});
    }
    throw std::invalid_argument("AlgElement::generator: unknown generator");
}

ParamScalar AlgElement::coeff(const BasisMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? ParamScalar() : it->second;
}

int AlgElement::degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

void AlgElement::add_term(const BasisMonomial& mono, const ParamScalar& c) {
    if (c.is_zero()) return;
    if (!mono.valid()) throw std::invalid_argument("AlgElement::add_term: monomial violates m*n = 0");
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator-() const {
    AlgElement out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

AlgElement& AlgElement::operator*=(const ParamScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, v] : terms_) v *= c;
    return *this;
}

// ---- monomial products ------------------------------------------------------------

void multiply_monomials(const BasisMonomial& x, const BasisMonomial& y, const TermSink& sink) {
    // The a-letters and (1 - a a^*) commute with every b-letter, so the product
    // factorizes into two quantum-disc products; (1 - b b^*)^n b_nu is first
    // rewritten as p^{n nu} b_nu (1 - b b^*)^n to share the disc kernel.
    const auto a_part = disc_product(x.mu, x.m, y.mu, y.m);
    const int b_shift = x.n * x.nu + y.n * y.nu;
    const auto b_part = disc_product(x.nu, x.n, y.nu, y.n);
    for (const auto& at : a_part) {
        for (const auto& bt : b_part) {
            if (at.power > 0 && bt.power > 0) continue;
            LaurentPQ c;
            for (const auto& [qe, qc] : at.coeff)
                for (const auto& [pe, pc] : bt.coeff) c[{pe + b_shift - bt.power * bt.shift, qe}] += qc * pc;
            ParamScalar s = laurent_to_scalar(c);
            if (!s.is_zero()) sink(BasisMonomial{at.shift, at.power, bt.power, bt.shift}, s);
        }
    }
}

namespace {

void accumulate_product(const BasisMonomial& mx, const ParamScalar& cx, const AlgElement& y, AlgElement& out) {
    for (const auto& [my, cy] : y.terms()) {
        const ParamScalar c = cx * cy;
        multiply_monomials(mx, my, [&](const BasisMonomial& mono, const ParamScalar& s) { out.add_term(mono, c * s); });
    }
}

}  // namespace

AlgElement mul_serial(const AlgElement& x, const AlgElement& y) {
    AlgElement out;
    for (const auto& [mx, cx] : x.terms()) accumulate_product(mx, cx, y, out);
    return out;
}

AlgElement mul(const AlgElement& x, const AlgElement& y) {
#ifdef _OPENMP
    // Splitting pays off only for sizeable operands, and never inside an
    // enclosing parallel region.
    if (x.size() * y.size() < 64 || omp_in_parallel() || omp_get_max_threads() < 2) return mul_serial(x, y);
    const std::vector<std::pair<BasisMonomial, ParamScalar>> left(x.terms().begin(), x.terms().end());
    const int count = static_cast<int>(left.size());
    AlgElement out;
#pragma omp parallel
    {
        AlgElement local;
#pragma omp for schedule(dynamic)
        for (int i = 0; i < count; ++i) accumulate_product(left[i].first, left[i].second, y, local);
#pragma omp critical(qhopf_mul_merge)
        out += local;
    }
    return out;
#else
    return mul_serial(x, y);
#endif
}

// ---- generator-level rewriting ------------------------------------------------------

namespace {

void emit(AlgElement& out, int mu, int m, int n, int nu, const ParamScalar& c) {
    if (m > 0 && n > 0) return;  // (1 - a a^*)(1 - b b^*) = 0
    out.add_term(BasisMonomial{mu, m, n, nu}, c);
}

void apply_generator(const BasisMonomial& x, const ParamScalar& c, Generator g, Side side, AlgElement& out) {
    const auto qp = [](int k) { return ParamScalar::power(Param::q, k); };
    const auto pp = [](int k) { return ParamScalar::power(Param::p, k); };
    const int mu = x.mu, m = x.m, n = x.n, nu = x.nu;
    if (side == Side::right) {
        switch (g) {
            case Generator::a:
                // (1 - a a^*)^m a = q^m a (1 - a a^*)^m;  a^* a = 1 - q (1 - a a^*)
                emit(out, mu + 1, m, n, nu, c * qp(m));
                if (mu < 0) emit(out, mu + 1, m + 1, n, nu, -c * qp(m + 1));
                return;
            case Generator::a_star:
                // (1 - a a^*)^m a^* = q^{-m} a^* (1 - a a^*)^m;  a a^* = 1 - (1 - a a^*)
                emit(out, mu - 1, m, n, nu, c * qp(-m));
                if (mu > 0) emit(out, mu - 1, m + 1, n, nu, -c * qp(-m));
                return;
            case Generator::b:
                // b^{*s} b = b^{*(s-1)} - p^s (1 - b b^*) b^{*(s-1)}
                emit(out, mu, m, n, nu + 1, c);
                if (nu < 0) emit(out, mu, m, n + 1, nu + 1, -c * pp(-nu));
                return;
            case Generator::b_star:
                // b^s b^* = b^{s-1} - p^{-(s-1)} (1 - b b^*) b^{s-1}
                emit(out, mu, m, n, nu - 1, c);
                if (nu > 0) emit(out, mu, m, n + 1, nu - 1, -c * pp(-(nu - 1)));
                return;
        }
    } else {
        switch (g) {
            case Generator::a:
                // a a^{*s} = a^{*(s-1)} - q^{-(s-1)} a^{*(s-1)} (1 - a a^*)
                emit(out, mu + 1, m, n, nu, c);
                if (mu < 0) emit(out, mu + 1, m + 1, n, nu, -c * qp(-(-mu - 1)));
                return;
            case Generator::a_star:
                // a^* a^s = a^{s-1} - q^s a^{s-1} (1 - a a^*)
                emit(out, mu - 1, m, n, nu, c);
                if (mu > 0) emit(out, mu - 1, m + 1, n, nu, -c * qp(mu));
                return;
            case Generator::b:
                // b (1 - b b^*)^n = p^{-n} (1 - b b^*)^n b;  b b^* = 1 - (1 - b b^*)
                emit(out, mu, m, n, nu + 1, c * pp(-n));
                if (nu < 0) emit(out, mu, m, n + 1, nu + 1, -c * pp(-n));
                return;
            case Generator::b_star:
                // b^* (1 - b b^*)^n = p^n (1 - b b^*)^n b^*;  b^* b = 1 - p (1 - b b^*)
                emit(out, mu, m, n, nu - 1, c * pp(n));
                if (nu > 0) emit(out, mu, m, n + 1, nu - 1, -c * pp(n + 1));
                return;
        }
    }
}

AlgElement right_letters(AlgElement z, Generator g, int count) {
    for (int i = 0; i < count; ++i) z = mul_by_generator(z, g, Side::right);
    return z;
}

// z (1 - g g^*)
AlgElement right_defect(const AlgElement& z, Generator g, Generator g_star) {
    return z - mul_by_generator(mul_by_generator(z, g, Side::right), g_star, Side::right);
}

}  // namespace

AlgElement mul_by_generator(const AlgElement& x, Generator g, Side side) {
    AlgElement out;
    for (const auto& [mono, c] : x.terms()) apply_generator(mono, c, g, side, out);
    return out;
}

AlgElement mul_by_generators(const AlgElement& x, const AlgElement& y) {
    AlgElement out;
    for (const auto& [mono, c] : y.terms()) {
        AlgElement z = x * c;
        z = right_letters(std::move(z), mono.mu >= 0 ? Generator::a : Generator::a_star, std::abs(mono.mu));
        for (int i = 0; i < mono.m; ++i) z = right_defect(z, Generator::a, Generator::a_star);
        for (int i = 0; i < mono.n; ++i) z = right_defect(z, Generator::b, Generator::b_star);
        z = right_letters(std::move(z), mono.nu >= 0 ? Generator::b : Generator::b_star, std::abs(mono.nu));
        out += z;
    }
    return out;
}

AlgElement star(const AlgElement& x) {
    // (a_mu A^m B^n b_nu)^* = b_{-nu} B^n A^m a_{-mu}
    AlgElement out;
    for (const auto& [mono, c] : x.terms()) {
        AlgElement t = AlgElement::monomial({0, 0, 0, -mono.nu}, c);
        t = mul(t, AlgElement::monomial({0, 0, mono.n, 0}));
        t = mul(t, AlgElement::monomial({0, mono.m, 0, 0}));
        t = mul(t, AlgElement::monomial({-mono.mu, 0, 0, 0}));
        out += t;
    }
    return out;
}

AlgElement normalize_word(const FreeWord& w) {
    std::vector<Generator> letters = w.letters;
    std::stable_partition(letters.begin(), letters.end(),
                          [](Generator g) { return g == Generator::a || g == Generator::a_star; });
    AlgElement z(w.prefactor);
    for (Generator g : letters) z = mul_by_generator(z, g, Side::right);
    return z;
}

std::map<int, AlgElement> winding_decompose(const AlgElement& x) {
    std::map<int, AlgElement> parts;
    for (const auto& [mono, c] : x.terms()) parts[mono.winding()].add_term(mono, c);
    return parts;
}

bool is_coinvariant(const AlgElement& x) {
    return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.winding() == 0; });
}

// ---- O(S^2_pq) ----------------------------------------------------------------------

AlgElement iota(S2Generator g) {
    const AlgElement a = AlgElement::generator(Generator::a);
    const AlgElement as = AlgElement::generator(Generator::a_star);
    const AlgElement b = AlgElement::generator(Generator::b);
    const AlgElement bs = AlgElement::generator(Generator::b_star);
    switch (g) {
        case S2Generator::f0: return mul(b, bs);
        case S2Generator::f1: return mul(b, a);
        case S2Generator::f1_star: return mul(as, bs);
    }
    throw std::invalid_argument("iota: unknown generator");
}

AlgElement iota(const S2Polynomial& f) {
    AlgElement out;
    for (const auto& w : f) {
        AlgElement z(w.coeff);
        for (S2Generator g : w.letters) z = mul(z, iota(g));
        out += z;
    }
    return out;
}

// ---- text ------------------------------------------------------------------------------

std::string to_string(Generator g) {
    switch (g) {
        case Generator::a: return "a";
        case Generator::a_star: return "a^*";
        case Generator::b: return "b";
        case Generator::b_star: return "b^*";
    }
    return "?";
}

namespace {

std::string signed_power(const char* sym, int e) {
    if (e == 0) return {};
    std::string base = e > 0 ? std::string(sym) : std::string(sym) + "^*";
    const int k = std::abs(e);
    return k == 1 ? base : base + "^" + std::to_string(k);
}

std::string defect_power(const char* body, int e) {
    if (e == 0) return {};
    std::string s = std::string("(1 - ") + body + ")";
    return e == 1 ? s : s + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const BasisMonomial& mono) {
    std::vector<std::string> parts;
    for (auto s : {signed_power("a", mono.mu), defect_power("a a^*", mono.m), defect_power("b b^*", mono.n),
                   signed_power("b", mono.nu)})
        if (!s.empty()) parts.push_back(std::move(s));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
    return out;
}

std::string AlgElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const bool lone = terms_.size() == 1;
    for (const auto& [mono, c0] : terms_) {
        const bool neg = c0.has_negative_sign();
        const ParamScalar c = neg ? -c0 : c0;
        std::string body;
        if (mono.is_unit()) {
            body = c.to_string();
            if (!lone && !c.renders_atomic()) body = "(" + body + ")";
        } else if (c.is_one()) {
            body = qhopf::to_string(mono);
        } else {
            std::string cs = c.to_string();
            if (!c.renders_atomic()) cs = "(" + cs + ")";
            body = cs + "*" + qhopf::to_string(mono);
        }
        if (first) {
            os << (neg ? "-" : "") << body;
        } else {
            os << (neg ? " - " : " + ") << body;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qhopf
