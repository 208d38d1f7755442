#include "qhopf/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qhopf {

namespace {

using Term = Poly::Term;

bool grlex_less(int pa, int qa, int pb, int qb) {
    const int da = pa + qa;
    const int db = pb + qb;
    if (da != db) return da < db;
    return qa < qb;
}

bool term_less(const Term& a, const Term& b) {
    return grlex_less(a.p_exp, a.q_exp, b.p_exp, b.q_exp);
}

bool same_exp(const Term& a, const Term& b) {
    return a.p_exp == b.p_exp && a.q_exp == b.q_exp;
}

// Sorts and merges equal exponents, dropping zeros.
std::vector<Term> canonical_terms(std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), term_less);
    std::vector<Term> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && same_exp(out.back(), t)) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    // Zeros are dropped only after merging so later equal exponents still find their slot.
    std::vector<Term> clean;
    clean.reserve(out.size());
    for (auto& t : out)
        if (t.coeff != 0) clean.push_back(std::move(t));
    return clean;
}

// ---- univariate polynomials in p over Q (coefficients ascending) ----------

using UPoly = std::vector<mpq_class>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_zero(const UPoly& a) { return a.empty(); }

void make_monic(UPoly& a) {
    if (a.empty()) return;
    const mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
}

// a = b * quot + rem over Q.
void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
    rem = a;
    trim(rem);
    quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    const mpq_class& lc = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        const mpq_class f = rem.back() / lc;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        trim(rem);
    }
    trim(quot);
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        UPoly quot, rem;
        divmod(a, b, quot, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    make_monic(a);
    return a;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    UPoly quot, rem;
    divmod(a, b, quot, rem);
    return quot;
}

// ---- recursive view: polynomial in q with coefficients in Q[p] -------------

using RPoly = std::vector<UPoly>;  // index = q exponent

void rtrim(RPoly& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

RPoly to_recursive(const Poly& f) {
    RPoly r(f.degree_in(Param::q) + 1);
    for (const auto& t : f.terms()) {
        auto& c = r[t.q_exp];
        if (static_cast<int>(c.size()) <= t.p_exp) c.resize(t.p_exp + 1, 0);
        c[t.p_exp] += t.coeff;
    }
    for (auto& c : r) trim(c);
    rtrim(r);
    return r;
}

Poly from_recursive(const RPoly& r) {
    Poly out;
    for (std::size_t qe = 0; qe < r.size(); ++qe)
        for (std::size_t pe = 0; pe < r[qe].size(); ++pe)
            if (r[qe][pe] != 0) out += Poly::monomial(static_cast<int>(pe), static_cast<int>(qe), r[qe][pe]);
    return out;
}

UPoly content(const RPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        if (is_zero(c)) continue;
        g = is_zero(g) ? ugcd(c, {}) : ugcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

RPoly primitive_part(const RPoly& a) {
    const UPoly c = content(a);
    RPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero(a[i])) out[i] = udiv_exact(a[i], c);
    return out;
}

// Pseudo-remainder of a by b with respect to q.
RPoly prem(RPoly a, const RPoly& b) {
    const UPoly& lcb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const UPoly lca = a.back();
        for (auto& c : a) c = umul(c, lcb);
        for (std::size_t i = 0; i < b.size(); ++i) {
            UPoly t = umul(lca, b[i]);
            auto& dst = a[shift + i];
            if (dst.size() < t.size()) dst.resize(t.size(), 0);
            for (std::size_t j = 0; j < t.size(); ++j) dst[j] -= t[j];
            trim(dst);
        }
        rtrim(a);
    }
    return a;
}

Poly gcd_general(const Poly& f, const Poly& g) {
    RPoly a = to_recursive(f);
    RPoly b = to_recursive(g);
    const UPoly cont = ugcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) {
            a = RPoly{UPoly{1}};
            break;
        }
        RPoly r = prem(a, b);
        a = std::move(b);
        b = r.empty() ? RPoly{} : primitive_part(r);
    }
    for (auto& c : a) c = umul(c, cont);
    return from_recursive(a);
}

}  // namespace

// ---- Poly -------------------------------------------------------------------

Poly::Poly(const mpq_class& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

Poly Poly::monomial(int p_exp, int q_exp, const mpq_class& c) {
    if (p_exp < 0 || q_exp < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    Poly out;
    if (c != 0) out.terms_.push_back({p_exp, q_exp, c});
    return out;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].p_exp == 0 && terms_[0].q_exp == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].p_exp == 0 && terms_[0].q_exp == 0 && terms_[0].coeff == 1;
}

int Poly::total_degree() const {
    return terms_.empty() ? -1 : terms_.back().p_exp + terms_.back().q_exp;
}

int Poly::degree_in(Param v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, v == Param::p ? t.p_exp : t.q_exp);
    return d;
}

int Poly::min_exponent(Param v) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        const int e = v == Param::p ? t.p_exp : t.q_exp;
        d = first ? e : std::min(d, e);
        first = false;
    }
    return d;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && term_less(*i, *j))) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || term_less(*j, *i)) {
            merged.push_back(*j++);
        } else {
            mpq_class c = i->coeff + j->coeff;
            if (c != 0) merged.push_back({i->p_exp, i->q_exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial() && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].p_exp, b.terms_[0].q_exp);
    if (a.is_monomial() && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].p_exp, a.terms_[0].q_exp);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) raw.push_back({x.p_exp + y.p_exp, x.q_exp + y.q_exp, x.coeff * y.coeff});
    Poly out;
    out.terms_ = canonical_terms(std::move(raw));
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.p_exp != y.p_exp || x.q_exp != y.q_exp || x.coeff != y.coeff) return false;
    }
    return true;
}

Poly Poly::shifted(int dp, int dq) const {
    Poly out = *this;
    for (auto& t : out.terms_) {
        t.p_exp += dp;
        t.q_exp += dq;
        if (t.p_exp < 0 || t.q_exp < 0) throw std::domain_error("Poly::shifted: negative exponent");
    }
    // A uniform shift preserves grlex order.
    return out;
}

double Poly::eval(double p, double q) const {
    double s = 0.0;
    for (const auto& t : terms_) s += t.coeff.get_d() * std::pow(p, t.p_exp) * std::pow(q, t.q_exp);
    return s;
}

namespace {

std::string power_string(const char* sym, int e) {
    if (e == 0) return {};
    if (e == 1) return sym;
    return std::string(sym) + "^" + std::to_string(e);
}

std::string monomial_body(int pe, int qe) {
    std::string s = power_string("p", pe);
    const std::string t = power_string("q", qe);
    if (!s.empty() && !t.empty()) s += "*";
    return s + t;
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        const mpq_class mag = abs(t.coeff);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        const std::string body = monomial_body(t.p_exp, t.q_exp);
        if (body.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << body;
        } else {
            os << mag.get_str() << "*" << body;
        }
        first = false;
    }
    return os.str();
}

Poly exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (b.is_constant()) return a * mpq_class(1 / b.leading().coeff);
    Poly rem = a;
    Poly quot;
    const Poly::Term& lt = b.leading();
    while (!rem.is_zero()) {
        const Poly::Term& r = rem.leading();
        const int dp = r.p_exp - lt.p_exp;
        const int dq = r.q_exp - lt.q_exp;
        if (dp < 0 || dq < 0) throw std::domain_error("exact_divide: not divisible");
        const Poly step = Poly::monomial(dp, dq, r.coeff / lt.coeff);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(mpq_class(1));
    if (a.is_monomial() || b.is_monomial()) {
        const int pe = std::min(a.min_exponent(Param::p), b.min_exponent(Param::p));
        const int qe = std::min(a.min_exponent(Param::q), b.min_exponent(Param::q));
        return Poly::monomial(pe, qe);
    }
    // Strip common monomial factors first; they are cheap and frequent here.
    const int pe = std::min(a.min_exponent(Param::p), b.min_exponent(Param::p));
    const int qe = std::min(a.min_exponent(Param::q), b.min_exponent(Param::q));
    const Poly as = a.shifted(-a.min_exponent(Param::p), -a.min_exponent(Param::q));
    const Poly bs = b.shifted(-b.min_exponent(Param::p), -b.min_exponent(Param::q));
    Poly g = (as.is_constant() || bs.is_constant()) ? Poly(mpq_class(1)) : gcd_general(as, bs);
    return g.shifted(pe, qe);
}

// ---- ParamScalar --------------------------------------------------------------

ParamScalar::ParamScalar(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}

ParamScalar::ParamScalar(const Poly& num) : num_(num), den_(mpq_class(1)) {}

ParamScalar::ParamScalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
    normalize();
}

ParamScalar ParamScalar::monomial(int p_exp, int q_exp, const mpq_class& c) {
    ParamScalar out;
    out.num_ = Poly::monomial(std::max(p_exp, 0), std::max(q_exp, 0), c);
    out.den_ = Poly::monomial(std::max(-p_exp, 0), std::max(-q_exp, 0));
    return out;
}

void ParamScalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(mpq_class(1));
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    const mpq_class lc = den_.leading().coeff;
    if (lc != 1) {
        const mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

bool ParamScalar::is_integer() const {
    if (!is_constant()) return false;
    const mpq_class v = constant_value();
    return v.get_den() == 1;
}

mpq_class ParamScalar::constant_value() const {
    if (!is_constant()) throw std::domain_error("ParamScalar: value depends on p, q");
    if (num_.is_zero()) return 0;
    return num_.leading().coeff / den_.leading().coeff;
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.is_constant()) {
            if (num_.is_zero()) den_ = Poly(mpq_class(1));
            return *this;
        }
        normalize();
        return *this;
    }
    const Poly g = gcd(den_, o.den_);
    const Poly da = exact_divide(den_, g);
    const Poly db = exact_divide(o.den_, g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
    normalize();
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ParamScalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel so that the result is already reduced.
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : exact_divide(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : exact_divide(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : exact_divide(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : exact_divide(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    const mpq_class lc = den_.leading().coeff;
    if (lc != 1) {
        const mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) {
    if (o.is_zero()) throw std::domain_error("ParamScalar: division by zero");
    ParamScalar inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    const mpq_class lc = inv.den_.leading().coeff;
    if (lc != 1) {
        const mpq_class f = 1 / lc;
        inv.num_ *= f;
        inv.den_ *= f;
    }
    return *this *= inv;
}

ParamScalar ParamScalar::pow(int k) const {
    if (k < 0) {
        ParamScalar one(1);
        return (one / *this).pow(-k);
    }
    ParamScalar out(1);
    ParamScalar base = *this;
    while (k > 0) {
        if (k & 1) out *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return out;
}

double ParamScalar::eval(double p, double q) const {
    const double d = den_.eval(p, q);
    if (d == 0.0) throw std::domain_error("ParamScalar::eval: pole at evaluation point");
    return num_.eval(p, q) / d;
}

namespace {

Poly substitute_poly(const Poly& f, const mpq_class* p, const mpq_class* q) {
    Poly out;
    for (const auto& t : f.terms()) {
        mpq_class c = t.coeff;
        int pe = t.p_exp;
        int qe = t.q_exp;
        if (p != nullptr) {
            for (int i = 0; i < pe; ++i) c *= *p;
            pe = 0;
        }
        if (q != nullptr) {
            for (int i = 0; i < qe; ++i) c *= *q;
            qe = 0;
        }
        out += Poly::monomial(pe, qe, c);
    }
    return out;
}

}  // namespace

ParamScalar ParamScalar::substitute(const mpq_class* p, const mpq_class* q) const {
    const Poly d = substitute_poly(den_, p, q);
    if (d.is_zero()) throw std::domain_error("ParamScalar::substitute: pole at substitution point");
    return ParamScalar(substitute_poly(num_, p, q), d);
}

namespace {

// Canonical form fixes the leading coefficient of the denominator; for display
// the lowest term is made positive instead, so 1/(1 - q) reads as such.
bool flip_for_display(const Poly& den) { return !den.is_zero() && den.terms().front().coeff < 0; }

}  // namespace

bool ParamScalar::has_negative_sign() const {
    if (num_.is_zero()) return false;
    const bool flip = flip_for_display(den_);
    for (const auto& t : num_.terms())
        if ((t.coeff < 0) == flip) return false;
    return true;
}

bool ParamScalar::renders_atomic() const {
    return num_.is_monomial();
}

std::string ParamScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    const bool flip = flip_for_display(den_);
    const Poly num = flip ? -num_ : num_;
    const Poly den = flip ? -den_ : den_;
    std::string n = num.to_string();
    if (!num.is_monomial()) n = "(" + n + ")";
    std::string d = den.to_string();
    const bool bare_power = den.is_monomial() && den.leading().coeff == 1 &&
                            (den.leading().p_exp == 0 || den.leading().q_exp == 0);
    if (!bare_power) d = "(" + d + ")";
    return n + "/" + d;
}

ParamScalar scalar_arith(const ParamScalar& x, const ParamScalar& y, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return x + y;
        case ScalarOp::sub: return x - y;
        case ScalarOp::mul: return x * y;
        case ScalarOp::div: return x / y;
    }
    throw std::invalid_argument("scalar_arith: unknown op");
}

ParamScalar qbinomial(int n, int k, Param r) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinomial: need 0 <= k <= n");
    // Row-by-row Pascal recursion; polynomials only.
    std::vector<ParamScalar> row{ParamScalar(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<ParamScalar> next(m + 1);
        next[0] = 1;
        next[m] = 1;
        for (int j = 1; j < m; ++j) next[j] = row[j - 1] + ParamScalar::power(r, j) * row[j];
        row = std::move(next);
    }
    return row[k];
}

ParamScalar qbinomial_quotient(int n, int k, Param r) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("qbinomial_quotient: need 0 <= k <= n");
    auto falling = [r](int m) {
        ParamScalar out(1);
        for (int i = 1; i <= m; ++i) out *= ParamScalar::power(r, i) - ParamScalar(1);
        return out;
    };
    return falling(n) / (falling(k) * falling(n - k));
}

double scalar_eval(const ParamScalar& x, double p_val, double q_val) { return x.eval(p_val, q_val); }

}  // namespace qhopf
