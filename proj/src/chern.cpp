#include "qhopf/chern.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qhopf {

CoinvariantMatrix CoinvariantMatrix::identity(std::size_t n) {
    CoinvariantMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = AlgElement::unit();
    return out;
}

bool CoinvariantMatrix::all_coinvariant() const {
    for (const auto& e : entries_)
        if (!is_coinvariant(e)) return false;
    return true;
}

bool CoinvariantMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

CoinvariantMatrix& CoinvariantMatrix::operator-=(const CoinvariantMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

std::string CoinvariantMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",\n [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

AlgElement entry_product(const CoinvariantMatrix& x, const CoinvariantMatrix& y, std::size_t i, std::size_t j) {
    AlgElement s;
    for (std::size_t k = 0; k < x.cols(); ++k) s += mul_serial(x.at(i, k), y.at(k, j));
    return s;
}

void check_shapes(const CoinvariantMatrix& x, const CoinvariantMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix_product: inner dimensions differ");
}

}  // namespace

CoinvariantMatrix matrix_product(const CoinvariantMatrix& x, const CoinvariantMatrix& y) {
    check_shapes(x, y);
    CoinvariantMatrix out(x.rows(), y.cols());
    const long total = static_cast<long>(x.rows() * y.cols());
#pragma omp parallel for schedule(dynamic) if (total > 1)
    for (long idx = 0; idx < total; ++idx) {
        const auto i = static_cast<std::size_t>(idx) / y.cols();
        const auto j = static_cast<std::size_t>(idx) % y.cols();
        out.at(i, j) = entry_product(x, y, i, j);
    }
    return out;
}

CoinvariantMatrix matrix_product_serial(const CoinvariantMatrix& x, const CoinvariantMatrix& y) {
    check_shapes(x, y);
    CoinvariantMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) out.at(i, j) = entry_product(x, y, i, j);
    return out;
}

namespace {

AlgElement gen(Generator g) { return AlgElement::generator(g); }

AlgElement power(const AlgElement& x, int k) {
    AlgElement out = AlgElement::unit();
    for (int i = 0; i < k; ++i) out = mul(out, x);
    return out;
}

}  // namespace

CoinvariantMatrix idempotent(int mu) {
    if (mu == 0) throw std::invalid_argument("idempotent: mu must be nonzero");
    const int n = std::abs(mu);
    // mu < 0 reads l(u^n), mu > 0 reads l(u^{*n}); the mirror swaps a <-> b and q <-> p.
    const bool neg = mu < 0;
    const Param r = neg ? Param::q : Param::p;
    const Generator x = neg ? Generator::a : Generator::b;
    const Generator xs = neg ? Generator::a_star : Generator::b_star;
    const Generator y = neg ? Generator::b : Generator::a;
    const Generator ys = neg ? Generator::b_star : Generator::a_star;
    const AlgElement defect = AlgElement::unit() - mul(gen(x), gen(xs));

    std::vector<AlgElement> right(n + 1), left(n + 1);
    for (int j = 0; j <= n; ++j) {
        right[j] = mul(power(gen(x), n - j), power(gen(ys), j));
        left[j] = qbinomial(n, n - j, r) * ParamScalar::power(r, j) *
                  mul(mul(power(defect, j), power(gen(xs), n - j)), power(gen(y), j));
    }

    CoinvariantMatrix out(n + 1, n + 1);
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) out.at(j, k) = mul(right[j], left[k]);
    return out;
}

AlgElement matrix_trace(const CoinvariantMatrix& e) {
    if (!e.is_square()) throw std::invalid_argument("matrix_trace: matrix is not square");
    AlgElement s;
    for (std::size_t i = 0; i < e.rows(); ++i) s += e.at(i, i);
    return s;
}

ParamScalar trace_functional(const AlgElement& x) {
    if (!is_coinvariant(x)) throw std::domain_error("trace_functional: argument is not coinvariant");
    ParamScalar s;
    for (const auto& [mono, c] : x.terms()) {
        if (mono.mu != 0) continue;
        if (mono.m > 0) s += c / (ParamScalar(1) - ParamScalar::power(Param::q, mono.m));
        if (mono.n > 0) s -= c / (ParamScalar(1) - ParamScalar::power(Param::p, mono.n));
    }
    return s;
}

ParamScalar pairing(int mu) { return trace_functional(matrix_trace(idempotent(mu))); }

}  // namespace qhopf
