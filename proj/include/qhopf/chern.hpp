#pragma once

// Idempotents of the line modules over O(S^2_pq), the trace functional on
// O(S^2_pq) and the Chern-Connes pairing.

#include "qhopf/s3core.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qhopf {

/// Dense matrix over O(S^3_pq). Idempotents built here have coinvariant entries.
class CoinvariantMatrix {
public:
    CoinvariantMatrix() = default;
    CoinvariantMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    static CoinvariantMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    AlgElement& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
    const AlgElement& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    bool all_coinvariant() const;
    bool is_zero() const;

    CoinvariantMatrix& operator-=(const CoinvariantMatrix& o);
    friend CoinvariantMatrix operator-(CoinvariantMatrix x, const CoinvariantMatrix& y) { return x -= y; }
    friend bool operator==(const CoinvariantMatrix&, const CoinvariantMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<AlgElement> entries_;
};

/// Entries computed in parallel when built with OpenMP.
CoinvariantMatrix matrix_product(const CoinvariantMatrix& x, const CoinvariantMatrix& y);
CoinvariantMatrix matrix_product_serial(const CoinvariantMatrix& x, const CoinvariantMatrix& y);

/// E_mu with entries r_j l_k, read off the legs of l(u^{-mu}) = sum_k l_k (x) r_k.
/// mu = -n gives the (n+1)x(n+1) matrix with E_{-1} = [[a a^*, q a (1 - a a^*) b], [a^* b^*, q (1 - a a^*) b^* b]];
/// mu = +n is the mirror with a <-> b, q <-> p. Throws std::invalid_argument for mu = 0.
CoinvariantMatrix idempotent(int mu);

/// Throws std::invalid_argument on a non-square matrix.
AlgElement matrix_trace(const CoinvariantMatrix& e);

/// tr = Tr(rho_2 - rho_1) on O(S^2_pq), by its value on the winding-0 basis monomials:
/// 0 for mu != 0 and for 1, 1/(1 - q^m) for (1 - a a^*)^m, -1/(1 - p^n) for (1 - b b^*)^n.
/// Throws std::domain_error on a non-coinvariant argument.
ParamScalar trace_functional(const AlgElement& x);

/// <tr, [E_mu]> = tr(matrix_trace(idempotent(mu))).
ParamScalar pairing(int mu);

}  // namespace qhopf
