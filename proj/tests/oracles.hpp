#pragma once

// Reference computations that do not go through the library's rewriting code.

#include "qhopf/scalars.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace oracle {

/// Gauss binomial as the generating function of inversions over 0/1 words of
/// length n with k ones: sum_w r^{inv(w)}.
inline qhopf::ParamScalar gauss_by_inversions(int n, int k, qhopf::Param r) {
    qhopf::ParamScalar sum;
    for (unsigned w = 0; w < (1u << n); ++w) {
        if (__builtin_popcount(w) != k) continue;
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((w >> i & 1u) && !(w >> j & 1u)) ++inv;
        sum += qhopf::ParamScalar::power(r, inv);
    }
    return sum;
}

/// Weighted shift x e_k = sqrt(1 - r^{k+1}) e_{k+1} on C^N, a truncation of the
/// Fock representation of x^* x - r x x^* = 1 - r.
inline Eigen::MatrixXd disc_shift(int N, double r) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(N, N);
    for (int k = 0; k + 1 < N; ++k) x(k + 1, k) = std::sqrt(1.0 - std::pow(r, k + 1));
    return x;
}

/// x_mu (1 - x x^*)^m under the shift above.
inline Eigen::MatrixXd disc_word(int mu, int m, const Eigen::MatrixXd& x) {
    const int N = static_cast<int>(x.rows());
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(N, N);
    const Eigen::MatrixXd step = mu >= 0 ? x : Eigen::MatrixXd(x.transpose());
    for (int i = 0; i < std::abs(mu); ++i) out = out * step;
    const Eigen::MatrixXd P = Eigen::MatrixXd::Identity(N, N) - x * x.transpose();
    for (int i = 0; i < m; ++i) out = out * P;
    return out;
}

}  // namespace oracle
