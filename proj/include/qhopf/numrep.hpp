#pragma once

// Truncated matrix realizations of the irreducible representations of
// O(S^3_pq) and the numeric checks built on them.

#include "qhopf/s3core.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace qhopf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

enum class Family {
    rho1,       // a = e^{i theta}, b weighted shift with weights sqrt(1 - p^{k+1})
    rho2,       // a weighted shift with weights sqrt(1 - q^{k+1}), b = e^{i theta}
    classical,  // 1-dimensional, a = e^{i theta1}, b = e^{i theta2}
};

struct TruncatedRep {
    Family family = Family::rho1;
    double theta1 = 0.0;
    double theta2 = 0.0;  // classical family only
    int N = 0;            // 1 for the classical family
    double p = 0.5;
    double q = 0.5;
    SparseCMatrix a, a_star, b, b_star;

    const SparseCMatrix& generator(Generator g) const;
    /// Number of leading basis vectors on which a word with `forward_shifts`
    /// raising letters is computed exactly.
    int safe_columns(int forward_shifts) const;
};

/// Throws std::invalid_argument unless N >= 2 (ignored for classical) and p, q in (0, 1).
TruncatedRep build_rep(Family family, double theta1, double theta2, int N, double p, double q);

CMatrix evaluate(const AlgElement& x, const TruncatedRep& rep);
SparseCMatrix evaluate_sparse(const AlgElement& x, const TruncatedRep& rep);

/// Defects of x^* x - r x x^* = 1 - r for a and b, of the two commutations, and
/// of (1 - a a^*)(1 - b b^*) = 0, restricted to the first N - 1 basis vectors.
std::array<double, 4> relation_defects(const TruncatedRep& rep);

/// ||(evaluate(x y) - evaluate(x) evaluate(y)) restricted to the first N - D columns||,
/// D = deg x + deg y.
double homomorphism_defect(const AlgElement& x, const AlgElement& y, const TruncatedRep& rep);

struct NumericTrace {
    Complex value;
    double tail_bound = 0.0;  // |Tr(rho_2 - rho_1) - truncated value| <= tail_bound
};

/// Tr(rho_2(x) - rho_1(x)) at theta = 0, truncated at N. Throws std::domain_error
/// on a non-coinvariant argument.
NumericTrace numeric_trace(const AlgElement& x, int N, double p, double q);
/// Batch over many elements; parallel when built with OpenMP.
std::vector<NumericTrace> numeric_traces(const std::vector<AlgElement>& xs, int N, double p, double q);
std::vector<NumericTrace> numeric_traces_serial(const std::vector<AlgElement>& xs, int N, double p, double q);

struct SpectrumReport {
    std::vector<double> eigenvalues;  // descending
    double max_deviation = 0.0;
    bool pass = false;
};

/// Spectrum of 1 - b b^* under rho1 against {p^k}, or of 1 - a a^* under rho2 against {q^k}.
SpectrumReport spectrum_check(const TruncatedRep& rep, double tolerance = 1e-10);

struct PolarReport {
    double min_eigenvalue = 0.0;  // of x^* x on the restricted block
    double lower_bound = 0.0;     // 1 - q for a, 1 - p for b
    double isometry_defect = 0.0;
};

PolarReport polar_isometry_check(const TruncatedRep& rep, Generator which);

struct MvnReport {
    double range_defect = 0.0;              // (s (x) P)(s (x) P)^* = (1 - P) (x) P
    double source_defect = 0.0;             // (s (x) P)^*(s (x) P) = 1 (x) P
    double partial_isometry_defect = 0.0;   // V V^* V = V
    int projection_rank = 0;                // rank of P = 1 - s s^*
};

/// Truncated unilateral shift s on C^N and P = 1 - s s^*.
MvnReport mvn_witness_check(int N);

struct ClassicalReport {
    double f_after_g = 0.0;
    double g_after_f = 0.0;
    double membership = 0.0;
    double equivariance = 0.0;
    double max_error() const;
};

/// The U(1)-homeomorphisms between X = {(1 - |z1|^2)(1 - |z2|^2) = 0, |zi| <= 1} and S^3.
std::array<Complex, 2> classical_f(const std::array<Complex, 2>& z);
std::array<Complex, 2> classical_g(const std::array<Complex, 2>& c);

ClassicalReport classical_maps_check(int samples, std::uint64_t seed);

struct FaithfulnessResult {
    bool witness_found = false;
    double max_norm = 0.0;
    int N_used = 0;
};

/// Looks for a representation in the rho1/rho2 families (phases from the seed)
/// with ||rho(x)|| > 1e-8. Zero elements report no witness.
FaithfulnessResult faithfulness_search(const AlgElement& x, int N, int trials, std::uint64_t seed = 1,
                                       double p = 0.5, double q = 1.0 / 3.0);
/// True iff x == 0 or a witness was found.
bool faithfulness_probe(const AlgElement& x, int N, int trials, std::uint64_t seed = 1, double p = 0.5,
                        double q = 1.0 / 3.0);

}  // namespace qhopf
