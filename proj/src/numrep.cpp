#include "qhopf/numrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qhopf {

namespace {

SparseCMatrix diagonal(int N, Complex value) {
    SparseCMatrix m(N, N);
    m.reserve(Eigen::VectorXi::Constant(N, 1));
    for (int k = 0; k < N; ++k) m.insert(k, k) = value;
    m.makeCompressed();
    return m;
}

/// e_k -> sqrt(1 - r^{k+1}) e_{k+1}; the top vector goes to 0.
SparseCMatrix weighted_shift(int N, double r) {
    std::vector<Eigen::Triplet<Complex>> t;
    for (int k = 0; k + 1 < N; ++k) t.emplace_back(k + 1, k, std::sqrt(1.0 - std::pow(r, k + 1)));
    SparseCMatrix m(N, N);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

SparseCMatrix identity(int N) { return diagonal(N, 1.0); }

SparseCMatrix power(const SparseCMatrix& x, int k) {
    SparseCMatrix out = identity(static_cast<int>(x.rows()));
    for (int i = 0; i < k; ++i) out = (out * x).pruned();
    return out;
}

double frobenius(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.norm(); }

struct MonomialEvaluator {
    const TruncatedRep& rep;
    SparseCMatrix defect_a, defect_b;

    explicit MonomialEvaluator(const TruncatedRep& r) : rep(r) {
        const SparseCMatrix id = identity(r.N);
        defect_a = id - SparseCMatrix(r.a * r.a_star);
        defect_b = id - SparseCMatrix(r.b * r.b_star);
    }

    SparseCMatrix operator()(const BasisMonomial& mono) const {
        SparseCMatrix out = power(mono.mu >= 0 ? rep.a : rep.a_star, std::abs(mono.mu));
        if (mono.m > 0) out = (out * power(defect_a, mono.m)).pruned();
        if (mono.n > 0) out = (out * power(defect_b, mono.n)).pruned();
        if (mono.nu != 0) out = (out * power(mono.nu > 0 ? rep.b : rep.b_star, std::abs(mono.nu))).pruned();
        return out;
    }
};

Complex sparse_trace(const SparseCMatrix& m) {
    Complex s = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseCMatrix::InnerIterator it(m, k); it; ++it)
            if (it.row() == it.col()) s += it.value();
    return s;
}

}  // namespace

const SparseCMatrix& TruncatedRep::generator(Generator g) const {
    switch (g) {
        case Generator::a: return a;
        case Generator::a_star: return a_star;
        case Generator::b: return b;
        case Generator::b_star: return b_star;
    }
    throw std::invalid_argument("unknown generator");
}

int TruncatedRep::safe_columns(int forward_shifts) const {
    if (family == Family::classical) return N;
    return std::max(N - forward_shifts, 0);
}

TruncatedRep build_rep(Family family, double theta1, double theta2, int N, double p, double q) {
    if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) throw std::invalid_argument("build_rep: p and q must lie in (0, 1)");
    if (family != Family::classical && N < 2) throw std::invalid_argument("build_rep: N must be at least 2");

    TruncatedRep rep;
    rep.family = family;
    rep.theta1 = theta1;
    rep.theta2 = theta2;
    rep.p = p;
    rep.q = q;
    switch (family) {
        case Family::rho1:
            rep.N = N;
            rep.a = diagonal(N, std::polar(1.0, theta1));
            rep.b = weighted_shift(N, p);
            break;
        case Family::rho2:
            rep.N = N;
            rep.a = weighted_shift(N, q);
            rep.b = diagonal(N, std::polar(1.0, theta1));
            break;
        case Family::classical:
            rep.N = 1;
            rep.a = diagonal(1, std::polar(1.0, theta1));
            rep.b = diagonal(1, std::polar(1.0, theta2));
            break;
    }
    rep.a_star = rep.a.adjoint();
    rep.b_star = rep.b.adjoint();
    return rep;
}

SparseCMatrix evaluate_sparse(const AlgElement& x, const TruncatedRep& rep) {
    const MonomialEvaluator eval(rep);
    SparseCMatrix out(rep.N, rep.N);
    for (const auto& [mono, c] : x.terms()) out += Complex(c.eval(rep.p, rep.q)) * eval(mono);
    return out;
}

CMatrix evaluate(const AlgElement& x, const TruncatedRep& rep) { return CMatrix(evaluate_sparse(x, rep)); }

std::array<double, 4> relation_defects(const TruncatedRep& rep) {
    const CMatrix a(rep.a), as(rep.a_star), b(rep.b), bs(rep.b_star);
    const CMatrix id = CMatrix::Identity(rep.N, rep.N);
    const int cols = rep.safe_columns(1);
    auto restricted = [&](const CMatrix& m) { return frobenius(m.leftCols(cols)); };

    std::array<double, 4> d{};
    d[0] = restricted(as * a - rep.q * a * as - (1.0 - rep.q) * id);
    d[1] = restricted(bs * b - rep.p * b * bs - (1.0 - rep.p) * id);
    d[2] = std::max(restricted(a * b - b * a), restricted(as * b - b * as));
    d[3] = restricted((id - a * as) * (id - b * bs));
    return d;
}

double homomorphism_defect(const AlgElement& x, const AlgElement& y, const TruncatedRep& rep) {
    const CMatrix lhs = evaluate(mul(x, y), rep);
    const CMatrix rhs = evaluate(x, rep) * evaluate(y, rep);
    return frobenius((lhs - rhs).leftCols(rep.safe_columns(x.degree() + y.degree())));
}

namespace {

double tail_bound(const AlgElement& x, int N, double p, double q) {
    double bound = 0.0;
    for (const auto& [mono, c] : x.terms()) {
        if (mono.mu != 0) continue;
        const double w = std::abs(c.eval(p, q));
        if (mono.m > 0) bound += w * std::pow(q, N * mono.m) / (1.0 - std::pow(q, mono.m));
        if (mono.n > 0) bound += w * std::pow(p, N * mono.n) / (1.0 - std::pow(p, mono.n));
    }
    return bound;
}

NumericTrace trace_with(const AlgElement& x, const TruncatedRep& r1, const TruncatedRep& r2) {
    if (!is_coinvariant(x)) throw std::domain_error("numeric_trace: argument is not coinvariant");
    NumericTrace t;
    t.value = sparse_trace(evaluate_sparse(x, r2)) - sparse_trace(evaluate_sparse(x, r1));
    t.tail_bound = tail_bound(x, r1.N, r1.p, r1.q);
    return t;
}

}  // namespace

NumericTrace numeric_trace(const AlgElement& x, int N, double p, double q) {
    return trace_with(x, build_rep(Family::rho1, 0.0, 0.0, N, p, q), build_rep(Family::rho2, 0.0, 0.0, N, p, q));
}

std::vector<NumericTrace> numeric_traces(const std::vector<AlgElement>& xs, int N, double p, double q) {
    const TruncatedRep r1 = build_rep(Family::rho1, 0.0, 0.0, N, p, q);
    const TruncatedRep r2 = build_rep(Family::rho2, 0.0, 0.0, N, p, q);
    std::vector<NumericTrace> out(xs.size());
    const long n = static_cast<long>(xs.size());
    // Exceptions may not cross the parallel region; validate first.
    for (const auto& x : xs)
        if (!is_coinvariant(x)) throw std::domain_error("numeric_trace: argument is not coinvariant");
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[i] = trace_with(xs[i], r1, r2);
    return out;
}

std::vector<NumericTrace> numeric_traces_serial(const std::vector<AlgElement>& xs, int N, double p, double q) {
    const TruncatedRep r1 = build_rep(Family::rho1, 0.0, 0.0, N, p, q);
    const TruncatedRep r2 = build_rep(Family::rho2, 0.0, 0.0, N, p, q);
    std::vector<NumericTrace> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(trace_with(x, r1, r2));
    return out;
}

SpectrumReport spectrum_check(const TruncatedRep& rep, double tolerance) {
    double r = 0.0;
    BasisMonomial defect;
    if (rep.family == Family::rho1) {
        r = rep.p;
        defect.n = 1;
    } else if (rep.family == Family::rho2) {
        r = rep.q;
        defect.m = 1;
    } else {
        throw std::invalid_argument("spectrum_check: needs a rho1 or rho2 representation");
    }
    const CMatrix m = evaluate(AlgElement::monomial(defect), rep);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    SpectrumReport report;
    report.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + rep.N);
    std::sort(report.eigenvalues.rbegin(), report.eigenvalues.rend());
    for (int k = 0; k < rep.N; ++k)
        report.max_deviation = std::max(report.max_deviation, std::abs(report.eigenvalues[k] - std::pow(r, k)));
    report.pass = report.max_deviation <= tolerance;
    return report;
}

PolarReport polar_isometry_check(const TruncatedRep& rep, Generator which) {
    if (which != Generator::a && which != Generator::b)
        throw std::invalid_argument("polar_isometry_check: expects a or b");
    const int cols = rep.safe_columns(1);
    const CMatrix x = CMatrix(rep.generator(which)).leftCols(cols);
    const CMatrix xx = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(xx);

    PolarReport report;
    report.lower_bound = which == Generator::a ? 1.0 - rep.q : 1.0 - rep.p;
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    if (report.min_eigenvalue <= 0.0) {
        report.isometry_defect = INFINITY;
        return report;
    }
    const Eigen::VectorXd inv_sqrt = solver.eigenvalues().cwiseSqrt().cwiseInverse();
    const CMatrix abs_inv = solver.eigenvectors() * inv_sqrt.asDiagonal() * solver.eigenvectors().adjoint();
    const CMatrix u = x * abs_inv;
    report.isometry_defect = frobenius(u.adjoint() * u - CMatrix::Identity(cols, cols));
    return report;
}

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

}  // namespace

MvnReport mvn_witness_check(int N) {
    if (N < 2) throw std::invalid_argument("mvn_witness_check: N must be at least 2");
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(N, N);
    for (int k = 0; k + 1 < N; ++k) s(k + 1, k) = 1.0;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(N, N);
    const Eigen::MatrixXd proj = id - s * s.transpose();

    const Eigen::MatrixXd v = kron(s, proj);
    const Eigen::MatrixXd range = v * v.transpose() - kron(id - proj, proj);
    const Eigen::MatrixXd source = v.transpose() * v - kron(id, proj);

    // Keep the indices whose shift coordinate is below N - 1.
    const int keep = (N - 1) * N;
    MvnReport report;
    report.range_defect = range.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
    report.source_defect = source.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
    report.partial_isometry_defect = (v * v.transpose() * v - v).cwiseAbs().maxCoeff();
    report.projection_rank = static_cast<int>(Eigen::FullPivLU<Eigen::MatrixXd>(proj).rank());
    return report;
}

double ClassicalReport::max_error() const { return std::max({f_after_g, g_after_f, membership, equivariance}); }

std::array<Complex, 2> classical_f(const std::array<Complex, 2>& z) {
    const double r = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
    return {z[0] / r, std::conj(z[1]) / r};
}

std::array<Complex, 2> classical_g(const std::array<Complex, 2>& c) {
    const double d = std::sqrt(1.0 + std::abs(2.0 * std::norm(c[0]) - 1.0));
    return {std::sqrt(2.0) * c[0] / d, std::sqrt(2.0) * std::conj(c[1]) / d};
}

namespace {

double distance(const std::array<Complex, 2>& x, const std::array<Complex, 2>& y) {
    return std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1]));
}

}  // namespace

ClassicalReport classical_maps_check(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("classical_maps_check: samples must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> gauss;

    ClassicalReport report;
    for (int i = 0; i < samples; ++i) {
        // A point of X: one coordinate on the circle, the other in the closed disc.
        const Complex on_circle = std::polar(1.0, angle(rng));
        const Complex in_disc = std::polar(std::sqrt(unit(rng)), angle(rng));
        const std::array<Complex, 2> z = unit(rng) < 0.5 ? std::array{on_circle, in_disc} : std::array{in_disc, on_circle};

        // A point of S^3.
        std::array<double, 4> v{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
        const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        const std::array<Complex, 2> c{Complex(v[0], v[1]) / len, Complex(v[2], v[3]) / len};

        const Complex phase = std::polar(1.0, angle(rng));

        const auto fz = classical_f(z);
        const auto gc = classical_g(c);
        report.g_after_f = std::max(report.g_after_f, distance(classical_g(fz), z));
        report.f_after_g = std::max(report.f_after_g, distance(classical_f(gc), c));

        const double on_sphere = std::abs(std::norm(fz[0]) + std::norm(fz[1]) - 1.0);
        const double on_x = std::abs((1.0 - std::norm(gc[0])) * (1.0 - std::norm(gc[1])));
        const double in_discs = std::max({0.0, std::abs(gc[0]) - 1.0, std::abs(gc[1]) - 1.0});
        report.membership = std::max({report.membership, on_sphere, on_x, in_discs});

        // (z1, z2) e^{i phi} = (z1 e^{i phi}, z2 e^{-i phi}),  (c1, c2) e^{i phi} = (c1 e^{i phi}, c2 e^{i phi})
        const std::array<Complex, 2> z_moved{z[0] * phase, z[1] * std::conj(phase)};
        const std::array<Complex, 2> c_moved{c[0] * phase, c[1] * phase};
        const double ef = distance(classical_f(z_moved), {fz[0] * phase, fz[1] * phase});
        const double eg = distance(classical_g(c_moved), {gc[0] * phase, gc[1] * std::conj(phase)});
        report.equivariance = std::max({report.equivariance, ef, eg});
    }
    return report;
}

FaithfulnessResult faithfulness_search(const AlgElement& x, int N, int trials, std::uint64_t seed, double p, double q) {
    FaithfulnessResult result;
    int depth = 0;
    for (const auto& [mono, c] : x.terms()) depth = std::max(depth, mono.degree());
    result.N_used = std::max(N, depth + 10);
    if (x.is_zero()) return result;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int t = 0; t < trials && !result.witness_found; ++t) {
        const double theta = angle(rng);
        for (Family family : {Family::rho1, Family::rho2}) {
            const CMatrix m = evaluate(x, build_rep(family, theta, 0.0, result.N_used, p, q));
            const double norm = Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
            result.max_norm = std::max(result.max_norm, norm);
            if (norm > 1e-8) {
                result.witness_found = true;
                break;
            }
        }
    }
    return result;
}

bool faithfulness_probe(const AlgElement& x, int N, int trials, std::uint64_t seed, double p, double q) {
    return x.is_zero() || faithfulness_search(x, N, trials, seed, p, q).witness_found;
}

}  // namespace qhopf
