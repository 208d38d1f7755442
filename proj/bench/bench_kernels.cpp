// Parallel kernels against their serial references. Each row reports the best
// of `reps` wall-clock runs and whether both paths agree.
//
//   qhopf_bench [reps]

#include "qhopf/chern.hpp"
#include "qhopf/numrep.hpp"
#include "qhopf/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qhopf;

namespace {

double best_of(int reps, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
                agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial[s]", "omp[s]", "speedup");
    bool ok = true;

    {
        std::mt19937_64 rng(11);
        const RandomShape shape{24, 5, 4};
        std::vector<std::pair<AlgElement, AlgElement>> pairs;
        for (int i = 0; i < 8; ++i) pairs.emplace_back(random_element(rng, shape), random_element(rng, shape));
        std::vector<AlgElement> s(pairs.size()), par(pairs.size());
        const double ts = best_of(reps, [&] {
            for (std::size_t i = 0; i < pairs.size(); ++i) s[i] = mul_serial(pairs[i].first, pairs[i].second);
        });
        const double tp = best_of(reps, [&] {
            for (std::size_t i = 0; i < pairs.size(); ++i) par[i] = mul(pairs[i].first, pairs[i].second);
        });
        ok = ok && s == par;
        row("mul, 8 pairs of 24 terms", ts, tp, s == par);
    }

    for (int mu : {-5, 7}) {
        const CoinvariantMatrix e = idempotent(mu);
        CoinvariantMatrix s, par;
        const double ts = best_of(reps, [&] { s = matrix_product_serial(e, e); });
        const double tp = best_of(reps, [&] { par = matrix_product(e, e); });
        ok = ok && s == par;
        row("E^2 for mu = " + std::to_string(mu), ts, tp, s == par);
    }

    {
        std::vector<AlgElement> monomials;
        for (int mu = -3; mu <= 3; ++mu)
            for (int d = 0; d <= 6; ++d) {
                monomials.push_back(AlgElement::monomial({mu, d, 0, mu}));
                if (d > 0) monomials.push_back(AlgElement::monomial({mu, 0, d, mu}));
            }
        std::vector<NumericTrace> s, par;
        const double ts = best_of(reps, [&] { s = numeric_traces_serial(monomials, 500, 0.5, 1.0 / 3.0); });
        const double tp = best_of(reps, [&] { par = numeric_traces(monomials, 500, 0.5, 1.0 / 3.0); });
        bool agree = s.size() == par.size();
        for (std::size_t i = 0; agree && i < s.size(); ++i) agree = std::abs(s[i].value - par[i].value) < 1e-12;
        ok = ok && agree;
        row("truncated traces, 91 monomials", ts, tp, agree);
    }
    return ok ? 0 : 1;
}
