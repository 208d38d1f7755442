#include "qhopf/random.hpp"

#include <array>

namespace qhopf {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

ParamScalar random_coefficient(std::mt19937_64& rng) {
    const ParamScalar p = ParamScalar::p(), q = ParamScalar::q(), one(1);
    const std::array<ParamScalar, 10> pool{
        one, ParamScalar(-1), ParamScalar(2), ParamScalar(mpq_class(1, 2)), p, q, one - q, p * q,
        ParamScalar(mpq_class(-3, 2)), one / (one - p),
    };
    return pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
}

BasisMonomial random_monomial(std::mt19937_64& rng, const RandomShape& shape) {
    BasisMonomial mono;
    mono.mu = uniform(rng, -shape.max_shift, shape.max_shift);
    mono.nu = uniform(rng, -shape.max_shift, shape.max_shift);
    const int d = uniform(rng, 0, shape.max_defect);
    if (uniform(rng, 0, 1) == 0) mono.m = d;
    else mono.n = d;
    return mono;
}

AlgElement random_element(std::mt19937_64& rng, const RandomShape& shape) {
    AlgElement out;
    const int terms = uniform(rng, 1, shape.max_terms);
    for (int i = 0; i < terms; ++i) out.add_term(random_monomial(rng, shape), random_coefficient(rng));
    return out;
}

AlgElement random_coinvariant(std::mt19937_64& rng, const RandomShape& shape) {
    AlgElement out;
    const int terms = uniform(rng, 1, shape.max_terms);
    for (int i = 0; i < terms; ++i) {
        BasisMonomial mono = random_monomial(rng, shape);
        mono.nu = mono.mu;
        out.add_term(mono, random_coefficient(rng));
    }
    return out;
}

S2Polynomial random_base_polynomial(std::mt19937_64& rng, int max_words, int max_length) {
    S2Polynomial out;
    const int words = uniform(rng, 1, max_words);
    for (int i = 0; i < words; ++i) {
        S2Word w;
        w.coeff = random_coefficient(rng);
        const int len = uniform(rng, 0, max_length);
        for (int j = 0; j < len; ++j) w.letters.push_back(static_cast<S2Generator>(uniform(rng, 0, 2)));
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace qhopf
