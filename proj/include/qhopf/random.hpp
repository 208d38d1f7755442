#pragma once

// Seeded random elements for property checks.

#include "qhopf/s3core.hpp"

#include <random>

namespace qhopf {

struct RandomShape {
    int max_terms = 3;
    int max_shift = 2;   // bound on |mu| and |nu|
    int max_defect = 2;  // bound on m and n
};

/// Drawn from a fixed pool: small rationals, p, q, 1 - q, p q, 1/(1 - p), ...
ParamScalar random_coefficient(std::mt19937_64& rng);
BasisMonomial random_monomial(std::mt19937_64& rng, const RandomShape& shape = {});
/// Can be zero when repeated monomials cancel.
AlgElement random_element(std::mt19937_64& rng, const RandomShape& shape = {});
/// Winding-0 combination.
AlgElement random_coinvariant(std::mt19937_64& rng, const RandomShape& shape = {});
S2Polynomial random_base_polynomial(std::mt19937_64& rng, int max_words = 3, int max_length = 3);

}  // namespace qhopf
