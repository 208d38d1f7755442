#pragma once

// Closed-form products in a quantum disc  x^* x - r x x^* = 1 - r  on the
// basis x_mu (1 - x x^*)^m. Shared by the S^3 product and the trivializations.

#include "qhopf/scalars.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qhopf {

/// Laurent polynomial in the disc parameter r with integer coefficients.
using LaurentR = std::map<int, long long>;
/// Laurent polynomial in (p, q), keyed by (p exponent, q exponent).
using LaurentPQ = std::map<std::pair<int, int>, long long>;

struct DiscTerm {
    int shift = 0;  // signed power of x
    int power = 0;  // power of (1 - x x^*)
    LaurentR coeff;
};

/// x_{mu1} P^{m1} * x_{mu2} P^{m2} with P = 1 - x x^*, expanded on the basis.
std::vector<DiscTerm> disc_product(int mu1, int m1, int mu2, int m2);

ParamScalar laurent_to_scalar(const LaurentPQ& c);
/// Same for a single-variable Laurent polynomial in the given parameter.
ParamScalar laurent_to_scalar(const LaurentR& c, Param r);

}  // namespace qhopf
