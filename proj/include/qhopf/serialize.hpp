#pragma once

// JSON forms of the algebraic values. Coefficients are strings in the same
// canonical text as ParamScalar::to_string.

#include "qhopf/chern.hpp"
#include "qhopf/galois.hpp"
#include "qhopf/gluing.hpp"

#include <json.hpp>

namespace qhopf {

using Json = nlohmann::ordered_json;

Json to_json(const BasisMonomial& mono);
/// [{"mu", "m", "n", "nu", "coeff"}, ...] in canonical term order.
Json to_json(const AlgElement& x);
/// [{"u_power", "coeff"}, ...]
Json to_json(const LaurentElement& x);
/// [{"mu", "m", "n", "nu", "u_power", "coeff"}, ...]
Json to_json(const CotensorElement& x);
/// [{"left": monomial, "right": monomial, "coeff"}, ...]
Json to_json(const TensorElement& x);
/// [{"disc": "x" | "y", "mu", "m", "u_power", "coeff"}, ...]
Json to_json(const TrivializedElement& x);
/// Rows of entries, each entry in the AlgElement form.
Json to_json(const CoinvariantMatrix& e);

/// Inverse of to_json(AlgElement). Throws std::invalid_argument on malformed input.
AlgElement element_from_json(const Json& j);

}  // namespace qhopf
