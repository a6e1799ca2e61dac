#pragma once

// Polynomials travel as JSON arrays of decimal strings, ascending in q.

#include <json.hpp>

#include "qpl/polyseries.hpp"

namespace qpl {

nlohmann::ordered_json to_json(const IntPolynomial& p);
nlohmann::ordered_json to_json(const TruncatedSeries& s);

/// Throws InvalidParams on anything but an array of base-10 integer strings.
IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

}  // namespace qpl
