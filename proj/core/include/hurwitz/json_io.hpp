#pragma once

// JSON forms. Rationals are always "p/q" strings.
//   WPolynomial: {"n": 3, "terms": [{"monomial": [[1, 2, 3], [1, 3, 1]], "coeff": "2/1"}, ...]}
//                each monomial entry is [i, j, exponent] with i < j
//   GraphSeries: [{"edges": "1-2;1-2", "vertices": 2, "coeff": "1/3"}, ...]

#include "hurwitz/wring.hpp"

#include <string>
#include <string_view>

namespace hurwitz {

std::string to_json(const WPolynomial& p);
WPolynomial wpolynomial_from_json(std::string_view text);

std::string to_json(const GraphSeries& s);
GraphSeries graph_series_from_json(std::string_view text);

}  // namespace hurwitz
