#pragma once

#include <string>

#include <json.hpp>

#include "pftil/pfaffian.hpp"
#include "pftil/poly.hpp"
#include "pftil/skew.hpp"

namespace pftil {

// Polynomials travel as arrays of [e_k, e_t, "coefficient"] triples in
// ascending graded-lex order; all integers are decimal strings.
nlohmann::json poly_to_json(const BivariatePolynomial& p);
BivariatePolynomial poly_from_json(const nlohmann::json& j);

nlohmann::json ratfunc_to_json(const RationalFunction& r);

// Matrix JSON: {order, ring: "int"|"poly", entries: [[i, j, value], ...]}
// with i < j only.
nlohmann::json matrix_to_json(const IntSkewMatrix& m);
nlohmann::json matrix_to_json(const PolySkewMatrix& m);
IntSkewMatrix int_matrix_from_json(const nlohmann::json& j);

// Full square matrix as CSV lines, for inspection.
std::string matrix_to_csv(const IntSkewMatrix& m);
std::string matrix_to_csv(const PolySkewMatrix& m);

// Decomposition JSON: {t: [ratfunc...], r: [[i, j, ratfunc]...]}.
nlohmann::json decomposition_to_json(const PfaffianDecomposition<BigInt>& d);
nlohmann::json decomposition_to_json(const PfaffianDecomposition<BivariatePolynomial>& d);

}  // namespace pftil
