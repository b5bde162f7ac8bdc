#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nuwigner/errata.hpp"
#include "nuwigner/operator_matrix.hpp"
#include "nuwigner/report.hpp"

namespace nuwigner {

using Json = nlohmann::json;

/// [num, den]; each component is a JSON integer when it fits in 64 bits and a
/// decimal string otherwise.
Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
/// nu-ascending list of [num, den] for real polynomials, of {re, im} otherwise.
Json to_json(const NuPolynomial& p);
/// [{coeff: {re, im}, nu_power, radicand: [[num, den], ...]}, ...]: one term per
/// monomial of each coefficient polynomial.
Json to_json(const RadicalSum& r);
Json to_json(const BasisLabel& label);
/// {dim, basis, entries}; zero entries are omitted.
Json to_json(const OperatorMatrix& m);
Json to_json(const ComplexMatrix& m);
Json to_json(const AlgebraReport& r);
Json to_json(const ErratumFinding& f);

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
NuPolynomial polynomial_from_json(const Json& j);
RadicalSum radical_from_json(const Json& j);
BasisLabel label_from_json(const Json& j);
/// Inverse of to_json(OperatorMatrix). Throws ParseError on malformed input.
OperatorMatrix matrix_from_json(const Json& j);

/// Deterministic text: keys sorted, two-space indent, doubles as %.17g,
/// non-finite doubles as null, trailing newline.
std::string dump_json(const Json& j);

/// %.17g, the float format shared by JSON and CSV output.
std::string format_double(double x);

}  // namespace nuwigner
