#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monodromy/classify.hpp"
#include "monodromy/hodge.hpp"
#include "monodromy/matrix.hpp"
#include "monodromy/vanishing.hpp"

namespace monodromy {

using Json = nlohmann::json;

// Scalars serialize losslessly: rationals as "num/den" strings, cyclotomics
// as {order, coeffs}.  Objects keep alphabetically sorted keys, so equal
// values serialize byte-identically.

Json to_json(const Rational& x);
Json to_json(const Cyclotomic& x);
Json to_json(const std::vector<Cyclotomic>& v);
Json to_json(const Matrix& m);
Json to_json(const HodgeVector& hv);
Json to_json(const LieType& t);
Json to_json(const ClassificationRecord& rec);
Json to_json(const VanishingLattice& lat);

Rational rational_from_json(const Json& j);
// Accepts the {order, coeffs} object, or a bare rational as shorthand.
Cyclotomic cyclotomic_from_json(const Json& j);
std::vector<Cyclotomic> vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
VanishingLattice lattice_from_json(const Json& j);

// Machine-readable output wrapper shared by every CLI subcommand.
// provenance lists the computation routes that produced the result.
Json envelope(const std::string& command, Json params, Json result,
              std::vector<std::string> provenance);

} // namespace monodromy
