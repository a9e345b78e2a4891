#pragma once

#include "qtoric/charmatrix.hpp"
#include "qtoric/decision.hpp"
#include "qtoric/family.hpp"
#include "qtoric/polyring.hpp"
#include "qtoric/simplicial.hpp"

#include <json.hpp>

#include <string>

namespace qtoric {

using Json = nlohmann::json;

/// Thrown on any schema violation; surfaces as exit status 2 in the CLI.
class JsonSchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact integers: numbers within int64 range, decimal strings beyond.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const char* what);

// {"vertices": m, "facets": [[1,2,3], ...]}; canonical output sorts facets.
Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);

// Polytope slot: either the complex form above or
// {"type": "simplex_product", "factors": [3, ...]}.
SimplicialComplex polytope_from_json(const Json& j);

// {"n":, "m":, "entries": [[...], ...], "polytope": {...}}
Json to_json(const CharacteristicMatrix& a);
Json matrix_json_with_factors(const CharacteristicMatrix& a, const std::vector<int>& factors);
CharacteristicMatrix matrix_from_json(const Json& j);

// {"n":, "blocks": {"(i,j)": [x,y,z], ...}}, identity and zero blocks implicit.
Json to_json(const StandardForm& sf);
StandardForm standard_form_from_json(const Json& j);

Json to_json(const EquivalenceMove& move);

// {"mod2":, "n":, "terms": [{"exp": [...], "coef": "..."}]}, leading term first.
Json to_json(const ZPolynomial& p);
Json to_json(const Z2Polynomial& p);
ZPolynomial polynomial_from_json(const Json& j);

// {"n":, "relations": [...]}
Json to_json(const RingPresentation& pres);
RingPresentation presentation_from_json(const Json& j);

Json to_json(const ValidityCertificate& cert);
Json to_json(const DecisionReport& report);
Json to_json(const FourthPowerLocus& locus);
Json to_json(const IsoDecision& decision);
Json to_json(const IsoVerdict& verdict);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// Reports are byte-identical across runs on identical input.
std::string canonical_dump(const Json& j);

}  // namespace qtoric
