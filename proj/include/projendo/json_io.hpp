#pragma once

#include "projendo/invariants.hpp"
#include "projendo/projective_map.hpp"

#include <json.hpp>

namespace projendo::io {

using Json = nlohmann::ordered_json;

/// Schema problems raise Error("schema-violation"); unparsable text raises
/// Error("malformed-json").
Json parse(const std::string& text);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Modulus coefficients low to high; Q is ["0", "1"].
Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

/// {"field": [...], "coords": [...]}. A bare rational (string or integer) is
/// accepted on input and lands in `field`.
Json to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j, const FieldPtr& field = NumberField::rationals());

/// {"vars": n, "degree": m, "terms": [[[e0, ..., er], coefficient], ...]}.
Json to_json(const Form& f);
Form form_from_json(const Json& j);

/// {"degree", "source_dim", "target_dim", "components", "regularity"}.
/// Components are taken as given (no content reduction).
Json to_json(const ProjectiveMap& f);
ProjectiveMap map_from_json(const Json& j);

Json tuple_to_json(const std::vector<Form>& tuple);

/// {"field": [...], "rows": [[...], ...]}.
Json to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const Json& j);

/// {"field": [...], "generators": [[row-major entries], ...], "cap": N}; the
/// group is enumerated on read.
Json group_to_json(const FiniteMatrixGroup& g);
FiniteMatrixGroup group_from_json(const Json& j);

} // namespace projendo::io
