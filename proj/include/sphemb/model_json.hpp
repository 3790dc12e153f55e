#pragma once

#include <json.hpp>

#include "sphemb/divisor_model.hpp"

namespace sphemb {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings. Rationals are always strings, "p" or "p/q".
Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const Character& chi);
Json to_json(const Covector& f);
Json to_json(const Divisor& d);
Json to_json(const DivisorClass& c);
Json to_json(const AbelianGroupPresentation& g);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// Model document: lattice {rank, labels}, basis_characters, simple_roots,
/// colors [{id, functional, canonical_coefficient}], boundaries [{id, valuation}],
/// plus name, aliases and the provisional flag.
Json model_to_json(const SphericalDivisorModel& model);
SphericalDivisorModel model_from_json(const Json& doc);

}  // namespace sphemb
