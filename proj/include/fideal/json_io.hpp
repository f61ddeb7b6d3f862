#pragma once

// JSON forms of the library's values. Keys are emitted in a fixed order so
// serialized output is byte-stable.

#include "fideal/complex.hpp"
#include "fideal/ideal.hpp"
#include "fideal/invariants.hpp"
#include "json.hpp"

namespace fideal {

using Json = nlohmann::ordered_json;

Json subset_to_json(VertexSubset s);                 // [1,2]
Json to_json(const Ideal& ideal);                    // {"n":..,"generators":..}
Json to_json(const SimplicialComplex& complex);      // {"n":..,"facets":..}
Json to_json(const FVector& f);                      // [4,3]
Json to_json(const PrimeDecomposition& primes);      // {"covers":..,"height":..,"unmixed":..}
Json to_json(const TheoremReport& report);

}  // namespace fideal
