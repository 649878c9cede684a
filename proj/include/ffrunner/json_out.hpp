#pragma once

#include "ffrunner/covering.hpp"
#include "ffrunner/sunflower.hpp"

#include "json.hpp"

namespace ffr {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const Poly& f);
ordered_json family_json(const std::vector<Poly>& fs);
ordered_json subspace_json(const Subspace& s);
ordered_json tail_witness_json(const Tail& alpha, int exponent_k);

// Sets "q", "p", "e" and, for extension fields, the modulus echo.
void put_field(ordered_json& j, const Field& field);

ordered_json cover_json(const CoverReport& rep, const Field& field);
ordered_json sunflower_json(const SunflowerReport& rep, const Field& field);

}  // namespace ffr
