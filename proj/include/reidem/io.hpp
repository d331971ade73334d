#pragma once

#include <string>

#include <json.hpp>

#include "reidem/endo.hpp"
#include "reidem/twisted.hpp"

namespace reidem {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);

// { "order": n, "table": [row-major], "names": [...]? } — nested rows are
// also accepted for the table.
FiniteGroup finite_group_from_json(const Json& j);
Json finite_group_to_json(const FiniteGroup& g);

// { "map": [indices] }
FiniteEndomorphism finite_endomorphism_from_json(const Json& j, const FiniteGroup& group);

// { "rank": r, "images": ["a b", ...], "inverse_images": [...]? }
FreeEndomorphism free_endomorphism_from_json(const Json& j);

// [[...], ...] or { "matrix": [[...], ...] }
IntegerMatrix integer_matrix_from_json(const Json& j);

// Integer is emitted as a JSON number when it fits in 64 bits, as a decimal
// string otherwise.
Json integer_to_json(const Integer& v);
Json invariant_to_json(const ClassInvariant& inv);

}  // namespace reidem
