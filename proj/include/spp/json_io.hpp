#pragma once

#include "spp/matrix.hpp"
#include "spp/partition.hpp"
#include "spp/rational.hpp"

#include "json.hpp"

#include <istream>
#include <string_view>

namespace spp {

using Json = nlohmann::json;

// Parses JSON keeping the source text of every non-integer number (stored
// as a string), so decimals such as 0.6 convert to rationals exactly.
// Throws ParseError.
Json parse_json_exact(std::string_view text);
Json parse_json_exact(std::istream& in);

// Integer, exact-decimal string, or "a/b" string. Throws ParseError.
Rational rational_from_json(const Json& value);
// Canonical string form.
Json rational_to_json(const Rational& value);
// Integer as a JSON number when it fits in 64 bits, anything else as a string.
Json rational_to_wire(const Rational& value);

// Array of rows. Throws ParseError on ragged or empty input.
Matrix matrix_from_json(const Json& rows);
Json matrix_to_json(const Matrix& m);

// Array of blocks, each an array of 1-based element ids.
Json partition_to_json(const Partition& partition);

}  // namespace spp
