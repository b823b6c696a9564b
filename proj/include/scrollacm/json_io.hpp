#pragma once

#include "scrollacm/catalog.hpp"
#include "scrollacm/mutation.hpp"
#include "scrollacm/pencil.hpp"

#include <json.hpp>

namespace scrollacm {

using nlohmann::json;

// Integers become JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are "p/q" strings (plain numbers when integral).
json integer_json(const Integer& v);
json rational_json(const Rational& v);
/// Accepts a JSON integer or a string "p", "p/q". Throws std::invalid_argument.
Rational rational_from_json(const json& j);
Integer integer_from_json(const json& j);

json to_json(const Scroll& s);
Scroll scroll_from_json(const json& j);
json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const json& j);
json to_json(const ChernCharacter& c);
ChernCharacter character_from_json(const json& j);
json to_json(const DimensionVector& d);
DimensionVector dimension_vector_from_json(const json& j);
json to_json(const BraidWord& k);
BraidWord braid_word_from_json(const json& j);
json to_json(const TriVector& v);
json to_json(const Cohomology& c);

json to_json(const BundleDescriptor& d);
json to_json(const std::vector<BundleDescriptor>& ds);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json to_json(const MatrixPencil& m);
/// {"rows": a, "cols": b, "M1": [[...]], "M2": [[...]]}; throws std::invalid_argument on malformed input.
MatrixPencil pencil_from_json(const json& j);

json to_json(const KWBlock& b);
KWBlock block_from_json(const json& j);
json to_json(const KWDecomposition& d, bool with_witnesses = true);

}  // namespace scrollacm
