#pragma once

#include <string>

#include <json.hpp>

#include "pfcone/alternating.hpp"
#include "pfcone/collatz_wielandt.hpp"
#include "pfcone/eq_type1.hpp"
#include "pfcone/eq_type2.hpp"
#include "pfcone/spectral.hpp"

namespace pfcone {

using Json = nlohmann::json;  // std::map-backed, so keys serialize sorted

// Matrix documents are {"n": k, "entries": [[...], ...]}, vector documents
// {"entries": [...]}. Entries are numbers or "p/q" strings. Numbers keep
// their source text, so decimals are exact in rational mode and correctly
// rounded in float mode.
Json parse_json_exact(const std::string& text);
NonnegMatrix matrix_from_json(const Json& doc, Mode mode);
Vector vector_from_json(const Json& doc, Mode mode);
std::string read_file(const std::string& path);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);

// Rationals with integer value fitting in 64 bits become JSON integers and
// all other rationals "p/q" strings, so nothing is rounded. Floats become
// shortest round-trip numbers; non-finite values become "inf", "-inf", "nan".
Json scalar_to_json(const Scalar& s);
Json index_set_to_json(const IndexSet& s);

Json to_json(const Analysis& a);
Json to_json(const SolveReport1& r);
Json to_json(const SolveReport2& r);
Json to_json(const CWReport& r);
Json to_json(const CWSets& r);
Json to_json(const AltResult& r);
Json to_json(const Conditions31& r);

// Compact single-line document with sorted keys and a trailing newline.
std::string dump(const Json& doc);

}  // namespace pfcone
