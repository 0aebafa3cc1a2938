#pragma once

// JSON encodings of data, values, words, monoid elements, cell points and
// matrices. Words are written with node labels, not internal indices.

#include "json.hpp"
#include "tnnflag/flag.hpp"
#include "tnnflag/matrix_a.hpp"

namespace tnnflag {

using Json = nlohmann::json;

/// {"type": "A3"} or {"gcm": [[...]], "symmetrizer": [...]}.
DatumPtr datum_from_json(const Json& j);

/// qpos "p/q"; trop integer; one "1"; qtpos {"num": [["c", deg], ...], "den": [...]}.
Json to_json(const SemifieldValue& a);
SemifieldValue value_from_json(const Json& j, SemifieldKind kind);
Json params_to_json(const Params& p);
Params params_from_json(const Json& j, SemifieldKind kind);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json word_to_json(const DatumPtr& d, const Word& w);
Word word_from_json(const DatumPtr& d, const Json& j);
Json element_to_json(const WeylElement& w);
WeylElement element_from_json(const DatumPtr& d, const Json& j);

/// {"x": word, "a": [...], "t": [...], "y": word, "c": [...]}; missing
/// parts default to the identity.
Json to_json(const GElement& g);
GElement g_from_json(const DatumPtr& d, const Json& j, SemifieldKind kind);

/// {"v": word, "w": word, "word": [...], "params": [...]}. "word" defaults
/// to the descent-algorithm word of "w"; when both are given they must agree.
Json to_json(const CellPoint& p);
CellPoint point_from_json(const DatumPtr& d, const Json& j, SemifieldKind kind);
Json to_json(const CellIndex& c);

/// Row-major rows of exact entries: "p/q" over Q, {"num", "den"} over Q(t).
Json to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const Json& j, SemifieldKind kind);

}  // namespace tnnflag
