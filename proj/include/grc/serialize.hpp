#pragma once

#include <string>

#include "json.hpp"

#include "grc/entropy.hpp"
#include "grc/matrix.hpp"
#include "grc/partitioned.hpp"

namespace grc {

using Json = nlohmann::ordered_json;

// Rationals serialize as "a/b" in lowest terms, or "a" when integral.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

// {"x": "1/2", ...} with keys in space order.
Json dist_to_json(const Subdist& p);
Subdist dist_from_json(const Space& space, const Json& j);

// {"dom": [...], "cod": [...], "rows": {"x": {"y": "1/2"}}}. Zero rows are
// omitted; rows and entries follow space order.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"elements": [...], "partition": [[...], ...]} with blocks in canonical
// order and members in element order.
Json pset_to_json(const PSet& s);
PSet pset_from_json(const Json& j);

// Entropy values render with 12 significant digits.
std::string format_bits(double value);
Json ledger_to_json(const EntropyLedger& l);

}  // namespace grc
