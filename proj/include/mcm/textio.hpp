#pragma once

#include <string>

#include "json.hpp"
#include "mcm/blocks.hpp"
#include "mcm/intmat.hpp"
#include "mcm/presentation.hpp"

namespace mcm {

// Insertion-ordered JSON so that emitted reports are byte-stable.
using OrderedJson = nlohmann::ordered_json;

// Matrix text form: rows separated by ';', entries by whitespace.
// "1 0 -1; 0 2 3" is a 2 x 3 matrix.  Rows must have equal length; an
// empty (or all-blank) string is the 0 x 0 matrix.  Throws
// std::invalid_argument with a position hint on malformed input.
IntMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const IntMatrix& m);

// JSON forms.  Integers must fit in signed 64 bits (all catalog data is
// tiny); out-of-range or malformed values throw std::invalid_argument.
OrderedJson matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const OrderedJson& j);

// {"equations": [[...], ...], "free_rank": u}
OrderedJson presentation_to_json(const MonoidPresentation& p);
MonoidPresentation presentation_from_json(const OrderedJson& j);

// {"rank": r, "classes": [[...], ...]} with optional "torsion": [m1, ...]
OrderedJson block_spec_to_json(const BlockSpec& s);
BlockSpec block_spec_from_json(const OrderedJson& j);

// {"free_rank": r, "torsion": [d1, ...]}
OrderedJson group_to_json(const AbelianGroupInvariants& g);

// Exact rational as "p" or "p/q".
std::string rat_to_string(const Rat& r);

OrderedJson vec_to_json(const IntVec& v);
IntVec vec_from_json(const OrderedJson& j);

// Parse with errors surfaced as std::invalid_argument.
OrderedJson json_parse_checked(const std::string& text);

// Canonical rendering: two-space indent when pretty, compact otherwise;
// always ends with a newline.
std::string render_json(const OrderedJson& j, bool pretty);

}  // namespace mcm
