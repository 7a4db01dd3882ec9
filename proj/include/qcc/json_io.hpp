#pragma once

#include <string>

#include "json.hpp"
#include "qcc/ccmap.hpp"
#include "qcc/repcount.hpp"
#include "qcc/tpath.hpp"

namespace qcc {

using Json = nlohmann::ordered_json;

// {"d": int, "terms": [{"hp": int, "c": "int"}]}, hp in units of 1/(2d), ascending
Json qscalar_to_json(const QScalar& s);
QScalar qscalar_from_json(const Json& j);

// {"d": int, "terms": [{"exp": [..], "coeff": [{"hp", "c"}]}]}, terms lex-descending
Json torus_to_json(const TorusElement& x);
TorusElement torus_from_json(const FormPtr& form, const Json& j);

// Seed file: {"n", "B", "D", "lambda"?: [[[num, den]]], "coeffs"?: "none" | "principal"}.
// A string names a built-in quiver ("A2", "C2", "G2", "Kronecker", "rank4").
struct SeedSpec {
  ValuedQuiver quiver;
  CompatiblePair pair;
};
SeedSpec seed_from_json(const Json& j);
Json seed_to_json(const ValuedQuiver& q);
Json form_to_json(const SkewForm& f);

// {"quiver": name or {"B","D"}, "field": {"p","m"}, "dims", "arrows": [{"from","to","copies","matrices"}]};
// vertices are 1-based, matrix entries are lists of F_p coefficients (or integer codes).
Json rep_to_json(const ValuedRep& v);
ValuedRep rep_from_json(const Json& j);

// {"mode", "q0"?, "dims", "entries": [{"e", "count"}]}, entries lex-ascending
Json table_to_json(const CountTable& t);
CountTable table_from_json(const Json& j);

Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace qcc
