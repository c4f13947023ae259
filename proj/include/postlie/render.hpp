#pragma once

#include <string>

#include "postlie/envelope.hpp"
#include "postlie/operad.hpp"
#include "postlie/struct_algebra.hpp"
#include "postlie/tree.hpp"

namespace postlie {

/// JSON forms, parse(print(x)) = x for every type:
///  tree      {"d": {"sym":"a"} | {"lab":3} | {"unl":true}, "c": [tree...]}
///  operad    {"arity": n, "terms": [{"coef": "p/q", "tree": tree}, ...]}
///  envelope  {"terms": [{"coef": "p/q", "forest": [tree...]}, ...]}
///  algebra   {"dim": d, "basis": ["x", ...],
///             "bracket": [[i,j,k,"p/q"], ...], "triangle": [...]}
/// Indices are 0-based; terms are emitted in canonical order.
std::string tree_json(const PlanarTree& t);
std::string operad_json(const OperadElement& x);
std::string env_json(const EnvElement& x);
std::string algebra_json(const StructAlgebra& A);

/// Parsers for the JSON forms above; throw std::invalid_argument on
/// malformed input.
PlanarTree tree_from_json(const std::string& text);
OperadElement operad_from_json(const std::string& text);
EnvElement env_from_json(const std::string& text);
StructAlgebra algebra_from_json(const std::string& text);

/// LaTeX over a two-macro set: \T{<decoration>}{<children>} draws a vertex
/// with its comma-separated subtrees and \uv is the unlabeled decoration.
std::string tree_latex(const PlanarTree& t);
std::string operad_latex(const OperadElement& x);
std::string env_latex(const EnvElement& x);

/// Indented pictures using box-drawing branches, one line per vertex.
std::string tree_ascii(const PlanarTree& t);
std::string operad_ascii(const OperadElement& x);
std::string env_ascii(const EnvElement& x);

}  // namespace postlie
