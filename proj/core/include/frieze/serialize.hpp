#pragma once

#include <string>

#include "frieze/enumerate.hpp"
#include "frieze/frieze.hpp"
#include "frieze/reduce.hpp"

namespace frieze {

/// JSON cycle document, e.g.
///   {"domain":"Z[i]","lambda":-1,"entries":["2i","-i+1",...]}
/// Modular domains carry an extra "n" field.
std::string cycle_to_json(const QuiddityCycle& c);

/// Parse a cycle document; entries are re-verified, and a stored "lambda"
/// must match the verified sign.
QuiddityCycle cycle_from_json(const std::string& text);

/// {"domain":...,"lambda":...,"m":...,"rows":[[...]],"tame":...}
/// where rows[r][i] holds x[i, i+r] as a literal string.
std::string frieze_to_json(const FriezePattern& f);

/// Nested node/leaf document with full split witnesses.
std::string tree_to_json(const DecompositionTree& t);

/// Undirected DOT graph: one node per irreducible summand leaf, one edge
/// per gluing seam labelled with the seam data (k and sigma).
std::string tree_to_dot(const DecompositionTree& t);

/// Indented one-line-per-node rendering for terminals.
std::string tree_to_text(const DecompositionTree& t);

std::string report_to_json(const ClassificationReport& r);

/// Human-readable summary table.
std::string report_to_text(const ClassificationReport& r);

} // namespace frieze
