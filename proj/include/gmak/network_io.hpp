#ifndef GMAK_NETWORK_IO_HPP
#define GMAK_NETWORK_IO_HPP

#include <string>

#include "json.hpp"

#include "gmak/network.hpp"

namespace gmak {

// Parses the line-oriented network text format:
//
//   # comment to end of line
//   A + 2 B -> B + C            reaction (irreversible)
//   A + B <=> C                 reversible, expands to two reactions
//   A + 2 B ~ A + B             kinetic complex association
//   rate A + 2 B -> B + C = 3/2 rate constant for an existing reaction
//
// Complexes are '+'-joined terms `[coefficient] species`, coefficient an
// integer or p/q (default 1); the empty complex is written `0`. Complexes
// without an explicit association get themselves as kinetic complex.
GeneralizedNetwork parse_network(const std::string& text);

// Emits text that parses back to a structurally equal network (species and
// complexes in declaration order, reactions in order, one `->` line each).
std::string serialize(const GeneralizedNetwork& net);

std::string complex_to_string(const GeneralizedNetwork& net, const Complex& c);

nlohmann::json network_to_json(const GeneralizedNetwork& net);

}  // namespace gmak

#endif
