#ifndef CAYSPEC_GRAPH6_HPP
#define CAYSPEC_GRAPH6_HPP

#include <string>

#include "cayspec/tgraph.hpp"

namespace cayspec {

// Standard graph6 encoding: N(n) then the upper triangle x(0,1) x(0,2)
// x(1,2) x(0,3) ... packed big-endian into 6-bit groups, each +63.
// Accepts an optional ">>graph6<<" prefix on input; never emits one.
// Malformed input raises ParseError with the offending byte offset.
TGraph parse_graph6(const std::string& text);
std::string emit_graph6(const TGraph& g);

} // namespace cayspec

#endif
