#ifndef CAYSPEC_ENUMERATE_HPP
#define CAYSPEC_ENUMERATE_HPP

#include <string>
#include <vector>

#include "cayspec/tgraph.hpp"

namespace cayspec {

struct GraphClass {
    TGraph graph;    // canonical representative
    std::string key; // canonical_key(graph)
};

// All connected graphs on v labeled... deduplicated up to isomorphism by
// canonical form, sorted by key. Filters the 2^C(v,2) labeled graphs; v <= 7
// (v = 7 takes a while and sits behind an explicit CLI opt-in).
std::vector<GraphClass> connected_graphs_up_to_iso(int v);

} // namespace cayspec

#endif
