#include "cayspec/enumerate.hpp"

#include <algorithm>

#include "cayspec/canonical.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/graph6.hpp"

namespace cayspec {

namespace {

bool mask_connected(int n, std::uint32_t mask) {
    if (n <= 1) return true;
    int nbits = n * (n - 1) / 2;
    // adjacency rows as vertex bitsets
    std::uint32_t adj[8] = {};
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> (nbits - 1 - bit)) & 1) {
                adj[i] |= std::uint32_t(1) << j;
                adj[j] |= std::uint32_t(1) << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t(1) << n) - 1;
}

} // namespace

std::vector<GraphClass> connected_graphs_up_to_iso(int v) {
    if (v < 1) throw std::invalid_argument("vertex count must be >= 1");
    if (v > 7) throw CapacityError("exhaustive enumeration capped at 7 vertices");

    int nbits = v * (v - 1) / 2;
    // every isomorphism class meets the mask loop at exactly one canonical
    // representative, so keeping those needs no dedup set
    std::vector<GraphClass> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nbits); ++mask) {
        auto m = static_cast<std::uint32_t>(mask);
        if (!mask_connected(v, m)) continue;
        if (!detail::is_canonical_mask(v, m)) continue;
        TGraph g = detail::graph_from_mask(v, m);
        out.push_back({g, emit_graph6(g)});
    }
    std::sort(out.begin(), out.end(),
              [](const GraphClass& a, const GraphClass& b) { return a.key < b.key; });
    return out;
}

} // namespace cayspec
