#ifndef CAYSPEC_CANONICAL_HPP
#define CAYSPEC_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "cayspec/tgraph.hpp"

namespace cayspec {

// Isomorphism-invariant key: the graph6 string of the relabeling whose
// upper-triangle bit string is minimal over all vertex permutations.
// Brute force over n! relabelings; capped at n <= 8.
std::string canonical_key(const TGraph& g);

namespace detail {
// bit-packed upper triangle (graph6 column order, pair (0,1) most significant);
// shared with the exhaustive enumerator
std::uint32_t upper_triangle_mask(const TGraph& g);
TGraph graph_from_mask(int n, std::uint32_t mask);
std::uint32_t canonical_mask(int n, std::uint32_t mask);
bool is_canonical_mask(int n, std::uint32_t mask); // no relabeling is smaller
} // namespace detail

} // namespace cayspec

#endif
