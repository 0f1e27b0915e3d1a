#include "cayspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "cayspec/errors.hpp"
#include "cayspec/graph6.hpp"

namespace cayspec {

namespace detail {

// upper-triangle pair index in graph6 column order, 0-based i < j
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint32_t upper_triangle_mask(const TGraph& g) {
    std::uint32_t mask = 0;
    int nbits = g.n() * (g.n() - 1) / 2;
    for (auto [i, j] : g.edges())
        mask |= std::uint32_t(1) << (nbits - 1 - pair_index(i - 1, j - 1));
    return mask;
}

TGraph graph_from_mask(int n, std::uint32_t mask) {
    TGraph g(n);
    int nbits = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> (nbits - 1 - pair_index(i, j))) & 1) g.add_edge(i + 1, j + 1);
    return g;
}

// for every permutation q of [0,n): table[d] = source pair index of
// destination pair d, i.e. relabeled bit d comes from bit table[d]
struct PermTables {
    int nbits = 0;
    std::vector<std::array<std::uint8_t, 28>> perms;
};

std::shared_ptr<const PermTables> perm_tables(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const PermTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto tables = std::make_shared<PermTables>();
    tables->nbits = n * (n - 1) / 2;
    std::vector<int> q(n);
    std::iota(q.begin(), q.end(), 0);
    do {
        std::array<std::uint8_t, 28> t{};
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a) {
                int u = q[a], v = q[b];
                if (u > v) std::swap(u, v);
                t[pair_index(a, b)] = static_cast<std::uint8_t>(pair_index(u, v));
            }
        tables->perms.push_back(t);
    } while (std::next_permutation(q.begin(), q.end()));
    cache[n] = tables;
    return tables;
}

std::uint32_t canonical_mask(int n, std::uint32_t mask) {
    if (n <= 1) return 0;
    auto tables = perm_tables(n);
    int nbits = tables->nbits;
    std::uint32_t best = mask;
    for (const auto& t : tables->perms) {
        std::uint32_t val = 0;
        bool winning = false; // strictly below best on a prefix
        for (int d = 0; d < nbits; ++d) {
            std::uint32_t bit = (mask >> (nbits - 1 - t[d])) & 1;
            val = (val << 1) | bit;
            if (!winning) {
                std::uint32_t bestpref = best >> (nbits - 1 - d);
                if (val > bestpref) break;
                if (val < bestpref) winning = true;
            }
            if (d == nbits - 1 && val < best) best = val;
        }
    }
    return best;
}

bool is_canonical_mask(int n, std::uint32_t mask) {
    if (n <= 1) return true;
    auto tables = perm_tables(n);
    int nbits = tables->nbits;
    // bail out on the first relabeling that produces a smaller bit string;
    // non-canonical masks usually die within a couple of permutations
    for (const auto& t : tables->perms) {
        for (int d = 0; d < nbits; ++d) {
            std::uint32_t src = (mask >> (nbits - 1 - t[d])) & 1;
            std::uint32_t dst = (mask >> (nbits - 1 - d)) & 1;
            if (src < dst) return false;
            if (src > dst) break;
        }
    }
    return true;
}

} // namespace detail

std::string canonical_key(const TGraph& g) {
    if (g.n() > 8) throw CapacityError("canonical form is brute force; capped at 8 vertices");
    if (g.n() < 1) throw std::invalid_argument("canonical_key: empty graph");
    auto mask = detail::upper_triangle_mask(g);
    auto best = detail::canonical_mask(g.n(), mask);
    return emit_graph6(detail::graph_from_mask(g.n(), best));
}

} // namespace cayspec
