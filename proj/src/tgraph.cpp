#include "cayspec/tgraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cayspec/char_poly.hpp"
#include "cayspec/errors.hpp"

namespace cayspec {

TGraph TGraph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    TGraph g(n);
    for (auto [i, j] : pairs) g.add_edge(i, j);
    return g;
}

TGraph TGraph::from_transpositions(int n, const std::vector<Transposition>& ts) {
    TGraph g(n);
    for (const auto& t : ts) g.add_edge(t.i, t.j);
    return g;
}

std::vector<Transposition> TGraph::transpositions() const {
    std::vector<Transposition> ts;
    ts.reserve(edges_.size());
    for (auto [i, j] : edges_) ts.emplace_back(i, j);
    return ts;
}

void TGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_)
        throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside [1," + std::to_string(n_) + "]");
    auto e = std::make_pair(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    edges_.insert(it, e);
}

bool TGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

int TGraph::degree(int v) const {
    int d = 0;
    for (auto [i, j] : edges_) d += (i == v) + (j == v);
    return d;
}

std::vector<int> TGraph::neighbors(int v) const {
    std::vector<int> nb;
    for (auto [i, j] : edges_) {
        if (i == v) nb.push_back(j);
        if (j == v) nb.push_back(i);
    }
    std::sort(nb.begin(), nb.end());
    return nb;
}

bool TGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<bool> seen(n_ + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v))
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

// ---- named families ----

TGraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    TGraph g(m);
    for (int i = 1; i < m; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, m);
    return g;
}

TGraph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star needs >= 2 vertices");
    TGraph g(n);
    for (int i = 2; i <= n; ++i) g.add_edge(1, i);
    return g;
}

TGraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
    TGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

TGraph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    TGraph g(n);
    std::vector<int> cls(n + 1);
    int v = 1;
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int k = 0; k < parts[c]; ++k) cls[v++] = static_cast<int>(c);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (cls[i] != cls[j]) g.add_edge(i, j);
    return g;
}

TGraph join(const TGraph& a, const TGraph& b) {
    TGraph g(a.n() + b.n());
    for (auto [i, j] : a.edges()) g.add_edge(i, j);
    for (auto [i, j] : b.edges()) g.add_edge(a.n() + i, a.n() + j);
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= b.n(); ++j) g.add_edge(i, a.n() + j);
    return g;
}

TGraph disjoint_union(const TGraph& a, const TGraph& b) {
    TGraph g(a.n() + b.n());
    for (auto [i, j] : a.edges()) g.add_edge(i, j);
    for (auto [i, j] : b.edges()) g.add_edge(a.n() + i, a.n() + j);
    return g;
}

TGraph add_isolated(const TGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("cannot add a negative number of vertices");
    TGraph out(g.n() + k);
    for (auto [i, j] : g.edges()) out.add_edge(i, j);
    return out;
}

// ---- structure ----

TGraph complement(const TGraph& g) {
    TGraph out(g.n());
    for (int i = 1; i <= g.n(); ++i)
        for (int j = i + 1; j <= g.n(); ++j)
            if (!g.has_edge(i, j)) out.add_edge(i, j);
    return out;
}

std::vector<Component> components(const TGraph& g) {
    std::vector<int> comp(g.n() + 1, -1);
    int ncomp = 0;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] == -1) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
        }
        ++ncomp;
    }
    std::vector<Component> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> labels;
        for (int v = 1; v <= g.n(); ++v)
            if (comp[v] == c) labels.push_back(v);
        std::vector<int> pos(g.n() + 1, 0);
        for (std::size_t k = 0; k < labels.size(); ++k) pos[labels[k]] = static_cast<int>(k) + 1;
        TGraph sub(static_cast<int>(labels.size()));
        for (auto [i, j] : g.edges())
            if (comp[i] == c && comp[j] == c) sub.add_edge(pos[i], pos[j]);
        out.push_back({std::move(sub), std::move(labels)});
    }
    return out;
}

StripResult strip_isolated(const TGraph& g) {
    std::vector<int> labels;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) > 0) labels.push_back(v);
    int isolated = g.n() - static_cast<int>(labels.size());
    if (labels.empty()) return {TGraph(0), isolated, {}}; // fully edgeless: empty core
    std::vector<int> pos(g.n() + 1, 0);
    for (std::size_t k = 0; k < labels.size(); ++k) pos[labels[k]] = static_cast<int>(k) + 1;
    TGraph sub(static_cast<int>(labels.size()));
    for (auto [i, j] : g.edges()) sub.add_edge(pos[i], pos[j]);
    return {std::move(sub), isolated, std::move(labels)};
}

std::optional<std::vector<int>> is_complete_multipartite(const TGraph& g) {
    // complement must be a disjoint union of cliques; part sizes are the
    // clique orders (an edgeless graph comes out as the single part [n])
    auto comps = components(complement(g));
    std::vector<int> parts;
    for (const auto& c : comps) {
        int k = c.graph.n();
        if (c.graph.edge_count() != k * (k - 1) / 2) return std::nullopt;
        parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

bool is_p4_free(const TGraph& g) {
    int n = g.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    int quad[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (g.has_edge(quad[x], quad[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    if (edges != 3) continue;
                    // 3 edges with max degree 2 and no isolated vertex = induced P4
                    bool path = true;
                    for (int x = 0; x < 4; ++x)
                        if (deg[x] == 0 || deg[x] == 3) path = false;
                    if (path) return false;
                }
    return true;
}

// ---- Laplacian ----

IntMatrix laplacian(const TGraph& g) {
    IntMatrix m(g.n());
    for (auto [i, j] : g.edges()) {
        m.at(i - 1, j - 1) = -1;
        m.at(j - 1, i - 1) = -1;
        m.at(i - 1, i - 1) += 1;
        m.at(j - 1, j - 1) += 1;
    }
    return m;
}

LaplacianReport is_laplacian_integral(const TGraph& g) {
    LaplacianReport rep;
    rep.charpoly = char_poly(laplacian(g));
    // Gershgorin-style bound per the module contract: |lambda| <= 2n
    auto split = integer_root_split(rep.charpoly, 2 * static_cast<std::int64_t>(g.n()));
    rep.integral = split.fully_split();
    rep.remainder = split.remainder;
    if (rep.integral)
        for (auto [root, mult] : split.roots) rep.spectrum[root] = mult;
    return rep;
}

// ---- edge-list text format ----

TGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    auto offset = [&]() -> std::size_t {
        auto pos = in.tellg();
        return pos == std::istringstream::pos_type(-1) ? text.size()
                                                       : static_cast<std::size_t>(pos);
    };
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"", offset());
    if (n < 1) throw ParseError("edge list: vertex count must be >= 1", 0);
    if (m < 0) throw ParseError("edge list: negative edge count", 0);
    TGraph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long i = 0, j = 0;
        if (!(in >> i >> j))
            throw ParseError("edge list: expected edge " + std::to_string(e + 1) + " of " +
                                 std::to_string(m),
                             offset());
        try {
            g.add_edge(static_cast<int>(i), static_cast<int>(j));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string("edge list: ") + ex.what(), offset());
        }
    }
    std::string trailing;
    if (in >> trailing)
        throw ParseError("edge list: trailing content \"" + trailing + "\"",
                         text.find(trailing));
    return g;
}

std::string emit_edge_list(const TGraph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

TGraph permuted(const TGraph& g, const Permutation& p) {
    if (p.n() != g.n()) throw std::invalid_argument("permuted: degree mismatch");
    TGraph out(g.n());
    for (auto [i, j] : g.edges()) out.add_edge(p.image_of(i), p.image_of(j));
    return out;
}

} // namespace cayspec
