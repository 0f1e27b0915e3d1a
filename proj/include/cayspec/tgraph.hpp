#ifndef CAYSPEC_TGRAPH_HPP
#define CAYSPEC_TGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayspec/int_matrix.hpp"
#include "cayspec/int_polynomial.hpp"
#include "cayspec/perm.hpp"

namespace cayspec {

// Simple undirected graph on vertex set [n] = {1,...,n}. For a transposition
// set T, this is the graph G_T: {i,j} is an edge iff (i,j) is in T.
class TGraph {
public:
    explicit TGraph(int n) : n_(n) {} // n = 0 allowed (empty core after stripping)
    // validates range, rejects loops and duplicates
    static TGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);
    static TGraph from_transpositions(int n, const std::vector<Transposition>& ts);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; } // sorted, i<j
    std::vector<Transposition> transpositions() const;

    bool has_edge(int i, int j) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    void add_edge(int i, int j); // throws on loop/out-of-range/duplicate

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

    bool operator==(const TGraph& o) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// ---- named families ----
TGraph cycle_graph(int m);                                  // C_m, m >= 3
TGraph star_graph(int n);                                   // K_{1,n-1} on n vertices
TGraph complete_graph(int n);                               // K_n
TGraph complete_multipartite(const std::vector<int>& parts);
TGraph join(const TGraph& a, const TGraph& b);              // all cross edges added
TGraph disjoint_union(const TGraph& a, const TGraph& b);
TGraph add_isolated(const TGraph& g, int k);

// ---- structure ----
TGraph complement(const TGraph& g);

struct Component {
    TGraph graph;                 // relabeled to [k]
    std::vector<int> labels;      // labels[i-1] = original label of vertex i
};
std::vector<Component> components(const TGraph& g);

struct StripResult {
    TGraph graph;                 // induced on non-isolated vertices, relabeled to [m]
    int isolated;                 // how many vertices were dropped
    std::vector<int> labels;      // original labels of the kept vertices
};
StripResult strip_isolated(const TGraph& g);

// parts sorted descending iff the complement is a disjoint union of cliques;
// an edgeless graph on m vertices is the one-part case [m]
std::optional<std::vector<int>> is_complete_multipartite(const TGraph& g);

// no induced path on four vertices (checked over all 4-subsets; desk scale)
bool is_p4_free(const TGraph& g);

// ---- Laplacian ----
IntMatrix laplacian(const TGraph& g); // D - A

struct LaplacianReport {
    bool integral = false;
    std::map<std::int64_t, int> spectrum;                  // when integral
    IntPolynomial remainder{IntPolynomial::one()};         // rootless factor otherwise
    IntPolynomial charpoly{IntPolynomial::one()};
};
LaplacianReport is_laplacian_integral(const TGraph& g);

// ---- edge-list text format: header "n m", then m lines "i j" (1-based) ----
TGraph parse_edge_list(const std::string& text);
std::string emit_edge_list(const TGraph& g);

// relabeled copy: vertex v of the result is vertex p.image_of(v)... inverse
// convention documented in the implementation; used by canonicalization/tests
TGraph permuted(const TGraph& g, const Permutation& p);

} // namespace cayspec

#endif
