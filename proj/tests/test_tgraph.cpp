#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cayspec/errors.hpp"
#include "cayspec/tgraph.hpp"

using namespace cayspec;

TEST_CASE("from_edge_list: validation") {
    auto k2 = TGraph::from_edge_list(2, {{1, 2}});
    CHECK(k2.n() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(2, 1));

    CHECK_THROWS_AS(TGraph::from_edge_list(4, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(TGraph::from_edge_list(4, {{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(TGraph::from_edge_list(4, {{3, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(TGraph::from_edge_list(4, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(TGraph::from_edge_list(4, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("laplacian: fixed values") {
    auto l = laplacian(TGraph::from_edge_list(2, {{1, 2}}));
    CHECK(l.at(0, 0) == 1);
    CHECK(l.at(0, 1) == -1);
    CHECK(l.at(1, 0) == -1);
    CHECK(l.at(1, 1) == 1);
}

TEST_CASE("laplacian: symmetric, zero row sums") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        TGraph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        auto l = laplacian(g);
        for (auto s : l.row_sums()) CHECK(s == 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(l.at(i, j) == l.at(j, i));
    }
}

TEST_CASE("is_laplacian_integral: stars, paths, cycles") {
    auto star = is_laplacian_integral(star_graph(5));
    CHECK(star.integral);
    CHECK(star.spectrum == std::map<std::int64_t, int>{{0, 1}, {1, 3}, {5, 1}});

    auto p4 = is_laplacian_integral(TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK_FALSE(p4.integral);
    CHECK(p4.remainder == IntPolynomial({mpz_class(2), mpz_class(-4), mpz_class(1)})); // 2 +- sqrt 2

    auto c6 = is_laplacian_integral(cycle_graph(6));
    CHECK(c6.integral);
    CHECK(c6.spectrum == std::map<std::int64_t, int>{{0, 1}, {1, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("integral Laplacian spectra are nonnegative") {
    std::mt19937 rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        TGraph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        auto rep = is_laplacian_integral(g);
        if (rep.integral) {
            for (auto [lam, mult] : rep.spectrum) CHECK(lam >= 0);
            CHECK(rep.spectrum.count(0) == 1); // 0 is always an eigenvalue
        }
    }
}

TEST_CASE("strip_isolated") {
    auto g = add_isolated(TGraph::from_edge_list(2, {{1, 2}}), 3);
    auto s = strip_isolated(g);
    CHECK(s.isolated == 3);
    CHECK(s.graph.n() == 2);
    CHECK(s.graph.edge_count() == 1);
    CHECK(s.labels == std::vector<int>{1, 2});

    auto all_iso = strip_isolated(TGraph(4));
    CHECK(all_iso.isolated == 4);
    CHECK(all_iso.graph.n() == 0);
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 1 + static_cast<int>(rng() % 7);
        TGraph g(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("components partition the vertex set") {
    auto g = disjoint_union(complete_graph(3), complete_graph(3));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph == complete_graph(3));
    CHECK(comps[1].graph == complete_graph(3));
    CHECK(comps[0].labels == std::vector<int>{1, 2, 3});
    CHECK(comps[1].labels == std::vector<int>{4, 5, 6});
}

TEST_CASE("is_complete_multipartite") {
    CHECK(is_complete_multipartite(complete_multipartite({3, 2})) == std::vector<int>{3, 2});
    CHECK(is_complete_multipartite(complete_graph(4)) == std::vector<int>{1, 1, 1, 1});
    CHECK(is_complete_multipartite(TGraph(3)) == std::vector<int>{3}); // edgeless: one part
    CHECK_FALSE(is_complete_multipartite(TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(is_complete_multipartite(cycle_graph(5)));
}

TEST_CASE("is_p4_free") {
    CHECK_FALSE(is_p4_free(TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(is_p4_free(cycle_graph(5)));
    CHECK(is_p4_free(cycle_graph(4)));
    std::mt19937 rng(13);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<int> parts;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int c = 0; c < k; ++c) parts.push_back(1 + static_cast<int>(rng() % 3));
        CHECK(is_p4_free(complete_multipartite(parts)));
    }
}

TEST_CASE("family constructors compose as expected") {
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(complete_multipartite({1, 1, 1, 1}) == complete_graph(4));

    // (K_2 u (n-3)K_1) * K_1 at n = 5: center joined to everything, one extra edge
    auto g = join(complete_graph(1), add_isolated(complete_graph(2), 2));
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(2, 3)); // the K_2
    for (int v = 2; v <= 5; ++v) CHECK(g.has_edge(1, v));
    CHECK(g.is_connected());
    CHECK_FALSE(g.is_tree());
    CHECK(star_graph(4).is_tree());
}

TEST_CASE("edge list text round trip and errors") {
    auto g = TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK(emit_edge_list(g) == "4 3\n1 2\n2 3\n3 4\n");

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4 2\n1 2\n"), ParseError);        // missing edge
    CHECK_THROWS_AS(parse_edge_list("4 1\n1 5\n"), ParseError);        // out of range
    CHECK_THROWS_AS(parse_edge_list("4 2\n1 2\n1 2\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 2\nx"), ParseError);       // trailing

    try {
        parse_edge_list("4 1\n9 9\n");
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.offset() > 0);
    }
}

TEST_CASE("permuted preserves structure") {
    auto g = star_graph(5);
    auto p = Permutation::from_one_line({3, 1, 2, 5, 4});
    auto h = permuted(g, p);
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.degree(3) == 4); // image of the center
}
