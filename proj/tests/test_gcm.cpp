#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayspec/canonical.hpp"
#include "cayspec/enumerate.hpp"
#include "cayspec/gcm.hpp"
#include "cayspec/tgraph.hpp"

using namespace cayspec;

namespace {

TGraph paw() { return TGraph::from_edge_list(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}); }

} // namespace

TEST_CASE("stars are generalized complete multipartite of type 1") {
    for (int n = 3; n <= 7; ++n) {
        auto tree = gcm_decompose(star_graph(n));
        REQUIRE(tree.has_value());
        CHECK(tree->type_number == 1);
        CHECK(reconstruct(*tree, n) == star_graph(n));
    }
}

TEST_CASE("P4 admits no decomposition") {
    CHECK_FALSE(gcm_decompose(TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("C5 and C6 admit no decomposition") {
    CHECK_FALSE(gcm_decompose(cycle_graph(5)));
    CHECK_FALSE(gcm_decompose(cycle_graph(6)));
}

TEST_CASE("(K_{1,2} u K_2) * K_1 decomposes with type 1") {
    auto g = join(complete_graph(1), disjoint_union(star_graph(3), complete_graph(2)));
    auto tree = gcm_decompose(g);
    REQUIRE(tree.has_value());
    CHECK(tree->type_number == 1);
    CHECK(reconstruct(*tree, g.n()) == g);
}

TEST_CASE("edgeless graphs are trivially type 1") {
    auto tree = gcm_decompose(TGraph(4));
    REQUIRE(tree.has_value());
    CHECK(tree->type_number == 1);
    CHECK(tree->isolated == 4);
    CHECK(reconstruct(*tree, 4) == TGraph(4));
}

TEST_CASE("paw is type 1; K_1 * (paw u K_2) is type 2") {
    auto ptree = gcm_decompose(paw());
    REQUIRE(ptree.has_value());
    CHECK(ptree->type_number == 1);

    auto g = join(complete_graph(1), disjoint_union(paw(), complete_graph(2)));
    REQUIRE(g.n() == 7);
    auto tree = gcm_decompose(g);
    REQUIRE(tree.has_value());
    CHECK(tree->type_number == 2);
    CHECK(reconstruct(*tree, 7) == g);
}

TEST_CASE("a union with a non-multipartite component is not a weakly join") {
    // paw u K_2 is P4-free but its non-isolated part is not a join
    auto g = disjoint_union(paw(), complete_graph(2));
    CHECK(is_p4_free(g));
    CHECK_FALSE(gcm_decompose(g));
}

TEST_CASE("isolated vertices are recorded and do not affect the verdict") {
    auto g = add_isolated(star_graph(4), 2);
    auto tree = gcm_decompose(g);
    REQUIRE(tree.has_value());
    CHECK(tree->isolated == 2);
    CHECK(tree->type_number == 1);
    CHECK(reconstruct(*tree, 6) == g);
}

TEST_CASE("exhaustive sweep over all labeled graphs on <= 6 vertices") {
    // decomposition present => exact reconstruction, Laplacian integrality,
    // and P4-freeness; the converse (P4-free => present) holds empirically
    // for every *connected* graph at this scale but not for disconnected
    // ones (see the paw u K_2 case above)
    long long present = 0, p4free_connected = 0, present_connected = 0;
    for (int n = 1; n <= 6; ++n) {
        int nbits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << nbits); ++mask) {
            TGraph g = detail::graph_from_mask(n, mask);
            auto tree = gcm_decompose(g);
            bool connected = g.is_connected();
            if (tree) {
                ++present;
                CHECK(reconstruct(*tree, n) == g);
                CHECK(is_p4_free(g));
                CHECK(is_laplacian_integral(g).integral);
            }
            if (connected && is_p4_free(g)) ++p4free_connected;
            if (connected && tree) ++present_connected;
        }
    }
    CHECK(present > 0);
    // empirical equivalence on connected graphs (exercised, not assumed)
    CHECK(present_connected == p4free_connected);
    MESSAGE("gcm-present graphs on <= 6 vertices (labeled): " << present);
}

TEST_CASE("connected 7-vertex classes: decomposition matches P4-freeness") {
    auto classes = connected_graphs_up_to_iso(7);
    CHECK(classes.size() == 853);
    int agree = 0;
    for (const auto& cls : classes) {
        auto tree = gcm_decompose(cls.graph);
        if (tree) {
            CHECK(reconstruct(*tree, 7) == cls.graph);
            CHECK(is_p4_free(cls.graph));
        }
        if (tree.has_value() == is_p4_free(cls.graph)) ++agree;
    }
    CHECK(agree == 853);
}
