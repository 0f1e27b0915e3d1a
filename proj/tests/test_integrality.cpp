#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cayspec/enumerate.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/integrality.hpp"
#include "cayspec/oracle.hpp"

using namespace cayspec;

namespace {

std::vector<Transposition> all_transpositions(int n) {
    std::vector<Transposition> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ts.emplace_back(i, j);
    return ts;
}

std::vector<Transposition> edges_of(const TGraph& g) { return g.transpositions(); }

using Spec = std::map<std::int64_t, std::int64_t>;

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void check_spectrum_invariants(const SpectrumReport& rep) {
    REQUIRE(rep.integral);
    std::int64_t count = 0, sum = 0, sumsq = 0;
    std::int64_t t = static_cast<std::int64_t>(rep.t_set.size());
    for (auto [lam, mult] : rep.spectrum) {
        count += mult;
        sum += lam * mult;
        sumsq += lam * lam * mult;
    }
    CHECK(count == factorial(rep.n));
    CHECK(sum == 0);
    CHECK(sumsq == factorial(rep.n) * t);
    CHECK(rep.spectrum.rbegin()->first == t);
    CHECK(rep.spectrum.begin()->first == -t);
}

IntPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> c;
    for (long x : ascending) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("cayley_spectrum: the star on 3 points is the 6-cycle") {
    auto rep = cayley_spectrum(3, {Transposition(1, 2), Transposition(2, 3)});
    CHECK(rep.integral);
    CHECK(rep.spectrum == Spec{{2, 1}, {1, 2}, {-1, 2}, {-2, 1}});
    check_spectrum_invariants(rep);
}

TEST_CASE("cayley_spectrum: all transpositions of S_3 give K_{3,3}") {
    auto rep = cayley_spectrum(3, all_transpositions(3));
    CHECK(rep.integral);
    CHECK(rep.spectrum == Spec{{3, 1}, {0, 4}, {-3, 1}});
    check_spectrum_invariants(rep);
}

TEST_CASE("cayley_spectrum: frozen spectra on 4 points") {
    CHECK(cayley_spectrum(4, all_transpositions(4)).spectrum ==
          Spec{{6, 1}, {2, 9}, {0, 4}, {-2, 9}, {-6, 1}});

    // diamond K_2 * 2K_1
    auto diamond = TGraph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(cayley_spectrum(4, edges_of(diamond)).spectrum ==
          Spec{{5, 1}, {3, 3}, {1, 8}, {-1, 8}, {-3, 3}, {-5, 1}});

    // paw (K_2 u K_1) * K_1
    auto pawg = TGraph::from_edge_list(4, {{2, 3}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(cayley_spectrum(4, edges_of(pawg)).spectrum ==
          Spec{{4, 1}, {3, 3}, {1, 5}, {0, 6}, {-1, 5}, {-3, 3}, {-4, 1}});

    CHECK(cayley_spectrum(4, edges_of(cycle_graph(4))).spectrum ==
          Spec{{4, 1}, {2, 8}, {0, 6}, {-2, 8}, {-4, 1}});
}

TEST_CASE("cayley_spectrum: K_{2,3} on 5 points") {
    auto rep = cayley_spectrum(5, edges_of(complete_multipartite({3, 2})));
    CHECK(rep.integral);
    CHECK(rep.spectrum == Spec{{6, 1},
                               {4, 8},
                               {3, 14},
                               {2, 11},
                               {1, 26},
                               {-1, 26},
                               {-2, 11},
                               {-3, 14},
                               {-4, 8},
                               {-6, 1}});
    check_spectrum_invariants(rep);
}

TEST_CASE("cayley_spectrum: C6 blocks pin the five-dimensional witnesses") {
    auto rep = cayley_spectrum(6, edges_of(cycle_graph(6)));
    CHECK_FALSE(rep.integral);

    // both 5-dimensional blocks, frozen from two independent constructions
    bool saw33 = false, saw222 = false;
    for (const auto& b : rep.per_partition) {
        if (b.alpha == Partition({3, 3})) {
            saw33 = true;
            CHECK(b.charpoly == poly({0, -48, 40, 0, -6, 1})); // x(x-2)^2(x^2-2x-12)
            CHECK(b.remainder == poly({-12, -2, 1}));
            CHECK(b.integer_roots == std::map<std::int64_t, int>{{0, 1}, {2, 2}});
        }
        if (b.alpha == Partition({2, 2, 2})) {
            saw222 = true;
            CHECK(b.charpoly == poly({0, -48, -40, 0, 6, 1})); // x(x+2)^2(x^2+2x-12)
            CHECK(b.remainder == poly({-12, 2, 1}));
            CHECK(b.integer_roots == std::map<std::int64_t, int>{{-2, 2}, {0, 1}});
        }
    }
    CHECK(saw33);
    CHECK(saw222);

    // witness: the smallest failing block, earliest partition on ties
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->alpha == Partition({3, 3}));
    CHECK(rep.witness->factor == poly({-12, -2, 1}));
}

TEST_CASE("cayley_spectrum: validation and capacity") {
    CHECK_THROWS_AS(cayley_spectrum(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(cayley_spectrum(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(cayley_spectrum(3, {Transposition(1, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(cayley_spectrum(3, {Transposition(1, 2), Transposition(2, 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cayley_spectrum(9, {Transposition(1, 2)}), CapacityError);
}

TEST_CASE("is_integral: decision paths") {
    auto p4 = is_integral(4, edges_of(TGraph::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}})));
    CHECK_FALSE(p4.integral);
    CHECK(p4.path == DecisionPath::LaplacianPrefilterFail);

    auto k23 = is_integral(5, edges_of(complete_multipartite({3, 2})));
    CHECK(k23.integral);
    CHECK(k23.path == DecisionPath::GcmSufficient);

    auto c6 = is_integral(6, edges_of(cycle_graph(6)));
    CHECK_FALSE(c6.integral);
    CHECK(c6.path == DecisionPath::FullRepresentation);
    CHECK(c6.laplacian->integral); // passed the prefilter, failed spectrally
}

TEST_CASE("is_integral: empty T is integral by convention") {
    auto v = is_integral(4, {});
    CHECK(v.integral);
    CHECK(v.path == DecisionPath::GcmSufficient);

    CHECK(is_integral(1, {}).integral); // single point: S_1, one-vertex Cayley graph
    CHECK_THROWS_AS(is_integral(0, {}), std::invalid_argument);
}

TEST_CASE("is_integral: isolated vertices are stripped") {
    // star on {1..4} inside n = 6
    std::vector<Transposition> ts{Transposition(1, 2), Transposition(1, 3), Transposition(1, 4)};
    auto v = is_integral(6, ts);
    CHECK(v.integral);
    CHECK(v.isolated == 2);
    CHECK(v.reduced_n == 4);
}

TEST_CASE("is_integral: force_full keeps the staged path and attaches spectra") {
    PipelineOptions full;
    full.force_full = true;

    auto star = is_integral(5, edges_of(star_graph(5)), full);
    CHECK(star.integral);
    CHECK(star.path == DecisionPath::GcmSufficient);
    REQUIRE(star.spectrum.has_value());
    CHECK(star.spectrum->integral);

    auto c5 = is_integral(5, edges_of(cycle_graph(5)), full);
    CHECK_FALSE(c5.integral);
    CHECK(c5.path == DecisionPath::LaplacianPrefilterFail);
    REQUIRE(c5.spectrum.has_value());
    CHECK_FALSE(c5.spectrum->integral);
}

TEST_CASE("parallel and serial runs produce identical reports") {
    auto ts = edges_of(cycle_graph(6));
    auto serial = cayley_spectrum(6, ts, 1);
    auto parallel = cayley_spectrum(6, ts, 4);
    CHECK(serial == parallel);
}

TEST_CASE("complete_graph_spectrum: q_alpha multiset equals the block pipeline") {
    CHECK(complete_graph_spectrum(2) == Spec{{1, 1}, {-1, 1}});
    CHECK(complete_graph_spectrum(3) == Spec{{3, 1}, {0, 4}, {-3, 1}});
    for (int n = 3; n <= 5; ++n) {
        auto rep = cayley_spectrum(n, all_transpositions(n));
        REQUIRE(rep.integral);
        CHECK(complete_graph_spectrum(n) == rep.spectrum);
    }
}

TEST_CASE("theorem-level consistency on every connected class with <= 4 vertices") {
    for (int v = 2; v <= 4; ++v)
        for (const auto& cls : connected_graphs_up_to_iso(v)) {
            auto ts = edges_of(cls.graph);
            auto verdict = is_integral(v, ts);
            // necessary condition
            if (verdict.integral) CHECK(is_laplacian_integral(cls.graph).integral);
            // sufficient condition is never contradicted by the blocks
            PipelineOptions full;
            full.force_full = true;
            CHECK_NOTHROW(is_integral(v, ts, full));
            // oracle agreement
            auto oracle = brute_force_integrality(v, ts, 3, 12345);
            CHECK(oracle.integral == verdict.integral);
        }
}

TEST_CASE("join additivity over split supports (exhaustive, n = 4, 5)") {
    // T = T1 u T2 u all cross pairs between the supports; when Cay(S_n, T1)
    // is integral, integrality of T must coincide with integrality of T2
    for (int n = 4; n <= 5; ++n) {
        auto spectral_integral = [&](const std::vector<Transposition>& ts) {
            if (ts.empty()) return true;
            return cayley_spectrum(n, ts).integral;
        };
        for (std::uint32_t amask = 1; amask < (std::uint32_t(1) << n) - 1; ++amask) {
            std::vector<int> a, b;
            for (int v = 1; v <= n; ++v) ((amask >> (v - 1)) & 1 ? a : b).push_back(v);
            if (a.size() > b.size()) continue; // unordered split
            std::vector<std::pair<int, int>> apairs, bpairs;
            for (std::size_t x = 0; x < a.size(); ++x)
                for (std::size_t y = x + 1; y < a.size(); ++y) apairs.push_back({a[x], a[y]});
            for (std::size_t x = 0; x < b.size(); ++x)
                for (std::size_t y = x + 1; y < b.size(); ++y) bpairs.push_back({b[x], b[y]});
            for (std::uint32_t am = 0; am < (std::uint32_t(1) << apairs.size()); ++am)
                for (std::uint32_t bm = 0; bm < (std::uint32_t(1) << bpairs.size()); ++bm) {
                    std::vector<Transposition> t1, t2, t;
                    for (std::size_t k = 0; k < apairs.size(); ++k)
                        if ((am >> k) & 1) t1.emplace_back(apairs[k].first, apairs[k].second);
                    for (std::size_t k = 0; k < bpairs.size(); ++k)
                        if ((bm >> k) & 1) t2.emplace_back(bpairs[k].first, bpairs[k].second);
                    if (!spectral_integral(t1)) continue;
                    t = t1;
                    t.insert(t.end(), t2.begin(), t2.end());
                    for (int u : a)
                        for (int w : b) t.emplace_back(u, w);
                    CHECK(spectral_integral(t) == spectral_integral(t2));
                }
        }
    }
}
