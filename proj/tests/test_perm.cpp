#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cayspec/perm.hpp"
#include "cayspec/tgraph.hpp"

using namespace cayspec;

TEST_CASE("compose: identity and involutions") {
    auto id = Permutation::identity(3);
    auto t12 = Transposition(1, 2).to_permutation(3);
    CHECK(compose(id, t12) == t12);
    CHECK(compose(t12, id) == t12);
    CHECK(compose(t12, t12) == id);
}

TEST_CASE("compose: apply-left-first convention") {
    auto t12 = Transposition(1, 2).to_permutation(3);
    auto t23 = Transposition(2, 3).to_permutation(3);
    auto r = compose(t12, t23); // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
    CHECK(r.image_of(1) == 3);
    CHECK(r.image_of(2) == 1);
    CHECK(r.image_of(3) == 2);
}

TEST_CASE("compose: mismatched degrees rejected") {
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                    std::invalid_argument);
}

TEST_CASE("from_one_line validates bijections") {
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("transposition normalization") {
    Transposition t(4, 2);
    CHECK(t.i == 2);
    CHECK(t.j == 4);
    CHECK(t == Transposition(2, 4));
    CHECK_THROWS_AS(Transposition(3, 3), std::invalid_argument);
}

TEST_CASE("permutation_matrix basics") {
    CHECK(permutation_matrix(Permutation::identity(3)) == IntMatrix::identity(3));

    auto m = permutation_matrix(Transposition(1, 2).to_permutation(2));
    IntMatrix swap2(2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(m == swap2);
}

TEST_CASE("sum of permutation matrices vs Laplacian, S_2") {
    // single transposition: P = I - L(K_2)
    auto p = permutation_matrix(Transposition(1, 2).to_permutation(2));
    auto l = laplacian(TGraph::from_edge_list(2, {{1, 2}}));
    CHECK(p == IntMatrix::identity(2) - l);
}

TEST_CASE("sum of permutation matrices vs Laplacian, random T") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5); // n in 2..6
        TGraph g(n);
        std::vector<Transposition> ts;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) {
                    g.add_edge(i, j);
                    ts.emplace_back(i, j);
                }
        IntMatrix sum(n);
        for (const auto& t : ts) sum += permutation_matrix(t.to_permutation(n));
        auto rhs = static_cast<std::int64_t>(ts.size()) * IntMatrix::identity(n) - laplacian(g);
        CHECK(sum == rhs);
    }
}

TEST_CASE("adjacent_factorization words") {
    CHECK(adjacent_factorization(Transposition(3, 4)) == std::vector<int>{3});
    CHECK(adjacent_factorization(Transposition(1, 3)) == std::vector<int>{2, 1, 2});
    CHECK(adjacent_factorization(Transposition(1, 4)) == std::vector<int>{3, 2, 1, 2, 3});
}

TEST_CASE("adjacent_factorization reproduces its transposition") {
    for (int n = 2; n <= 7; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Transposition t(i, j);
                auto word = adjacent_factorization(t);
                CHECK(word.size() == 2 * static_cast<std::size_t>(j - i) - 1);
                auto prod = Permutation::identity(n);
                for (int k : word) prod = compose(prod, Transposition(k, k + 1).to_permutation(n));
                CHECK(prod == t.to_permutation(n));
            }
}

TEST_CASE("every transposition squares to the identity") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto p = Transposition(i, j).to_permutation(n);
                CHECK(compose(p, p).is_identity());
            }
}
