#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cayspec/char_poly.hpp"
#include "cayspec/errors.hpp"
#include "cayspec/int_polynomial.hpp"
#include "cayspec/perm.hpp"
#include "cayspec/rational_matrix.hpp"
#include "cayspec/seminormal.hpp"
#include "cayspec/tgraph.hpp"

using namespace cayspec;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> c;
    for (long x : ascending) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

// p evaluated at the matrix itself (Horner)
RationalMatrix eval_at(const IntPolynomial& p, const RationalMatrix& m) {
    int d = m.dim();
    RationalMatrix acc(d);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        Rat c(p.coeff(k).get_str());
        acc += c * RationalMatrix::identity(d);
    }
    return acc;
}

} // namespace

TEST_CASE("char_poly: small fixed matrices") {
    CHECK(char_poly(IntMatrix::identity(2)) == poly({1, -2, 1}));

    IntMatrix swap2(2);
    swap2.at(0, 1) = 1;
    swap2.at(1, 0) = 1;
    CHECK(char_poly(swap2) == poly({-1, 0, 1}));
}

TEST_CASE("char_poly: Cayley-Hamilton on random rational matrices") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        int d = 1 + static_cast<int>(rng() % 6);
        RationalMatrix m(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m.at(i, j) = static_cast<long>(rng() % 9) - 4;
        // integer entries keep the characteristic polynomial in Z[x]
        auto p = char_poly(m);
        CHECK(p.degree() == d);
        CHECK(eval_at(p, m).is_zero());
    }
}

TEST_CASE("integer_root_split: fixed examples") {
    auto s1 = integer_root_split(poly({-1, 0, 1}), 1); // x^2 - 1
    CHECK(s1.roots == std::map<std::int64_t, int>{{-1, 1}, {1, 1}});
    CHECK(s1.remainder == IntPolynomial::one());
    CHECK(s1.fully_split());

    auto p2 = poly({-12, 2, 1}); // x^2 + 2x - 12, roots -1 +- sqrt(13)
    auto s2 = integer_root_split(p2, 12);
    CHECK(s2.roots.empty());
    CHECK(s2.remainder == p2);
    CHECK_FALSE(s2.fully_split());
}

TEST_CASE("integer_root_split: C6 Laplacian spectrum") {
    auto p = char_poly(laplacian(cycle_graph(6)));
    auto s = integer_root_split(p, 12);
    CHECK(s.fully_split());
    CHECK(s.roots == std::map<std::int64_t, int>{{0, 1}, {1, 2}, {3, 2}, {4, 1}});
}

TEST_CASE("integer_root_split: reconstruction identity on random polynomials") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        int d = 1 + static_cast<int>(rng() % 8);
        std::vector<mpz_class> c(d + 1);
        for (int k = 0; k < d; ++k) c[k] = static_cast<long>(rng() % 19) - 9;
        c[d] = 1;
        IntPolynomial p(c);
        auto s = integer_root_split(p, 25);
        IntPolynomial prod = s.remainder;
        for (auto [root, mult] : s.roots)
            for (int m = 0; m < mult; ++m)
                prod = prod * IntPolynomial({mpz_class(-root), mpz_class(1)});
        CHECK(prod == p);
        // and the remainder really has no integer roots in a wide range
        for (std::int64_t cand = -30; cand <= 30; ++cand)
            if (s.remainder.degree() > 0) CHECK(s.remainder.evaluate(cand) != 0);
    }
}

TEST_CASE("polynomial validation and printing") {
    CHECK_THROWS_AS(IntPolynomial({mpz_class(1), mpz_class(2)}), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial(std::vector<mpz_class>{}), std::invalid_argument);
    CHECK(poly({0, -12, 0, 2, 1}).to_string() == "x^4 + 2x^3 - 12x");
    CHECK(IntPolynomial::one().to_string() == "1");
    CHECK(poly({-1, 1}).to_string() == "x - 1");
}

TEST_CASE("divide_linear rejects non-roots") {
    CHECK_THROWS_AS(poly({1, 0, 1}).divide_linear(1), InternalError);
}

TEST_CASE("char_poly refuses to round non-integer coefficients") {
    RationalMatrix m(1);
    m.at(0, 0) = Rat(1, 2);
    CHECK_THROWS_AS(char_poly(m), InternalError);
}

TEST_CASE("matrix arithmetic basics") {
    RationalMatrix a(2);
    a.at(0, 0) = Rat(1, 2);
    a.at(1, 0) = 3;
    CHECK(a + RationalMatrix(2) == a);

    auto p = RationalMatrix::from_int(permutation_matrix(Transposition(1, 2).to_permutation(3)));
    CHECK((p * p).is_identity());

    CHECK_THROWS_AS(a + RationalMatrix(3), std::invalid_argument);
    CHECK_THROWS_AS(a * RationalMatrix(3), std::invalid_argument);
    CHECK_THROWS_AS(a.apply(std::vector<Rat>(3, Rat(0))), std::invalid_argument);
}

TEST_CASE("row sums of a permutation-matrix sum are |T|") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        std::vector<Transposition> ts;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (rng() % 2) ts.emplace_back(i, j);
        if (ts.empty()) continue;
        IntMatrix sum(n);
        for (const auto& t : ts) sum += permutation_matrix(t.to_permutation(n));
        for (auto s : sum.row_sums()) CHECK(s == static_cast<std::int64_t>(ts.size()));
    }
}

TEST_CASE("x^{d-1} coefficient of a block equals -|T| chi") {
    for (int n = 4; n <= 5; ++n) {
        std::vector<Transposition> path;
        for (int i = 1; i < n; ++i) path.emplace_back(i, i + 1);
        for (const auto& alpha : partitions_of(n)) {
            auto p = char_poly(rep_sum(alpha, path));
            mpz_class expect = -static_cast<long>(path.size()) *
                               static_cast<long>(character_on_transposition(alpha));
            CHECK(p.coeff(p.degree() - 1) == expect);
        }
    }
}
