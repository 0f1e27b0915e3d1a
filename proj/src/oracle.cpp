#include "cayspec/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cayspec/errors.hpp"
#include "cayspec/integrality.hpp"

namespace cayspec {

namespace {

using Perm = std::array<std::uint8_t, 7>;

std::int64_t lehmer_rank(const Perm& p, int n, const std::vector<std::int64_t>& fact) {
    std::int64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * fact[n - 1 - i];
    }
    return rank;
}

} // namespace

OracleResult brute_force_integrality(int n, const std::vector<Transposition>& t_set, int trials,
                                     std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("oracle needs n >= 2");
    if (n > kMaxOracleN)
        throw CapacityError("oracle adjacency is n! x n!; capped at n = " +
                            std::to_string(kMaxOracleN));
    if (t_set.empty()) throw std::invalid_argument("oracle needs a nonempty T");
    if (trials < 1) throw std::invalid_argument("oracle needs trials >= 1");
    for (const auto& t : t_set)
        if (t.j > n) throw std::invalid_argument("transposition exceeds n");

    std::vector<std::int64_t> fact(n + 1, 1);
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
    std::int64_t order = fact[n];

    // vertices: all permutations in lexicographic order. g ~ h iff g h^{-1} in T;
    // the neighbors of g are the left translates tau*g, i.e. one-line notation
    // with positions i and j exchanged.
    std::vector<Perm> verts;
    verts.reserve(order);
    Perm p{};
    std::iota(p.begin(), p.begin() + n, std::uint8_t(0));
    do {
        verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));

    int deg = static_cast<int>(t_set.size());
    std::vector<std::int32_t> nbr(static_cast<std::size_t>(order) * deg);
    for (std::int64_t v = 0; v < order; ++v)
        for (int k = 0; k < deg; ++k) {
            Perm q = verts[v];
            std::swap(q[t_set[k].i - 1], q[t_set[k].j - 1]);
            nbr[static_cast<std::size_t>(v) * deg + k] =
                static_cast<std::int32_t>(lehmer_rank(q, n, fact));
        }

    OracleResult res;
    res.trials = trials;
    res.seed = seed;
    res.integral = true;

    std::mt19937_64 rng(seed);
    std::vector<mpz_class> w(order), next(order);
    for (int trial = 0; trial < trials; ++trial) {
        for (auto& x : w) x = static_cast<unsigned long>(rng() & 0xFFFF);
        // apply prod_{lambda} (A - lambda I); factors commute, order free
        for (std::int64_t lam = -deg; lam <= deg; ++lam) {
            for (std::int64_t v = 0; v < order; ++v) {
                mpz_class acc = 0;
                const std::int32_t* row = &nbr[static_cast<std::size_t>(v) * deg];
                for (int k = 0; k < deg; ++k) acc += w[row[k]];
                if (lam != 0) acc -= static_cast<long>(lam) * w[v];
                next[v] = std::move(acc);
            }
            w.swap(next);
        }
        for (const auto& x : w)
            if (x != 0) {
                mpz_class mag = abs(x);
                if (mag > res.certificate_norm) res.certificate_norm = mag;
            }
        if (res.certificate_norm != 0) {
            res.integral = false;
            return res; // a surviving vector is a deterministic certificate
        }
    }
    return res;
}

} // namespace cayspec
