#ifndef CAYSPEC_ORACLE_HPP
#define CAYSPEC_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cayspec/perm.hpp"

namespace cayspec {

struct OracleResult {
    bool integral = false;
    int trials = 0;
    std::uint64_t seed = 0;
    // L-infinity norm of the first non-annihilated vector; a nonzero value
    // certifies non-integrality deterministically
    mpz_class certificate_norm = 0;
};

/*
 * Annihilating-product oracle, independent of the representation pipeline.
 *
 * Builds the n! x n! adjacency of Cay(S_n, T) implicitly (g ~ h iff
 * g h^{-1} in T) and tests whether prod_{lambda=-|T|}^{|T|} (A - lambda I)
 * kills `trials` pseudo-random integer vectors (entries in [0, 2^16)),
 * exactly over arbitrary-precision integers. All eigenvalues lie in
 * [-|T|, |T|] by regularity, so:
 *   - a surviving nonzero vector certifies a non-integer eigenvalue;
 *   - annihilation of every trial vector certifies integrality up to the
 *     (negligible) chance that all trials sat inside a proper invariant
 *     subspace.
 * Deterministic for a fixed seed. n <= 7.
 */
OracleResult brute_force_integrality(int n, const std::vector<Transposition>& t_set,
                                     int trials = 3, std::uint64_t seed = 1);

} // namespace cayspec

#endif
