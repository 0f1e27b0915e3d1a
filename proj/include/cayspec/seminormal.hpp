#ifndef CAYSPEC_SEMINORMAL_HPP
#define CAYSPEC_SEMINORMAL_HPP

#include <cstdint>
#include <vector>

#include "cayspec/partition.hpp"
#include "cayspec/perm.hpp"
#include "cayspec/rational_matrix.hpp"
#include "cayspec/tableau.hpp"

namespace cayspec {

/*
 * Young's seminormal representation of S_n for one partition, over exact
 * rationals. Basis vectors are the standard tableaux in last-letter order.
 *
 * For the adjacent transposition s_k = (k,k+1) and a basis tableau t, let
 * d = content(k+1) - content(k) in t (the axial distance, never 0):
 *
 *   - column of t gets diagonal entry 1/d;
 *   - if |d| >= 2, the swap t' of k,k+1 in t is standard and the pair forms
 *     the block  [ 1/d     1 - 1/d^2 ]
 *                [ 1        -1/d     ]   (columns: earlier tableau first),
 *     which squares to the identity;
 *   - |d| = 1 means k,k+1 share a row (+1) or column (-1) and the entry is
 *     purely diagonal.
 *
 * Generator matrices are built eagerly in the constructor; instances are
 * immutable afterwards and safe to share across threads.
 */
class SeminormalRep {
public:
    explicit SeminormalRep(const Partition& alpha);

    const Partition& alpha() const { return alpha_; }
    int n() const { return alpha_.n(); }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<StandardTableau>& basis() const { return basis_; }

    // image of s_k = (k,k+1), 1 <= k <= n-1
    const RationalMatrix& generator(int k) const;

    // image of an arbitrary transposition, via the palindromic adjacent word
    RationalMatrix of_transposition(const Transposition& t) const;

    // sum of images over a set of transpositions (the block A_alpha)
    RationalMatrix sum_over(const std::vector<Transposition>& ts) const;

private:
    Partition alpha_;
    std::vector<StandardTableau> basis_;
    std::vector<RationalMatrix> gens_; // index k-1
};

// ---- free-function surface (each call builds the representation) ----

RationalMatrix seminormal_generator(const Partition& alpha, int k);
RationalMatrix rep_of_transposition(const Partition& alpha, const Transposition& t);
RationalMatrix rep_sum(const Partition& alpha, const std::vector<Transposition>& ts);

// chi^alpha((1,2)), from the trace of any generator; requires n >= 2
std::int64_t character_on_transposition(const Partition& alpha);

// q_alpha = n(n-1) * chi^alpha((1,2)) / (2 f_alpha). The quotient is always
// an integer (it is an eigenvalue of an integer matrix and rational); the
// division is verified and a failure raises InternalError, since it would
// mean the representation itself is wrong.
std::int64_t q_alpha(const Partition& alpha);

} // namespace cayspec

#endif
