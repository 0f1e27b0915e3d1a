#ifndef CAYSPEC_CHAR_POLY_HPP
#define CAYSPEC_CHAR_POLY_HPP

#include "cayspec/int_polynomial.hpp"
#include "cayspec/rational_matrix.hpp"

namespace cayspec {

/*
 * Exact characteristic polynomial det(xI - M) by Faddeev-LeVerrier:
 *
 *   N_1 = M,  c_1 = -tr(N_1)
 *   N_k = M (N_{k-1} + c_{k-1} I),  c_k = -tr(N_k) / k
 *
 * giving x^d + c_1 x^{d-1} + ... + c_d. Divisions are only by 1..d, exact
 * over rationals. O(d^4) ring operations; fine for d <= 90. A fraction-free
 * Hessenberg variant is the documented fallback if this ever dominates a
 * profile.
 *
 * Every matrix this project feeds in has algebraic-integer eigenvalues, so a
 * monic char poly with rational coefficients must have integer coefficients;
 * a non-integer coefficient is raised as InternalError, never rounded.
 */
IntPolynomial char_poly(const RationalMatrix& m);

IntPolynomial char_poly(const IntMatrix& m);

} // namespace cayspec

#endif
