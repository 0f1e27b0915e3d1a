#ifndef CAYSPEC_RATIONAL_MATRIX_HPP
#define CAYSPEC_RATIONAL_MATRIX_HPP

#include <gmpxx.h>

#include <vector>

#include "cayspec/int_matrix.hpp"

namespace cayspec {

using Int = mpz_class;
using Rat = mpq_class;

// Dense square matrix over exact rationals. Entries are kept canonicalized
// by gmpxx; dimensions stay small (f_alpha <= 90 at the n <= 8 cap).
class RationalMatrix {
public:
    explicit RationalMatrix(int dim); // zero matrix
    static RationalMatrix identity(int dim);
    static RationalMatrix from_int(const IntMatrix& m);

    int dim() const { return dim_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    Rat trace() const;
    bool is_identity() const;
    bool is_zero() const;

    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rat& c, RationalMatrix a);

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    bool operator==(const RationalMatrix& o) const;

private:
    int dim_;
    std::vector<Rat> a_;
};

} // namespace cayspec

#endif
