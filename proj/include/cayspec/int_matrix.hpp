#ifndef CAYSPEC_INT_MATRIX_HPP
#define CAYSPEC_INT_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace cayspec {

// Dense square matrix with small integer entries (permutation matrices,
// Laplacians, sums of permutation matrices). Exact; no overflow at desk scale.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    static IntMatrix identity(int dim);

    int dim() const { return dim_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(std::int64_t c, IntMatrix a);

    std::vector<std::int64_t> row_sums() const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int dim_;
    std::vector<std::int64_t> a_;
};

} // namespace cayspec

#endif
