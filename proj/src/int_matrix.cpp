#include "cayspec/int_matrix.hpp"

#include <stdexcept>

namespace cayspec {

IntMatrix::IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix difference: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    int d = a.dim_;
    IntMatrix c(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < d; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator*(std::int64_t c, IntMatrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
}

std::vector<std::int64_t> IntMatrix::row_sums() const {
    std::vector<std::int64_t> s(dim_, 0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s[i] += at(i, j);
    return s;
}

} // namespace cayspec
