#include "cayspec/rational_matrix.hpp"

#include <stdexcept>

namespace cayspec {

RationalMatrix::RationalMatrix(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, Rat(0)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

RationalMatrix RationalMatrix::identity(int dim) {
    RationalMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& src) {
    RationalMatrix m(src.dim());
    for (int i = 0; i < src.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j)
            if (src.at(i, j) != 0) m.at(i, j) = static_cast<long>(src.at(i, j));
    return m;
}

Rat RationalMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool RationalMatrix::is_identity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix difference: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    int d = a.dim_;
    RationalMatrix c(d);
    Rat tmp;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < d; ++j) {
                const Rat& bkj = b.at(k, j);
                if (bkj == 0) continue;
                tmp = aik * bkj;
                c.at(i, j) += tmp;
            }
        }
    return c;
}

RationalMatrix operator*(const Rat& c, RationalMatrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("matrix-vector: dimension mismatch");
    std::vector<Rat> out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

} // namespace cayspec
