#ifndef CAYSPEC_PERM_HPP
#define CAYSPEC_PERM_HPP

#include <vector>

#include "cayspec/int_matrix.hpp"

namespace cayspec {

// Permutation of [n] = {1,...,n} in one-line notation. All public indices are
// 1-based; storage is 0-based and never leaks.
class Permutation {
public:
    static Permutation identity(int n);
    // images[i-1] = image of i; must be a bijection of [n]
    static Permutation from_one_line(const std::vector<int>& images);

    int n() const { return static_cast<int>(img_.size()); }
    int image_of(int i) const { return img_[i - 1] + 1; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const = default;

private:
    explicit Permutation(std::vector<int> img0) : img_(std::move(img0)) {}
    std::vector<int> img_; // 0-based images
    friend Permutation compose(const Permutation&, const Permutation&);
};

// Unordered pair (i,j), i < j after normalization; (j,i) denotes the same element.
struct Transposition {
    int i;
    int j;

    Transposition(int a, int b);
    Permutation to_permutation(int n) const;

    bool operator==(const Transposition& o) const = default;
    bool operator<(const Transposition& o) const {
        return i != o.i ? i < o.i : j < o.j;
    }
};

// Apply p, then q: i^(pq) = (i^p)^q. This order is fixed project-wide.
Permutation compose(const Permutation& p, const Permutation& q);

// Entry (i,j) = 1 iff i^p = j.
IntMatrix permutation_matrix(const Permutation& p);

// Word [k1,k2,...] of adjacent-transposition indices with s_{k1}∘s_{k2}∘... = (i,j).
// Palindromic, length 2(j-i)-1: [j-1, j-2, ..., i, ..., j-2, j-1].
std::vector<int> adjacent_factorization(const Transposition& t);

} // namespace cayspec

#endif
