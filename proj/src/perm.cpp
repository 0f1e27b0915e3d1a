#include "cayspec/perm.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cayspec {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> img(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = images[i];
        if (v < 1 || v > n) throw std::invalid_argument("image out of range: " + std::to_string(v));
        if (seen[v - 1]) throw std::invalid_argument("not a bijection: " + std::to_string(v) + " repeats");
        seen[v - 1] = true;
        img[i] = v - 1;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < n(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n())
        throw std::invalid_argument("compose: degrees differ (" + std::to_string(p.n()) +
                                    " vs " + std::to_string(q.n()) + ")");
    std::vector<int> img(p.n());
    for (int i = 0; i < p.n(); ++i) img[i] = q.img_[p.img_[i]];
    return Permutation(std::move(img));
}

Transposition::Transposition(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("transposition needs two distinct points");
    if (i < 1) throw std::invalid_argument("transposition point out of range");
}

Permutation Transposition::to_permutation(int n) const {
    if (j > n) throw std::invalid_argument("transposition exceeds degree");
    std::vector<int> images(n);
    for (int v = 1; v <= n; ++v) images[v - 1] = v;
    images[i - 1] = j;
    images[j - 1] = i;
    return Permutation::from_one_line(images);
}

IntMatrix permutation_matrix(const Permutation& p) {
    IntMatrix m(p.n());
    for (int i = 1; i <= p.n(); ++i) m.at(i - 1, p.image_of(i) - 1) = 1;
    return m;
}

std::vector<int> adjacent_factorization(const Transposition& t) {
    std::vector<int> word;
    word.reserve(2 * (t.j - t.i) - 1);
    for (int k = t.j - 1; k >= t.i; --k) word.push_back(k);
    for (int k = t.i + 1; k <= t.j - 1; ++k) word.push_back(k);
    return word;
}

} // namespace cayspec
