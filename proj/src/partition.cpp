#include "cayspec/partition.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>

#include "cayspec/errors.hpp"

namespace cayspec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must be nonempty");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::int64_t Partition::dimension() const {
    // hook length formula: n! / prod(hooks); the division is exact
    mpz_class num = 1;
    for (int k = 2; k <= n_; ++k) num *= k;
    mpz_class den = 1;
    std::vector<int> collen(parts_[0], 0);
    for (int r = rows() - 1; r >= 0; --r)
        for (int c = 0; c < parts_[r]; ++c)
            if (collen[c] == 0) collen[c] = r + 1;
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c) {
            int arm = parts_[r] - c - 1;
            int leg = collen[c] - r - 1;
            den *= arm + leg + 1;
        }
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) throw InternalError("hook length formula: non-exact division");
    if (!q.fits_slong_p()) throw CapacityError("representation dimension overflows");
    return q.get_si();
}

std::int64_t Partition::content_sum() const {
    std::int64_t s = 0;
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c) s += c - r;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_[0], 0);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c) ++conj[c];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // reverse lexicographic: largest first part first
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace cayspec
