#ifndef CAYSPEC_PARTITION_HPP
#define CAYSPEC_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cayspec {

// Weakly decreasing positive integers; indexes the irreducible
// representations of S_n for n = sum of parts.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int r) const { return parts_[r]; } // 0-based row

    // degree f_alpha of the irreducible representation (hook length formula);
    // equals the number of standard Young tableaux of this shape
    std::int64_t dimension() const;

    // sum of c - r over all cells (r,c); classical value of q_alpha
    std::int64_t content_sum() const;

    Partition conjugate() const;

    std::string to_string() const; // "(3,2,1)"

    bool operator==(const Partition& o) const = default;

private:
    std::vector<int> parts_;
    int n_;
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

} // namespace cayspec

#endif
