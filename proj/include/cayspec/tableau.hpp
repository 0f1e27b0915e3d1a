#ifndef CAYSPEC_TABLEAU_HPP
#define CAYSPEC_TABLEAU_HPP

#include <utility>
#include <vector>

#include "cayspec/partition.hpp"

namespace cayspec {

// Standard Young tableau: 1..n fill a partition shape, strictly increasing
// along rows and down columns. Stored as entry -> cell.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::pair<int, int>> cell_of_entry);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int row_of(int entry) const { return cells_[entry - 1].first; }  // 0-based
    int col_of(int entry) const { return cells_[entry - 1].second; } // 0-based
    int content_of(int entry) const { return col_of(entry) - row_of(entry); }

    // tableau with entries k and k+1 exchanged; standard iff they are in
    // neither the same row nor the same column
    StandardTableau swapped(int k) const;

    bool operator==(const StandardTableau& o) const = default;

    std::string to_string() const; // rows separated by '/', e.g. "12/3"

private:
    Partition shape_;
    std::vector<std::pair<int, int>> cells_;
};

// All SYT of the given shape in last-letter order (the tableau whose largest
// entries sit in the lowest possible rows comes first; the row-reading
// tableau is index 0). This order defines the representation basis and is
// stable across runs.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

} // namespace cayspec

#endif
