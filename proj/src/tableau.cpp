#include "cayspec/tableau.hpp"

#include <stdexcept>

namespace cayspec {

StandardTableau::StandardTableau(Partition shape, std::vector<std::pair<int, int>> cell_of_entry)
    : shape_(std::move(shape)), cells_(std::move(cell_of_entry)) {
    if (static_cast<int>(cells_.size()) != shape_.n())
        throw std::invalid_argument("tableau: wrong number of entries");
}

StandardTableau StandardTableau::swapped(int k) const {
    auto cells = cells_;
    std::swap(cells[k - 1], cells[k]);
    return StandardTableau(shape_, std::move(cells));
}

std::string StandardTableau::to_string() const {
    std::vector<std::vector<int>> rows(shape_.rows());
    for (int r = 0; r < shape_.rows(); ++r) rows[r].resize(shape_.part(r));
    for (int e = 1; e <= n(); ++e) rows[row_of(e)][col_of(e)] = e;
    std::string s;
    for (int r = 0; r < shape_.rows(); ++r) {
        if (r) s += "/";
        for (int v : rows[r]) s += std::to_string(v);
    }
    return s;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    int n = shape.n();
    std::vector<int> sh = shape.parts();
    std::vector<std::pair<int, int>> cells(n);

    // remove entries n, n-1, ... from removable corners, bottom-most corner
    // first; this yields last-letter order with the row-reading tableau at
    // index 0
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 0) {
            out.emplace_back(shape, cells);
            return;
        }
        for (int r = static_cast<int>(sh.size()) - 1; r >= 0; --r) {
            int c = sh[r] - 1;
            bool corner = (r + 1 == static_cast<int>(sh.size())) || sh[r + 1] <= c;
            if (!corner) continue;
            cells[k - 1] = {r, c};
            sh[r] -= 1;
            bool popped = false;
            if (sh[r] == 0 && r + 1 == static_cast<int>(sh.size())) {
                sh.pop_back();
                popped = true;
            }
            self(self, k - 1);
            if (popped) sh.push_back(0);
            sh[r] += 1;
        }
    };
    rec(rec, n);
    return out;
}

} // namespace cayspec
