#include "cayspec/seminormal.hpp"

#include <map>
#include <stdexcept>

#include "cayspec/errors.hpp"

namespace cayspec {

namespace {

std::vector<std::pair<int, int>> cells_of(const StandardTableau& t) {
    std::vector<std::pair<int, int>> cells(t.n());
    for (int e = 1; e <= t.n(); ++e) cells[e - 1] = {t.row_of(e), t.col_of(e)};
    return cells;
}

} // namespace

SeminormalRep::SeminormalRep(const Partition& alpha)
    : alpha_(alpha), basis_(standard_tableaux(alpha)) {
    int n = alpha_.n();
    int m = dimension();
    std::map<std::vector<std::pair<int, int>>, int> index;
    for (int a = 0; a < m; ++a) index[cells_of(basis_[a])] = a;

    gens_.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) {
        RationalMatrix gen(m);
        for (int a = 0; a < m; ++a) {
            const StandardTableau& t = basis_[a];
            int d = t.content_of(k + 1) - t.content_of(k);
            Rat diag(1, d);
            diag.canonicalize(); // mpq requires a positive denominator
            gen.at(a, a) = diag;
            if (d >= 2 || d <= -2) {
                auto it = index.find(cells_of(t.swapped(k)));
                if (it == index.end())
                    throw InternalError("seminormal: swapped tableau not standard");
                int b = it->second;
                if (a < b) {
                    gen.at(b, a) = 1;
                    gen.at(a, b) = 1 - Rat(1, static_cast<long>(d) * d);
                }
            }
        }
        gens_.push_back(std::move(gen));
    }
}

const RationalMatrix& SeminormalRep::generator(int k) const {
    if (k < 1 || k > n() - 1)
        throw std::invalid_argument("generator index out of range: " + std::to_string(k));
    return gens_[k - 1];
}

RationalMatrix SeminormalRep::of_transposition(const Transposition& t) const {
    if (t.j > n()) throw std::invalid_argument("transposition exceeds degree");
    auto word = adjacent_factorization(t);
    RationalMatrix m = generator(word[0]);
    for (std::size_t w = 1; w < word.size(); ++w) m = m * generator(word[w]);
    return m;
}

RationalMatrix SeminormalRep::sum_over(const std::vector<Transposition>& ts) const {
    RationalMatrix acc(dimension());
    for (const auto& t : ts) acc += of_transposition(t);
    return acc;
}

RationalMatrix seminormal_generator(const Partition& alpha, int k) {
    return SeminormalRep(alpha).generator(k);
}

RationalMatrix rep_of_transposition(const Partition& alpha, const Transposition& t) {
    return SeminormalRep(alpha).of_transposition(t);
}

RationalMatrix rep_sum(const Partition& alpha, const std::vector<Transposition>& ts) {
    return SeminormalRep(alpha).sum_over(ts);
}

std::int64_t character_on_transposition(const Partition& alpha) {
    if (alpha.n() < 2)
        throw std::invalid_argument("character on transpositions needs n >= 2");
    Rat tr = SeminormalRep(alpha).generator(1).trace();
    tr.canonicalize();
    if (tr.get_den() != 1) throw InternalError("character: non-integer trace");
    return static_cast<std::int64_t>(tr.get_num().get_si());
}

std::int64_t q_alpha(const Partition& alpha) {
    if (alpha.n() < 2) throw std::invalid_argument("q_alpha needs n >= 2");
    std::int64_t n = alpha.n();
    std::int64_t chi = character_on_transposition(alpha);
    std::int64_t f = alpha.dimension();
    std::int64_t num = n * (n - 1) * chi;
    std::int64_t den = 2 * f;
    if (num % den != 0)
        throw InternalError("q_alpha not an integer for " + alpha.to_string() +
                            ": " + std::to_string(num) + "/" + std::to_string(den));
    return num / den;
}

} // namespace cayspec
