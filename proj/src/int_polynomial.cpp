#include "cayspec/int_polynomial.hpp"

#include <stdexcept>

#include "cayspec/errors.hpp"

namespace cayspec {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) {
    if (c_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    if (c_.back() != 1) throw std::invalid_argument("polynomial must be monic");
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::divide_linear(const mpz_class& root) const {
    if (degree() < 1) throw std::invalid_argument("cannot divide a constant polynomial");
    // synthetic division, highest coefficient first
    std::vector<mpz_class> q(c_.size() - 1);
    mpz_class carry = 0;
    for (int k = degree(); k >= 1; --k) {
        carry = c_[k] + root * carry;
        q[k - 1] = carry;
    }
    mpz_class rem = c_[0] + root * carry;
    if (rem != 0) throw InternalError("divide_linear: " + root.get_str() + " is not a root");
    return IntPolynomial(std::move(q));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (degree() == 0) return "1";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& a = c_[k];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

IntRootSplit integer_root_split(const IntPolynomial& p, std::int64_t bound) {
    if (bound < 0) throw std::invalid_argument("root bound must be nonnegative");
    IntRootSplit split;
    split.remainder = p;
    for (std::int64_t cand = -bound; cand <= bound; ++cand) {
        mpz_class r(static_cast<long>(cand));
        while (split.remainder.degree() >= 1 && split.remainder.evaluate(r) == 0) {
            split.remainder = split.remainder.divide_linear(r);
            ++split.roots[cand];
        }
    }
    return split;
}

} // namespace cayspec
