#ifndef CAYSPEC_INT_POLYNOMIAL_HPP
#define CAYSPEC_INT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cayspec {

// Monic polynomial with arbitrary-precision integer coefficients.
class IntPolynomial {
public:
    // coefficients in ascending degree order; last entry must be 1
    explicit IntPolynomial(std::vector<mpz_class> ascending);
    static IntPolynomial one() { return IntPolynomial({mpz_class(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int k) const { return c_[k]; } // of x^k
    const std::vector<mpz_class>& coefficients() const { return c_; }

    mpz_class evaluate(const mpz_class& x) const;

    // exact division by (x - root); root must actually be a root
    IntPolynomial divide_linear(const mpz_class& root) const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial& o) const = default;

    // e.g. "x^5 + 6x^4 - 40x^2 - 48x"; degree 0 prints "1"
    std::string to_string() const;

private:
    std::vector<mpz_class> c_;
};

// Result of peeling all integer roots off a monic polynomial:
// product of (x - r)^mult times remainder reproduces the input exactly,
// and remainder has no integer roots.
struct IntRootSplit {
    std::map<std::int64_t, int> roots;
    IntPolynomial remainder{IntPolynomial::one()};

    bool fully_split() const { return remainder.degree() == 0; }
};

// Tries every candidate root in [-bound, bound] to full multiplicity.
// Precondition (caller-supplied): all real roots of p lie in [-bound, bound],
// so the remainder has no integer roots at all.
IntRootSplit integer_root_split(const IntPolynomial& p, std::int64_t bound);

} // namespace cayspec

#endif
