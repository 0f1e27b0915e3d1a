#include "cayspec/char_poly.hpp"

#include "cayspec/errors.hpp"

namespace cayspec {

IntPolynomial char_poly(const RationalMatrix& m) {
    int d = m.dim();
    std::vector<Rat> coeff(d + 1);
    coeff[d] = 1;

    RationalMatrix nk = m;
    Rat ck = -nk.trace();
    coeff[d - 1] = ck;
    for (int k = 2; k <= d; ++k) {
        for (int i = 0; i < d; ++i) nk.at(i, i) += ck;
        nk = m * nk;
        ck = -nk.trace() / k;
        coeff[d - k] = ck;
    }

    std::vector<mpz_class> out(d + 1);
    for (int k = 0; k <= d; ++k) {
        Rat c = coeff[k];
        c.canonicalize();
        if (c.get_den() != 1)
            throw InternalError("char_poly: non-integer coefficient " + c.get_str() +
                                " at degree " + std::to_string(k));
        out[k] = c.get_num();
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial char_poly(const IntMatrix& m) {
    return char_poly(RationalMatrix::from_int(m));
}

} // namespace cayspec
