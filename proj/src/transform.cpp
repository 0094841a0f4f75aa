#include "salem/transform.hpp"

namespace salem {

namespace {

Int binomial(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

IntPolynomial expand_to_salem(const IntPolynomial& Q) {
    if (!Q.is_monic()) throw NotMonicError();
    const int d = Q.degree();
    if (d < 1) throw Error("expansion requires degree >= 1");
    std::vector<Int> p(static_cast<size_t>(2 * d) + 1, Int(0));
    for (int k = 0; k <= d; ++k) {
        const Int a = Q.coeff(k);
        if (a == 0) continue;
        // a_k (x+1)^(2k) x^(d-k)
        for (int j = 0; j <= 2 * k; ++j) {
            p[static_cast<size_t>(j + d - k)] +=
                a * binomial(static_cast<unsigned>(2 * k), static_cast<unsigned>(j));
        }
    }
    return IntPolynomial(std::move(p));
}

IntPolynomial contract_to_trace_form(const IntPolynomial& P) {
    if (!P.is_monic()) throw NotMonicError();
    const int deg = P.degree();
    if (deg < 2 || deg % 2 != 0) throw NotReciprocalError();
    if (!P.is_self_reciprocal()) throw NotReciprocalError();
    const int d = deg / 2;

    // Coefficient of x^(2d-j) in (x+1)^(2d-2i) x^i is C(2d-2i, j-i) for i <= j.
    std::vector<Int> a(static_cast<size_t>(d) + 1, Int(0));
    a[static_cast<size_t>(d)] = 1;
    for (int j = 1; j <= d; ++j) {
        Int acc = P.coeff(2 * d - j);
        for (int i = 0; i < j; ++i) {
            acc -= binomial(static_cast<unsigned>(2 * d - 2 * i),
                            static_cast<unsigned>(j - i)) *
                   a[static_cast<size_t>(d - i)];
        }
        a[static_cast<size_t>(d - j)] = std::move(acc);
    }
    IntPolynomial Q(std::move(a));
    if (expand_to_salem(Q) != P) throw NonIntegerSolutionError();
    return Q;
}

}  // namespace salem
