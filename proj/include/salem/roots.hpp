#ifndef SALEM_ROOTS_HPP
#define SALEM_ROOTS_HPP

#include <string>
#include <vector>

#include "salem/poly.hpp"

namespace salem {

struct EndpointIsRootError : Error {
    EndpointIsRootError() : Error("polynomial vanishes at an interval endpoint") {}
};

/// Signed remainder sequence of (p, p'), every element reduced to its
/// primitive part. Sign variation differences count distinct real roots.
struct SturmChain {
    std::vector<IntPolynomial> chain;

    int variations_at(const Rat& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;

    /// The chain ends in a nonzero constant iff the input was squarefree.
    bool squarefree_input() const {
        return !chain.empty() && chain.back().degree() == 0 && !chain.back().is_zero();
    }
};

SturmChain sturm_chain(const IntPolynomial& p);

/// Distinct real roots of p strictly inside (a, b).
/// Throws EndpointIsRootError if p(a) = 0 or p(b) = 0.
int count_roots_open(const IntPolynomial& p, const Rat& a, const Rat& b);

/// Distinct real roots over the whole line.
int count_real_roots(const IntPolynomial& p);

struct RootProfile {
    int count_in_0_4 = 0;
    int count_above_4 = 0;
    Rat isolator_lo;  // > 4
    Rat isolator_hi;
};

struct ProfileCheck {
    bool ok = false;
    std::string violation;  // which clause failed, empty when ok
    RootProfile profile;
};

/// Exact certification that monic Q of degree d is squarefree with all d
/// roots real, d-1 of them in (0,4) and exactly one in (4,R).
/// Returns an isolating interval for the root above 4.
ProfileCheck certify_profile(const IntPolynomial& Q, const Rat& R);

/// Bisects (lo, hi), which must isolate one simple root, with exact sign
/// arithmetic until the printed value is correctly rounded to `digits`
/// decimals (round half to even; re-refines near rounding boundaries).
std::string refine_largest_root(const IntPolynomial& p, Rat lo, Rat hi, int digits);

/// Salem value from the z-root isolator of a certified Q: the root lambda > 1
/// of the expanded polynomial, printed to `digits` decimals. Agrees with
/// refine_largest_root on the expansion.
std::string salem_from_z(const Rat& z_lo, const Rat& z_hi, const IntPolynomial& Q,
                         int digits);

}  // namespace salem

#endif
