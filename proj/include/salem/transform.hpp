#ifndef SALEM_TRANSFORM_HPP
#define SALEM_TRANSFORM_HPP

#include "salem/poly.hpp"

namespace salem {

struct NotReciprocalError : Error {
    NotReciprocalError() : Error("polynomial is not self-reciprocal") {}
};

struct NonIntegerSolutionError : Error {
    NonIntegerSolutionError() : Error("contraction produced a non-integer coefficient") {}
};

/// Monic Q of degree d -> monic self-reciprocal P of degree 2d with
/// P(x) = x^d Q(x + 1/x + 2). Uses the identity x^d z^k = (x+1)^(2k) x^(d-k),
/// so the whole expansion is a binomial sum, no rational functions involved.
/// trace(P) = trace(Q) - 2d and P(0) = 1.
IntPolynomial expand_to_salem(const IntPolynomial& Q);

/// Inverse of expand_to_salem: recovers the unique monic integer Q from a
/// monic self-reciprocal P of even degree by solving the triangular system
/// that matches coefficients of x^(2d) down to x^d.
IntPolynomial contract_to_trace_form(const IntPolynomial& P);

}  // namespace salem

#endif
