#ifndef SALEM_POLY_HPP
#define SALEM_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace salem {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotMonicError : Error {
    NotMonicError() : Error("polynomial is not monic") {}
};

/// Dense integer polynomial, coefficients stored lowest degree first.
/// The zero polynomial is stored as a single zero coefficient.
class IntPolynomial {
public:
    IntPolynomial() : coeffs_{Int(0)} {}
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> lowest_first);

    static IntPolynomial monomial(int degree, Int coeff = Int(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    const Int& leading() const { return coeffs_.back(); }
    bool is_monic() const { return coeffs_.back() == 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i, zero outside the stored range.
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;

    Int evaluate(const Int& x) const;
    Rat evaluate_exact(const Rat& x) const;

    /// Sign of the value at a rational point, computed without division:
    /// sign(p(n/d)) = sign(sum a_i n^i d^(deg-i)) since d > 0.
    int sign_at(const Rat& x) const;

    /// Sum of roots of a monic polynomial = -coeff(degree-1).
    Int trace() const;

    bool is_self_reciprocal() const;
    IntPolynomial derivative() const;

    /// Injective platform-stable encoding of the coefficient sequence.
    std::string canonical_key() const;

    /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
    Int content() const;
    /// p / content(p); keeps the sign of each coefficient.
    IntPolynomial primitive_part() const;

    std::string to_string(const std::string& var = "x") const;

    /// JSON array of decimal coefficient strings, lowest degree first.
    nlohmann::json to_json() const;
    static IntPolynomial from_json(const nlohmann::json& j);

private:
    std::vector<Int> coeffs_;
    void trim();
};

/// Quotient of num by monic den; remainder returned through rem.
IntPolynomial divrem_monic(const IntPolynomial& num, const IntPolynomial& den,
                           IntPolynomial& rem);

/// True iff div (monic) divides p exactly over the integers.
bool divides_exactly(const IntPolynomial& div, const IntPolynomial& p);

/// Integer polynomial gcd via a primitive remainder sequence.
/// Result is primitive with positive leading coefficient (or the content gcd
/// when one argument is zero).
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// Fraction-free remainder: returns r = s * (f mod g) where s = lc(g)^steps.
/// The sign of s is reported through scale_sign so callers can recover the
/// sign of the true remainder.
IntPolynomial scaled_pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g,
                                      int& scale_sign);

int sign_of(const Int& v);
int sign_of(const Rat& v);

/// Parses "6.69", "-3", or "669/100" into an exact rational.
Rat rat_from_decimal(const std::string& s);
std::string rat_to_string(const Rat& q);

/// Decimal string of x with `digits` places after the point,
/// rounding half to even.
std::string round_decimal_half_even(const Rat& x, int digits);

}  // namespace salem

#endif
