#ifndef SALEM_IRREDUCIBILITY_HPP
#define SALEM_IRREDUCIBILITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "salem/poly.hpp"

namespace salem {

struct NotSquarefreeError : Error {
    NotSquarefreeError() : Error("polynomial is not squarefree") {}
};

enum class Verdict { Irreducible, Reducible, Inconclusive };
enum class CertMethod { DegreePattern, Zassenhaus, LinearFactor };

struct PrimePattern {
    std::uint32_t prime = 0;
    std::vector<int> degrees;  // factor-degree multiset mod prime, ascending
};

/// Checkable evidence for a rationality verdict. Reducible certificates carry
/// a factor that divides the input exactly; DegreePattern certificates carry
/// the per-prime degree multisets whose subset-sum intersection rules out
/// every proper factor degree.
struct IrreducibilityCertificate {
    Verdict verdict = Verdict::Inconclusive;
    CertMethod method = CertMethod::DegreePattern;
    IntPolynomial factor;               // meaningful only when Reducible
    std::vector<PrimePattern> patterns;

    nlohmann::json to_json() const;
    static IrreducibilityCertificate from_json(const nlohmann::json& j);
};

/// Integer root among the divisors of the constant term, as a linear factor.
std::optional<IntPolynomial> linear_factor_check(const IntPolynomial& p);

/// Factor-degree multiset of p mod prime via distinct-degree factorization.
/// nullopt when p mod prime is not squarefree (skip that prime).
std::optional<std::vector<int>> modp_factor_degrees(const IntPolynomial& p,
                                                    std::uint32_t prime);

/// Sound, incomplete: Irreducible when the subset-sum intersection over
/// usable primes collapses to {0, deg}, Inconclusive otherwise.
IrreducibilityCertificate degree_pattern_certify(const IntPolynomial& p,
                                                 int prime_budget = 25);

/// Complete decision by factoring mod a good prime, Hensel-lifting past the
/// factor coefficient bound and recombining factor subsets.
IrreducibilityCertificate zassenhaus_factor(const IntPolynomial& p);

/// Full decision procedure: squarefree pre-check, linear factor scan, degree
/// patterns, Zassenhaus fallback. Never returns Inconclusive.
/// Throws NotSquarefreeError for inputs with repeated factors.
IrreducibilityCertificate is_irreducible(const IntPolynomial& p);

/// Re-derives every claim inside the certificate from p alone.
bool replay_certificate(const IntPolynomial& p, const IrreducibilityCertificate& cert);

}  // namespace salem

#endif
