#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arak {

/// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);
bool is_perfect_square(const mpz_class& n);

mpz_class floor_q(const mpq_class& x);
mpz_class ceil_q(const mpq_class& x);
/// Round half up: floor(x + 1/2).
mpz_class round_q(const mpq_class& x);
/// floor(sqrt(r)) for rational r >= 0.
mpz_class floor_sqrt_q(const mpq_class& r);

/// Deterministic Miller-Rabin below 2^64, GMP's probabilistic test with 40
/// rounds above.
bool is_prime(const mpz_class& n);

enum class Squarefree { Yes, No, Unknown };
std::string_view to_string(Squarefree s);

struct Factorization {
    std::vector<std::pair<mpz_class, unsigned>> primes;  // ascending
    std::vector<mpz_class> unfactored;                   // composite, no small factors
    Squarefree status = Squarefree::Unknown;
};

struct FactorEffort {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 2'000'000;  // per cofactor split attempt
};

/// Trial division, then Pollard-Brent rho. A remaining composite cofactor with
/// every prime factor above the trial bound is still certified squarefree when
/// it is below trial_bound^3 and not a perfect square (it is then p*q, p != q).
Factorization factor(const mpz_class& n, const FactorEffort& effort = {});

/// Squarefreeness of |n| for small machine integers (d of a quadratic field).
bool is_squarefree_u64(std::uint64_t n);

/// Parses "num/den" or "num". Throws Error(InputError) on malformed text or a
/// zero denominator.
mpq_class parse_rational(std::string_view text);
std::string rational_string(const mpq_class& q);  // always "num/den"

} // namespace arak
