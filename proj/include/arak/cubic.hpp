#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arak/bigfloat.hpp"
#include "arak/numtheory.hpp"

namespace arak {

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kPrecisionCap = 4096;
/// Extra bits carried internally; certified margins are stated at the
/// configured precision only.
inline constexpr unsigned kGuardBits = 64;

/// P = aX^3 + bX^2 + cX + d.
struct CubicSeed {
    mpz_class a, b, c, d;
    mpq_class C = 1;
    unsigned precision_bits = kDefaultPrecisionBits;
    friend bool operator==(const CubicSeed&, const CubicSeed&) = default;
};

/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
mpz_class cubic_disc(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d);

struct SeedChecks {
    mpz_class disc;
    bool disc_positive = false;
    bool irreducible = false;
    std::optional<mpq_class> rational_root;
    bool gcd_one = false;
    bool a_prime = false;
    Factorization disc_factorization;
    Squarefree squarefree = Squarefree::Unknown;
    bool ok() const { return disc_positive && irreducible && gcd_one && a_prime && squarefree == Squarefree::Yes; }
};

SeedChecks check_seed(const CubicSeed& seed, const FactorEffort& effort = {});

/// Real roots of P in ascending order. Throws NotTotallyReal unless disc > 0.
std::array<BigFloat, 3> real_roots(const CubicSeed& seed, unsigned prec);

/// I = Z + Z beta + Z (a beta^2), embedded in R^3 through the three real roots
/// and LLL-reduced (delta = 3/4). Row k of `basis` is b_k; row k of
/// `transform` gives b_k over {1, beta, a beta^2}.
struct CubicLattice {
    CubicSeed seed;
    unsigned prec = kDefaultPrecisionBits;  // BigFloats below carry prec + kGuardBits
    std::array<mpq_class, 5> power_sums;    // Tr(beta^k), k = 0..4
    mpz_class disc;
    std::array<BigFloat, 3> roots;
    std::array<std::array<BigFloat, 3>, 3> basis;
    std::array<std::array<mpz_class, 3>, 3> transform;
    BigFloat covol;        // |det basis|
    BigFloat covol_exact;  // sqrt(disc) / a
    BigFloat covol_relerr;

    BigFloat norm(int k) const;
};

/// Doubles the working precision (up to kPrecisionCap) until the determinant
/// agrees with sqrt(disc)/a; throws PrecisionInsufficient beyond the cap.
CubicLattice build_cubic_lattice(const CubicSeed& seed);
CubicLattice build_cubic_lattice(const CubicSeed& seed, unsigned prec);

/// Embedded point sum_k s_k b_k at the lattice precision.
std::array<BigFloat, 3> lattice_point(const CubicLattice& L, const std::array<mpz_class, 3>& s);
/// Coordinates over {1, beta, a beta^2} of sum_k s_k b_k.
std::array<mpz_class, 3> original_coords(const CubicLattice& L, const std::array<mpz_class, 3>& s);

/// Absolute error bound for a coordinate of lattice_point(L, s).
BigFloat coordinate_margin(const CubicLattice& L, const std::array<mpz_class, 3>& s);

/// Embedding of x + y beta + z a beta^2 from the roots alone, with its
/// absolute coordinate error bound.
std::array<BigFloat, 3> embed_original(const CubicLattice& L, const std::array<mpz_class, 3>& e, BigFloat* margin);
/// |g|^2 = Tr(g^2) exactly, for g = x + y beta + z a beta^2.
mpq_class exact_norm_sq(const CubicLattice& L, const std::array<mpz_class, 3>& e);

/// Sign of |sigma_i(g)| - 1/C, or nullopt when the margin at the lattice
/// precision does not decide. Exact for rational g (the only case where 0 can
/// occur).
std::optional<int> coord_abs_cmp(const CubicLattice& L, const std::array<mpz_class, 3>& e, int i, const mpq_class& C);
/// |sigma_i(g)| < 1/C for g given over {1, beta, a beta^2}: +1 yes, -1 no,
/// 0 when the margin at the lattice precision does not decide. Exact for
/// rational g.
int slab_test(const CubicLattice& L, const std::array<mpz_class, 3>& e, int i, const mpq_class& C);

/// Exact certificates for a seed whose discriminant plays the role of the
/// field discriminant: covol = sqrt(disc)/a.
bool covol_exceeds(const mpz_class& disc, const mpz_class& a, const mpq_class& t);
/// covol > k * disc^(1/4), i.e. disc > k^4 a^4.
bool covol_exceeds_disc_quarter(const mpz_class& disc, const mpz_class& a, const mpq_class& k);
/// Index [I : R] for R = Z + Z(a beta) + Z(a beta^2 + b beta) inside
/// I = Z + Z beta + Z(a beta^2), as an integer determinant.
mpz_class index_R_in_I(const CubicSeed& seed);

struct CardGConditions {
    bool one_primitive = false;  // via "a prime"
    bool s1_empty = false;
    bool b1_short = false;       // |b1| < sqrt(3)/C
    bool covol_at_least_10 = false;
    std::uint64_t s1_ball_points = 0;   // lattice pairs examined inside |x| < sqrt(3)/C
    std::uint64_t s1_uncertified = 0;   // points whose cuboid membership stayed undecided
    std::vector<std::string> notes;
    bool all() const { return one_primitive && s1_empty && b1_short && covol_at_least_10; }
};

CardGConditions verify_cardG_conditions(const CubicLattice& L, const mpq_class& C);

/// Coefficient box for cuboid points: |s1| <= 2 (3/2)^2 r/|b1|,
/// |s2| <= 3 r/|b2*|, |s3| <= 2 r/|b3*| with r = sqrt(3)/C.
std::array<long double, 3> cuboid_coefficient_box(const CubicLattice& L, const mpq_class& C);

struct GenResult {
    CubicSeed seed;
    SeedChecks checks;
    CardGConditions conditions;
    std::uint64_t attempts = 0;  // index of the successful attempt + 1
};

struct GenParams {
    mpq_class C = 1;
    mpz_class a_lo = 1000, a_hi = 10000;
    std::uint64_t seed = 1;
    std::uint64_t max_attempts = 20000;
    unsigned precision_bits = kDefaultPrecisionBits;
};

/// Candidate attempt `index` (deterministic in (params.seed, index)); nullopt
/// when a is not prime, the roots leave the shell/cuboid constraints or
/// rounding produced a degenerate polynomial.
std::optional<CubicSeed> gen_candidate(const GenParams& params, std::uint64_t index);

/// Evaluates candidates in parallel batches and returns the lowest-index
/// candidate passing every check. Throws SearchBudgetExceeded.
GenResult gen_search(const GenParams& params);

} // namespace arak
