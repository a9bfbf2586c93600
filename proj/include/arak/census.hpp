#pragma once

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "arak/bigfloat.hpp"
#include "arak/cubic.hpp"

namespace arak {

// Census of G = {g in I : |g| < delta, some |g_i| < 1/C}, delta = (6/pi) C^2 covol.

struct CensusParams {
    mpq_class C = 1;
    std::uint64_t budget = 200'000'000;  // candidate points examined
    std::size_t chunk_rows = 256;        // deterministic unit of parallel work
};

struct CensusResult {
    std::uint64_t pairs = 0;     // +/- pairs certified in G
    std::uint64_t g_count = 0;   // 2 * pairs
    std::uint64_t ambiguous = 0; // pairs undecided at the configured precision
    std::uint64_t resolved_at_higher_precision = 0;
    std::array<std::uint64_t, 3> per_slab{};  // pairs by smallest slab index
    std::uint64_t examined = 0;
    long double estimate = 0;    // predicted candidate points before enumerating
    bool complete = false;
    std::string declined_reason;  // set when the estimate alone exceeded the budget
    BigFloat delta;               // (6/pi) C^2 covol
    BigFloat lower_bound;         // (2/3) C^2 covol
};

/// delta^2 from a lower rational bound on pi, so the enumeration radius is
/// never too small.
mpq_class delta_sq_upper(const CubicLattice& L, const mpq_class& C);

/// Slab-ellipsoid enumeration, OpenMP over (s3, s2) rows in fixed chunks.
/// When the budget is hit the partial count of the completed chunks is
/// returned with complete = false.
CensusResult count_G_cubic(const CubicLattice& L, const CensusParams& params);

/// Serial reference: enumerates the whole ball |g| < delta and filters. Only
/// practical for small covolumes.
CensusResult count_G_cubic_reference(const CubicLattice& L, const CensusParams& params);

/// Certified membership of g (over {1, beta, a beta^2}) in G: +1 in, -1 out,
/// 0 undecided at the lattice precision. `slab` receives the smallest i with
/// |g_i| < 1/C.
int g_membership(const CubicLattice& L, const std::array<mpz_class, 3>& e, const mpq_class& C, int* slab = nullptr);

} // namespace arak
