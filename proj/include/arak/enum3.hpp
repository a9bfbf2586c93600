#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace arak {

// Rank-3 positive definite quadratic forms in long double. Used only to
// generate candidate coefficient vectors; every candidate is re-classified
// with certified arithmetic by the caller.

using LMat3 = std::array<std::array<long double, 3>, 3>;
using IMat3 = std::array<std::array<std::int64_t, 3>, 3>;

/// LLL (delta = 3/4) on a Gram matrix. Row k of `T` is the k-th reduced
/// basis vector over the input basis; `gram` is the reduced Gram matrix.
struct ReducedGram {
    LMat3 gram;
    IMat3 T;
};
ReducedGram lll_gram(const LMat3& G);

/// Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2.
struct FPForm {
    LMat3 q{};
};
FPForm fp_form(const LMat3& G);

/// One (x3, x2) row of the ellipsoid Q(x) < R with its x1 range. Rows cover
/// one representative per +/- pair: x3 > 0, or x3 = 0 and x2 > 0, or
/// x3 = x2 = 0 and x1 > 0.
struct FPRow {
    std::int64_t x3, x2;
    std::int64_t x1_lo, x1_hi;
};
std::vector<FPRow> fp_rows(const FPForm& f, long double R);

/// Lattice-point estimate for {Q < R} (both signs): volume / sqrt(det G).
long double ellipsoid_points(const LMat3& G, long double R);

long double det3(const LMat3& G);

} // namespace arak
