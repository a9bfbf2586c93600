#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "arak/ideal.hpp"
#include "arak/qfield.hpp"

namespace arak {

/// Rank-2 embedded ideal lattice with a Lagrange-reduced basis and exact
/// rational Gram data (<x, y> = Tr(xy)).
///
/// Invariants after embed_and_reduce: |mu| <= 1/2, |b1| <= |b2|, sigma_1(b1) > 0.
/// b1 is then a shortest nonzero vector.
struct EmbeddedBasis {
    QuadField field;
    FieldElem b1, b2;
    Embedding e1, e2;
    mpq_class g11, g12, g22;
    mpq_class mu;         // g12 / g11
    mpq_class bstar2_sq;  // |b2*|^2 = g22 - mu^2 g11

    mpq_class covol_sq() const { return g11 * g22 - g12 * g12; }
    FieldElem at(const mpz_class& s1, const mpz_class& s2) const { return s1 * b1 + s2 * b2; }
    mpq_class norm_sq(const mpz_class& s1, const mpz_class& s2) const {
        return g11 * s1 * s1 + 2 * g12 * s1 * s2 + g22 * s2 * s2;
    }
};

/// Lagrange-Gauss reduction of an arbitrary Z-basis of a rank-2 lattice in F.
EmbeddedBasis reduce_basis(const QuadField& field, const FieldElem& u, const FieldElem& v);
EmbeddedBasis embed_and_reduce(const FracIdeal& I);

inline mpq_class shortest_sq(const EmbeddedBasis& B) { return B.g11; }

struct LatticePoint {
    mpz_class s1, s2;
    FieldElem g;
    mpq_class norm_sq;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

/// Every g = s1*b1 + s2*b2 with |g|^2 < R_sq, one per +/- pair (s2 > 0, or
/// s2 == 0 and s1 > 0), ordered lexicographically by (s2, s1). Throws
/// EnumerationBudgetExceeded if more than `budget` coefficient pairs would be
/// examined.
std::vector<LatticePoint> enumerate_bounded(const EmbeddedBasis& B, const mpq_class& R_sq,
                                            std::uint64_t budget = kDefaultEnumBudget);

} // namespace arak
