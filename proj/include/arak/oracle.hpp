#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arak/creduced.hpp"
#include "arak/ideal.hpp"
#include "arak/lattice.hpp"
#include "arak/qfield.hpp"

namespace arak {

// Brute-force ground truth. Shares only the qfield/ideal/lattice primitives
// (and the G radius constant) with creduced; membership in G and the B(g)
// bounds are derived here from the raw metric constraint
//     1 - C^2 g1^2 <= q (C^2 g2^2 - 1),   q = alpha^4 > 0.

struct OracleConfig {
    mpq_class C = 1;
    mpq_class radius_slack = 1;
    std::uint64_t enum_budget = kDefaultEnumBudget;
};

enum class ConstraintKind { Lower, Upper, Always, Never };

struct CensusEntry {
    mpz_class s1, s2;
    FieldElem g;
    Embedding e;
    mpq_class norm_sq;
    ConstraintKind kind = ConstraintKind::Always;
    std::optional<QuadNum> bound;  // q >= bound (Lower) or q <= bound (Upper)
};

struct OracleReport {
    bool verdict = false;
    std::string reason;
    std::vector<CensusEntry> g_census;  // Lower/Upper entries only
    QuadNum bmin4, bmax4;
    mpq_class radius_sq_used;
    /// Feasibility of q over (0, inf) with no default bounds.
    std::optional<bool> feasible_without_defaults;
    std::optional<bool> agreement;
};

CensusEntry constraint_for(const EmbeddedBasis& B, const LatticePoint& p, const mpq_class& C);

/// True iff no integer 2 <= k <= N(I^-1) has 1/k in I. Throws OneNotInIdeal.
bool oracle_primitive(const FracIdeal& I);

OracleReport oracle_test(const FracIdeal& I, const OracleConfig& cfg, const Verdict* compare = nullptr);

/// Checks 1 - C^2 g1^2 <= alpha4 (C^2 g2^2 - 1) for every nonzero g with
/// |g|^2 below max(G radius^2, 2/C^2).
bool validate_witness(const FracIdeal& I, const mpq_class& C, const QuadNum& alpha4,
                      const mpq_class& radius_slack = 1, std::uint64_t budget = kDefaultEnumBudget);

} // namespace arak
