#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "arak/ideal.hpp"
#include "arak/lattice.hpp"
#include "arak/qfield.hpp"

namespace arak {

struct Config {
    mpq_class C = 1;
    /// Multiplies the G radius (so the squared radius by slack^2).
    mpq_class radius_slack = 1;
    /// Drop G1 candidates with B^4 <= 1/(16C^2) and G2 candidates with
    /// B^4 >= 16C^2 before taking extrema. Off by default.
    bool range_filter = false;
    std::uint64_t enum_budget = kDefaultEnumBudget;
};

/// Rational stand-in for (16/pi^2): 16/pi^2 = 1.62113... < 33/20. Enlarging
/// G only adds constraints every feasible metric already satisfies (any
/// admissible ellipse has both axes below (4/pi) C covol), so the B_min <=
/// B_max verdict is unchanged.
inline const mpq_class kGRadiusFactor{33, 20};

/// Squared G radius (33/20) C^2 covol^2 slack^2.
mpq_class g_radius_sq(const EmbeddedBasis& B, const mpq_class& C, const mpq_class& slack = 1);

enum class CandidateClass { G1, G2, NotInG };
std::string_view to_string(CandidateClass c);

struct Candidate {
    mpz_class s1, s2;
    FieldElem g;
    QuadNum g1, g2;
    QuadNum g1_sq, g2_sq;
    mpq_class norm_sq;
    CandidateClass cls = CandidateClass::NotInG;
    std::optional<QuadNum> B4;  // B(g)^4 = -(C^2 g1^2 - 1) / (C^2 g2^2 - 1)
};

enum class Stage { ContainsOne, NormBound, Primitivity, S1Occupied, EarlyShortest, BminBmax };
std::string_view to_string(Stage s);

struct Verdict {
    bool reduced = false;
    Stage stage = Stage::ContainsOne;
    QuadNum bmin4, bmax4;
    std::optional<QuadNum> witness_alpha4;
    std::vector<Candidate> candidates;
    std::vector<std::string> notes;
    mpq_class C;
};

/// Exact membership in S1 = {|x1| <= 1/C, |x2| <= 1/C, x1^2 + x2^2 < 2/C^2}.
bool in_square_S1(const Embedding& e, const mpq_class& norm_sq, const mpq_class& C);

/// Scans s1*b1 + s2*b2 for |s1| <= 2, |s2| <= 1 (one per sign pair) and
/// returns the first S1 occupant.
std::optional<Candidate> s1_contains_nonzero(const EmbeddedBasis& B, const mpq_class& C);

/// Assigns G1/G2/NotInG by exact sign tests; g is not in G unless
/// |g|^2 < radius_sq.
Candidate classify(const EmbeddedBasis& B, const mpz_class& s1, const mpz_class& s2,
                   const mpq_class& C, const mpq_class& radius_sq);

/// b1; s1*b1 + b2 for |s1| <= 2; t*b1 + b2 for the integers t in the
/// interval where the coordinate in which b1 is long drops below 1/C.
/// Requires |b1|^2 < 2/C^2. Throws BranchUndetermined when neither branch
/// condition holds.
std::vector<Candidate> build_G3(const EmbeddedBasis& B, const mpq_class& C, const mpq_class& radius_sq,
                                std::vector<std::string>* notes = nullptr);

struct BminBmax {
    QuadNum bmin4, bmax4;
};
BminBmax bmin_bmax(const std::vector<Candidate>& cands, const mpq_class& C, std::int64_t d);

/// A rational strictly between lo < hi.
mpq_class rational_between(const QuadNum& lo, const QuadNum& hi);

Verdict test_c_reduced(const FracIdeal& I, const Config& cfg);
inline Verdict test_c_reduced(const FracIdeal& I, const mpq_class& C) {
    Config cfg;
    cfg.C = C;
    return test_c_reduced(I, cfg);
}

/// false iff I is C-reduced but not Cp-reduced (1 <= C <= Cp).
bool monotonicity_check(const FracIdeal& I, const mpq_class& C, const mpq_class& Cp);

} // namespace arak
