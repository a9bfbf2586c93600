#include "arak/creduced.hpp"

#include <algorithm>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

std::string_view to_string(CandidateClass c) {
    switch (c) {
    case CandidateClass::G1: return "G1";
    case CandidateClass::G2: return "G2";
    case CandidateClass::NotInG: return "NotInG";
    }
    return "NotInG";
}

std::string_view to_string(Stage s) {
    switch (s) {
    case Stage::ContainsOne: return "ContainsOne";
    case Stage::NormBound: return "NormBound";
    case Stage::Primitivity: return "Primitivity";
    case Stage::S1Occupied: return "S1Occupied";
    case Stage::EarlyShortest: return "EarlyShortest";
    case Stage::BminBmax: return "BminBmax";
    }
    return "?";
}

mpq_class g_radius_sq(const EmbeddedBasis& B, const mpq_class& C, const mpq_class& slack) {
    return kGRadiusFactor * C * C * B.covol_sq() * slack * slack;
}

bool in_square_S1(const Embedding& e, const mpq_class& norm_sq, const mpq_class& C) {
    const mpq_class C2 = C * C;
    const mpq_class one(1);
    return qsign(C2 * (e.g1 * e.g1) - one) <= 0 && qsign(C2 * (e.g2 * e.g2) - one) <= 0 &&
           C2 * norm_sq < 2;
}

Candidate classify(const EmbeddedBasis& B, const mpz_class& s1, const mpz_class& s2,
                   const mpq_class& C, const mpq_class& radius_sq) {
    Candidate c;
    c.s1 = s1;
    c.s2 = s2;
    c.g = B.at(s1, s2);
    const Embedding e = B.field.embed(c.g);
    c.g1 = e.g1;
    c.g2 = e.g2;
    c.g1_sq = c.g1 * c.g1;
    c.g2_sq = c.g2 * c.g2;
    c.norm_sq = B.norm_sq(s1, s2);
    const mpq_class C2 = C * C;
    const mpq_class one(1);
    const QuadNum u1 = C2 * c.g1_sq - one;
    const QuadNum u2 = C2 * c.g2_sq - one;
    const int t1 = qsign(u1), t2 = qsign(u2);
    const bool in_radius = c.norm_sq < radius_sq;
    // The product condition is strict: t1 == 0 or t2 == 0 is never in G.
    if (in_radius && t1 < 0 && t2 > 0) {
        c.cls = CandidateClass::G1;
    } else if (in_radius && t2 < 0 && t1 > 0) {
        c.cls = CandidateClass::G2;
    }
    if (c.cls != CandidateClass::NotInG) c.B4 = -(u1 / u2);
    return c;
}

std::optional<Candidate> s1_contains_nonzero(const EmbeddedBasis& B, const mpq_class& C) {
    // No radius restriction here; classification is irrelevant for S1.
    const mpq_class no_radius = 0;
    for (int s2 = 0; s2 <= 1; ++s2) {
        for (int s1 = -2; s1 <= 2; ++s1) {
            if (s2 == 0 && s1 <= 0) continue;
            Candidate c = classify(B, s1, s2, C, no_radius);
            if (in_square_S1({c.g1, c.g2}, c.norm_sq, C)) return c;
        }
    }
    return std::nullopt;
}

std::vector<Candidate> build_G3(const EmbeddedBasis& B, const mpq_class& C, const mpq_class& radius_sq,
                                std::vector<std::string>* notes) {
    const mpq_class C2 = C * C;
    const mpq_class one(1);
    const QuadNum& b11 = B.e1.g1;
    const QuadNum& b12 = B.e1.g2;
    const int s11 = qsign(C2 * (b11 * b11) - one);
    const int s12 = qsign(C2 * (b12 * b12) - one);
    int j;
    if (s11 < 0 && s12 > 0) {
        j = 2;
    } else if (s11 > 0 && s12 < 0) {
        j = 1;
    } else {
        throw Error(ErrorCode::BranchUndetermined,
                    "neither coordinate of b1 is strictly below 1/C while the other exceeds it");
    }
    const QuadNum& b1j = j == 1 ? B.e1.g1 : B.e1.g2;
    const QuadNum& b2j = j == 1 ? B.e2.g1 : B.e2.g2;
    const mpq_class invC = 1 / C;
    QuadNum lo = (QuadNum::rational(B.field.d(), -invC) - b2j) / b1j;
    QuadNum hi = (QuadNum::rational(B.field.d(), invC) - b2j) / b1j;
    if (qcmp(lo, hi) > 0) std::swap(lo, hi);
    const mpz_class t_lo = lo.ceil(), t_hi = hi.floor();
    if (notes) {
        notes->push_back("step 4: branch on coordinate " + std::to_string(j) + ", s1 interval [" +
                         lo.str() + ", " + hi.str() + "]");
    }

    std::vector<Candidate> out;
    auto push = [&](const mpz_class& s1, const mpz_class& s2) {
        for (const auto& c : out) {
            if (c.s1 == s1 && c.s2 == s2) return;
        }
        out.push_back(classify(B, s1, s2, C, radius_sq));
    };
    push(1, 0);
    for (int s1 = -2; s1 <= 2; ++s1) push(s1, 1);
    for (mpz_class t = t_lo; t <= t_hi; ++t) push(t, 1);
    return out;
}

BminBmax bmin_bmax(const std::vector<Candidate>& cands, const mpq_class& C, std::int64_t d) {
    const mpq_class C2 = C * C;
    std::optional<QuadNum> lo, hi;
    for (const auto& c : cands) {
        if (c.cls == CandidateClass::G1 && (!lo || qcmp(*c.B4, *lo) > 0)) lo = *c.B4;
        if (c.cls == CandidateClass::G2 && (!hi || qcmp(*c.B4, *hi) < 0)) hi = *c.B4;
    }
    return {lo.value_or(QuadNum::rational(d, 1 / (16 * C2))), hi.value_or(QuadNum::rational(d, 16 * C2))};
}

mpq_class rational_between(const QuadNum& lo, const QuadNum& hi) {
    if (qcmp(lo, hi) >= 0) throw Error(ErrorCode::OutOfRange, "empty interval");
    if (lo.is_rational() && hi.is_rational()) return (lo.a() + hi.a()) / 2;
    for (unsigned bits = 16;; bits *= 2) {
        const auto [l1, u1] = lo.bounds(bits);
        const auto [l2, u2] = hi.bounds(bits);
        if (u1 < l2) return (u1 + l2) / 2;
    }
}

Verdict test_c_reduced(const FracIdeal& I, const Config& cfg) {
    const mpq_class& C = cfg.C;
    if (C < 1) throw Error(ErrorCode::OutOfRange, "C must be at least 1");
    const QuadField& F = I.field();
    const mpq_class C2 = C * C;
    const mpq_class low_default = 1 / (16 * C2), high_default = 16 * C2;

    Verdict v;
    v.C = C;
    v.bmin4 = QuadNum::rational(F.d(), low_default);
    v.bmax4 = QuadNum::rational(F.d(), high_default);

    // 1. membership of 1 and the norm bound
    if (!I.contains_one()) {
        v.stage = Stage::ContainsOne;
        v.notes.push_back("step 1: 1 is not in I");
        return v;
    }
    if (!norm_bound_check(I, C)) {
        v.stage = Stage::NormBound;
        v.notes.push_back("step 1: N(I)^-1 = " + rational_string(1 / I.norm()) + " exceeds C^2 sqrt(" +
                          std::to_string(F.delta()) + ")");
        return v;
    }
    v.notes.push_back("step 1: 1 in I, N(I)^-1 = " + rational_string(1 / I.norm()));

    // 2. primitivity
    const auto [primitive, evidence] = is_primitive_one(I);
    if (!primitive) {
        v.stage = Stage::Primitivity;
        v.notes.push_back("step 2: 1 is divisible by " + evidence.gcd_all.get_str() + " in I");
        return v;
    }
    v.notes.push_back("step 2: 1 is primitive");

    // 3. the square S1
    const EmbeddedBasis B = embed_and_reduce(I);
    if (auto occ = s1_contains_nonzero(B, C)) {
        v.stage = Stage::S1Occupied;
        v.notes.push_back("step 3: " + occ->s1.get_str() + "*b1 + " + occ->s2.get_str() + "*b2 = (" +
                          occ->g1.str() + ", " + occ->g2.str() + ") lies in S1");
        v.candidates.push_back(std::move(*occ));
        return v;
    }
    v.notes.push_back("step 3: S1 has no nonzero lattice point");

    // 4. early exit or the candidate set G3
    if (C2 * B.g11 >= 2) {
        v.stage = Stage::EarlyShortest;
        v.reduced = true;
        v.witness_alpha4 = QuadNum::rational(F.d(), 1);
        v.notes.push_back("step 4: |b1|^2 = " + rational_string(B.g11) + " >= 2/C^2, alpha = 1 works");
        return v;
    }
    v.stage = Stage::BminBmax;
    const mpq_class R_sq = g_radius_sq(B, C, cfg.radius_slack);
    v.candidates = build_G3(B, C, R_sq, &v.notes);
    v.notes.push_back("step 4: covol^2 = " + rational_string(B.covol_sq()) + ", |G3| = " +
                      std::to_string(v.candidates.size()));

    // 5. elimination
    std::vector<Candidate> active;
    for (const auto& c : v.candidates) {
        if (c.cls == CandidateClass::NotInG) continue;
        if (cfg.range_filter) {
            if (c.cls == CandidateClass::G1 && qcmp(*c.B4, low_default) <= 0) continue;
            if (c.cls == CandidateClass::G2 && qcmp(*c.B4, high_default) >= 0) continue;
        }
        active.push_back(c);
    }
    v.notes.push_back("step 5: " + std::to_string(active.size()) + " candidates in G");

    // 6. extrema
    const BminBmax bb = bmin_bmax(active, C, F.d());
    v.bmin4 = bb.bmin4;
    v.bmax4 = bb.bmax4;
    const int cmp = qcmp(v.bmin4, v.bmax4);
    v.reduced = cmp <= 0;
    if (!v.reduced) {
        v.notes.push_back("step 6: B_min^4 > B_max^4");
        return v;
    }
    // Witness: a point of [bmin4, bmax4] inside (1/(16C^2), 16C^2).
    const QuadNum lo = qcmp(v.bmin4, low_default) > 0 ? v.bmin4 : QuadNum::rational(F.d(), low_default);
    const QuadNum hi = qcmp(v.bmax4, high_default) < 0 ? v.bmax4 : QuadNum::rational(F.d(), high_default);
    const int inner = qcmp(lo, hi);
    if (inner < 0) {
        v.witness_alpha4 = QuadNum::rational(F.d(), rational_between(lo, hi));
    } else if (inner == 0) {
        v.witness_alpha4 = lo;
        v.notes.push_back("step 6: feasible interval is the single point " + lo.str());
    } else {
        v.witness_alpha4 = cmp < 0 ? QuadNum::rational(F.d(), rational_between(v.bmin4, v.bmax4)) : v.bmin4;
        v.notes.push_back("step 6: feasible interval lies outside (1/(16C^2), 16C^2)");
    }
    v.notes.push_back("step 6: B_min^4 <= B_max^4");
    return v;
}

bool monotonicity_check(const FracIdeal& I, const mpq_class& C, const mpq_class& Cp) {
    if (C < 1 || Cp < C) throw Error(ErrorCode::OutOfRange, "need 1 <= C <= C'");
    return !(test_c_reduced(I, C).reduced && !test_c_reduced(I, Cp).reduced);
}

} // namespace arak
