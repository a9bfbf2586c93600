#include "arak/oracle.hpp"

#include <algorithm>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

CensusEntry constraint_for(const EmbeddedBasis& B, const LatticePoint& p, const mpq_class& C) {
    CensusEntry c;
    c.s1 = p.s1;
    c.s2 = p.s2;
    c.g = p.g;
    c.e = B.field.embed(p.g);
    c.norm_sq = p.norm_sq;
    const mpq_class C2 = C * C;
    const QuadNum lhs = mpq_class(1) - C2 * (c.e.g1 * c.e.g1);  // 1 - C^2 g1^2
    const QuadNum coef = C2 * (c.e.g2 * c.e.g2) - mpq_class(1);  // C^2 g2^2 - 1
    const int sl = qsign(lhs), sc = qsign(coef);
    if (sc > 0) {
        c.kind = sl > 0 ? ConstraintKind::Lower : ConstraintKind::Always;
    } else if (sc < 0) {
        c.kind = sl < 0 ? ConstraintKind::Upper : ConstraintKind::Never;
    } else {
        c.kind = sl <= 0 ? ConstraintKind::Always : ConstraintKind::Never;
    }
    if (c.kind == ConstraintKind::Lower || c.kind == ConstraintKind::Upper) c.bound = lhs / coef;
    return c;
}

bool oracle_primitive(const FracIdeal& I) {
    if (!I.contains({1, 0})) throw Error(ErrorCode::OneNotInIdeal, "1 is not in I");
    const mpq_class inv_norm = 1 / I.norm();
    // 1 in I forces I^-1 into O_F, so N(I^-1) is a positive integer.
    const mpz_class limit = inv_norm.get_num() / inv_norm.get_den();
    for (mpz_class k = 2; k <= limit; ++k) {
        if (I.contains({mpq_class(1, k), 0})) return false;
    }
    return true;
}

OracleReport oracle_test(const FracIdeal& I, const OracleConfig& cfg, const Verdict* compare) {
    const mpq_class& C = cfg.C;
    const mpq_class C2 = C * C;
    const std::int64_t d = I.field().d();
    OracleReport r;
    r.bmin4 = QuadNum::rational(d, 1 / (16 * C2));
    r.bmax4 = QuadNum::rational(d, 16 * C2);
    auto finish = [&](bool verdict, std::string reason) {
        r.verdict = verdict;
        r.reason = std::move(reason);
        if (compare) r.agreement = compare->reduced == r.verdict;
        return r;
    };

    if (!I.contains({1, 0})) return finish(false, "1 not in I");
    if (!oracle_primitive(I)) return finish(false, "1 not primitive");

    const EmbeddedBasis B = embed_and_reduce(I);
    // Every S1 point has |g|^2 < 2/C^2.
    for (const auto& p : enumerate_bounded(B, 2 / C2, cfg.enum_budget)) {
        const Embedding e = B.field.embed(p.g);
        const bool inside = qsign(C2 * (e.g1 * e.g1) - mpq_class(1)) <= 0 &&
                            qsign(C2 * (e.g2 * e.g2) - mpq_class(1)) <= 0 && C2 * p.norm_sq < 2;
        if (inside) return finish(false, "S1 occupied");
    }
    if (C2 * B.g11 >= 2) return finish(true, "shortest vector outside the circle of radius sqrt(2)/C");

    r.radius_sq_used = kGRadiusFactor * C2 * B.covol_sq() * cfg.radius_slack * cfg.radius_slack;
    std::optional<QuadNum> lo, hi;
    bool never = false;
    for (const auto& p : enumerate_bounded(B, r.radius_sq_used, cfg.enum_budget)) {
        CensusEntry c = constraint_for(B, p, C);
        switch (c.kind) {
        case ConstraintKind::Lower:
            if (!lo || qcmp(*c.bound, *lo) > 0) lo = *c.bound;
            r.g_census.push_back(std::move(c));
            break;
        case ConstraintKind::Upper:
            if (!hi || qcmp(*c.bound, *hi) < 0) hi = *c.bound;
            r.g_census.push_back(std::move(c));
            break;
        case ConstraintKind::Never: never = true; break;
        case ConstraintKind::Always: break;
        }
    }
    if (lo) r.bmin4 = *lo;
    if (hi) r.bmax4 = *hi;
    // q ranges over (0, inf): an upper bound is always positive, so only lo vs hi matters.
    r.feasible_without_defaults = !never && (!lo || !hi || qcmp(*lo, *hi) <= 0);
    return finish(!never && qcmp(r.bmin4, r.bmax4) <= 0, "B_min^4 vs B_max^4 over the full G");
}

bool validate_witness(const FracIdeal& I, const mpq_class& C, const QuadNum& alpha4,
                      const mpq_class& radius_slack, std::uint64_t budget) {
    if (qsign(alpha4) <= 0) throw Error(ErrorCode::OutOfRange, "alpha^4 must be positive");
    const EmbeddedBasis B = embed_and_reduce(I);
    const mpq_class C2 = C * C;
    const mpq_class R_sq = std::max(mpq_class(kGRadiusFactor * C2 * B.covol_sq() * radius_slack * radius_slack),
                                    mpq_class(2 / C2));
    for (const auto& p : enumerate_bounded(B, R_sq, budget)) {
        const Embedding e = B.field.embed(p.g);
        const QuadNum lhs = mpq_class(1) - C2 * (e.g1 * e.g1);
        const QuadNum rhs = alpha4 * (C2 * (e.g2 * e.g2) - mpq_class(1));
        if (qcmp(lhs, rhs) > 0) return false;
    }
    return true;
}

} // namespace arak
