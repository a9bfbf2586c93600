#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arak/creduced.hpp"
#include "arak/error.hpp"
#include "arak/numtheory.hpp"
#include "arak/oracle.hpp"

using namespace arak;

namespace {

FracIdeal from_cols(std::int64_t d, mpq_class a, mpq_class b, mpq_class c, mpq_class e) {
    return ideal_from_matrix(make_field(d), {a, b, c, e});
}

// Z + (3 + sqrt 79)/10 Z; reaches the final stage with B_min = B_max.
FracIdeal tight_ideal() { return from_cols(79, 1, 0, mpq_class(3, 10), mpq_class(1, 10)); }

Candidate with(CandidateClass cls, const QuadNum& b4) {
    Candidate c;
    c.cls = cls;
    c.B4 = b4;
    return c;
}

} // namespace

TEST_CASE("maximal orders are reduced") {
    for (std::int64_t d : {2, 3, 5, 79, 499}) {
        const Verdict v = test_c_reduced(unit_ideal(make_field(d)), 1);
        CHECK(v.reduced);
        CHECK((v.stage == Stage::EarlyShortest || v.stage == Stage::BminBmax));
    }
}

TEST_CASE("half the maximal order") {
    const Verdict v7 = test_c_reduced(scale(unit_ideal(make_field(7)), mpq_class(1, 2)), 1);
    CHECK_FALSE(v7.reduced);
    CHECK(v7.stage == Stage::Primitivity);
    // N(I)^-1 = 4 exceeds sqrt(5): the norm test fires before primitivity.
    const Verdict v5 = test_c_reduced(scale(unit_ideal(make_field(5)), mpq_class(1, 2)), 1);
    CHECK_FALSE(v5.reduced);
    CHECK(v5.stage == Stage::NormBound);
}

TEST_CASE("1 outside the ideal") {
    const Verdict v = test_c_reduced(scale(unit_ideal(make_field(5)), 2), 1);
    CHECK_FALSE(v.reduced);
    CHECK(v.stage == Stage::ContainsOne);
}

TEST_CASE("inverse prime above 3 in Q(sqrt 79)") {
    const FracIdeal I = from_cols(79, 1, 0, mpq_class(2, 3), mpq_class(1, 3));
    const Verdict v = test_c_reduced(I, 1);
    CHECK(v.reduced);
    CHECK(v.stage == Stage::EarlyShortest);
    REQUIRE(v.witness_alpha4);
    CHECK(validate_witness(I, 1, *v.witness_alpha4));
    CHECK(oracle_test(I, OracleConfig{1}).verdict);
}

TEST_CASE("S1 occupants") {
    const EmbeddedBasis O = embed_and_reduce(unit_ideal(make_field(5)));
    CHECK_FALSE(s1_contains_nonzero(O, 1));
    CHECK_FALSE(s1_contains_nonzero(O, 2));
    const EmbeddedBasis H = embed_and_reduce(scale(unit_ideal(make_field(5)), mpq_class(1, 2)));
    const auto w = s1_contains_nonzero(H, 1);
    REQUIRE(w);
    CHECK(w->norm_sq == mpq_class(1, 2));
    CHECK(qcmp(w->g1 * w->g1, mpq_class(1, 4)) == 0);
}

TEST_CASE("classification of single vectors") {
    const EmbeddedBasis B = embed_and_reduce(unit_ideal(make_field(2)));
    REQUIRE(B.b1 == FieldElem{1, 0});
    const mpz_class t = B.b2.y.get_num();  // b2 = t sqrt 2, t = +-1
    const mpq_class R = g_radius_sq(B, 1);
    // sqrt2 - 1: C^2 g1^2 = 3 - 2 sqrt2 < 1 and C^2 g2^2 = 3 + 2 sqrt2 > 1.
    const Candidate c = classify(B, -1, t, 1, R);
    CHECK(c.cls == CandidateClass::G1);
    REQUIRE(c.B4);
    CHECK(*c.B4 == QuadNum(2, 3, -2));
    // 1: C^2 g1^2 = 1 exactly.
    CHECK(classify(B, 1, 0, 1, R).cls == CandidateClass::NotInG);
    // Outside the radius.
    CHECK(classify(B, 100, 0, 1, R).cls == CandidateClass::NotInG);
}

TEST_CASE("extrema over candidates") {
    const std::int64_t d = 2;
    const BminBmax none = bmin_bmax({}, 1, d);
    CHECK(none.bmin4 == QuadNum(d, mpq_class(1, 16), 0));
    CHECK(none.bmax4 == QuadNum(d, 16, 0));
    const BminBmax none2 = bmin_bmax({}, 2, d);
    CHECK(none2.bmin4 == QuadNum(d, mpq_class(1, 64), 0));
    CHECK(none2.bmax4 == QuadNum(d, 64, 0));

    const BminBmax one = bmin_bmax({with(CandidateClass::G1, QuadNum(d, 1, 0))}, 1, d);
    CHECK(one.bmin4 == QuadNum(d, 1, 0));
    CHECK(one.bmax4 == QuadNum(d, 16, 0));

    const BminBmax bad = bmin_bmax(
        {with(CandidateClass::G1, QuadNum(d, mpq_class(1, 2), 0)), with(CandidateClass::G2, QuadNum(d, mpq_class(1, 3), 0))},
        1, d);
    CHECK(bad.bmin4 == QuadNum(d, mpq_class(1, 2), 0));
    CHECK(bad.bmax4 == QuadNum(d, mpq_class(1, 3), 0));
    CHECK(qcmp(bad.bmin4, bad.bmax4) > 0);
}

TEST_CASE("G3 golden value with B_min = B_max") {
    const FracIdeal I = tight_ideal();
    const Verdict v = test_c_reduced(I, 1);
    CHECK(v.reduced);
    CHECK(v.stage == Stage::BminBmax);
    const QuadNum tight(79, mpq_class(83, 75), mpq_class(-4, 75));
    CHECK(v.bmin4 == tight);
    CHECK(v.bmax4 == tight);
    REQUIRE(v.witness_alpha4);
    CHECK(*v.witness_alpha4 == tight);
    CHECK(validate_witness(I, 1, tight));

    REQUIRE(v.candidates.size() == 6);
    const std::vector<std::pair<int, int>> coeffs{{1, 0}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}};
    const std::vector<CandidateClass> cls{CandidateClass::G2,    CandidateClass::NotInG, CandidateClass::G1,
                                          CandidateClass::NotInG, CandidateClass::G2,    CandidateClass::NotInG};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(v.candidates[i].s1 == coeffs[i].first);
        CHECK(v.candidates[i].s2 == coeffs[i].second);
        CHECK(v.candidates[i].cls == cls[i]);
    }
    CHECK(*v.candidates[4].B4 == QuadNum(79, mpq_class(18827, 7875), mpq_class(1924, 7875)));

    const OracleReport o = oracle_test(I, OracleConfig{1}, &v);
    CHECK(o.verdict);
    CHECK(o.bmin4 == tight);
    CHECK(o.bmax4 == tight);
    REQUIRE(o.agreement);
    CHECK(*o.agreement);
}

TEST_CASE("rational strictly between") {
    const QuadNum lo(2, 0, 1), hi(2, mpq_class(1, 1000), 1);
    const mpq_class r = rational_between(lo, hi);
    CHECK(qcmp(lo, r) < 0);
    CHECK(qcmp(hi, r) > 0);
}

TEST_CASE("monotonicity examples") {
    CHECK(monotonicity_check(unit_ideal(make_field(5)), 1, 2));
    CHECK(monotonicity_check(scale(unit_ideal(make_field(5)), mpq_class(1, 2)), 1, 2));
    CHECK(monotonicity_check(tight_ideal(), 1, mpq_class(6, 5)));
}

TEST_CASE("range filter does not change verdicts") {
    for (std::int64_t d : {5, 13, 79, 211}) {
        const QuadField F = make_field(d);
        for (long a = 2; a < 40; ++a) {
            for (long b = 0; b < a; ++b) {
                FracIdeal J = unit_ideal(F);
                try {
                    J = ideal_from_matrix(F, {a, 0, b, 1});
                } catch (const Error&) {
                    continue;
                }
                const FracIdeal I = ideal_inverse(J);
                for (const mpq_class& C : {mpq_class(1), mpq_class(3, 2)}) {
                    Config plain, filtered;
                    plain.C = filtered.C = C;
                    filtered.range_filter = true;
                    try {
                        CHECK(test_c_reduced(I, plain).reduced == test_c_reduced(I, filtered).reduced);
                    } catch (const Error& e) {
                        CHECK(e.code() == ErrorCode::BranchUndetermined);
                    }
                }
            }
        }
    }
}
