#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <mpfr.h>

#include "arak/error.hpp"
#include "arak/qfield.hpp"

using namespace arak;

namespace {

// Sign via 200-bit MPFR evaluation; used only when the value is far from 0.
int sign_mpfr(const QuadNum& x) {
    mpfr_t s, a, b;
    mpfr_inits2(200, s, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(s, static_cast<unsigned long>(x.d()), MPFR_RNDN);
    mpfr_sqrt(s, s, MPFR_RNDN);
    mpfr_set_q(a, x.a().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b, x.b().get_mpq_t(), MPFR_RNDN);
    mpfr_fma(s, b, s, a, MPFR_RNDN);
    const int r = mpfr_sgn(s);
    mpfr_clears(s, a, b, static_cast<mpfr_ptr>(nullptr));
    return r;
}

} // namespace

TEST_CASE("field conventions") {
    const QuadField F5 = make_field(5);
    CHECK(F5.delta() == 5);
    CHECK(F5.omega() == QuadNum(5, mpq_class(1, 2), mpq_class(1, 2)));
    const QuadField F2 = make_field(2);
    CHECK(F2.delta() == 8);
    CHECK(F2.omega() == QuadNum(2, 0, 1));
    CHECK(make_field(79).delta() == 316);
    CHECK_THROWS_AS(make_field(12), Error);
    CHECK_THROWS_AS(make_field(1), Error);
    CHECK_THROWS_AS(make_field(-5), Error);
}

TEST_CASE("exact signs") {
    CHECK(qsign(QuadNum(2, 1, -1)) == -1);
    CHECK(qsign(QuadNum(2, 3, -2)) == 1);
    CHECK(qsign(QuadNum(7, 0, 0)) == 0);
    // 99^2 - 70^2 * 2 = 1: tiny positive value.
    CHECK(qsign(QuadNum(2, 99, -70)) == 1);
    CHECK(qsign(QuadNum(2, -99, 70)) == -1);
}

TEST_CASE("signs agree with high-precision evaluation and respect products") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-60, 60), den(1, 9);
    const std::int64_t ds[] = {2, 3, 5, 7, 79, 97, 499};
    for (int i = 0; i < 3000; ++i) {
        const std::int64_t d = ds[rng() % 7];
        auto q = [&] {
            mpq_class r(coef(rng), den(rng));
            r.canonicalize();
            return r;
        };
        const QuadNum x(d, q(), q());
        const QuadNum y(d, q(), q());
        if (!x.is_zero()) CHECK(qsign(x) == sign_mpfr(x));
        CHECK(qsign(x * y) == qsign(x) * qsign(y));
        CHECK(qcmp(x, y) == -qcmp(y, x));
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == QuadNum(d, 1, 0));
            CHECK(x.floor() == static_cast<long>(std::floor(x.to_double())));
        }
        CHECK((x * x.conj()).b() == 0);
        CHECK((x * x.conj()).a() == x.norm());
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("bounds bracket the value") {
    const QuadNum x(79, mpq_class(1, 3), mpq_class(-2, 7));
    const auto [lo, hi] = x.bounds(60);
    CHECK(qcmp(x, lo) >= 0);
    CHECK(qcmp(x, hi) <= 0);
    CHECK(hi - lo < mpq_class(1, 1000000));
}

TEST_CASE("embeddings and traces") {
    const QuadField F5 = make_field(5), F2 = make_field(2);
    const Embedding one = F5.embed({1, 0});
    CHECK(one.g1 == QuadNum(5, 1, 0));
    CHECK(one.g2 == QuadNum(5, 1, 0));
    CHECK(F5.inner({1, 0}, {1, 0}) == 2);
    const Embedding w = F5.embed({0, 1});
    CHECK(w.g1 == QuadNum(5, mpq_class(1, 2), mpq_class(1, 2)));
    CHECK(w.g2 == QuadNum(5, mpq_class(1, 2), mpq_class(-1, 2)));
    CHECK(F5.inner({0, 1}, {0, 1}) == 3);
    const Embedding r2 = F2.embed({0, 1});
    CHECK(r2.g2 == QuadNum(2, 0, -1));
    CHECK(F2.inner({0, 1}, {0, 1}) == 4);

    std::mt19937_64 rng(3);
    for (std::int64_t d : {5, 6, 13, 79}) {
        const QuadField F = make_field(d);
        for (int i = 0; i < 200; ++i) {
            mpq_class x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5 + 1));
            mpq_class y(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5 + 1));
            x.canonicalize();
            y.canonicalize();
            const FieldElem e{x, y};
            const Embedding em = F.embed(e);
            const QuadNum n2 = em.g1 * em.g1 + em.g2 * em.g2;
            CHECK(n2.is_rational());
            CHECK(n2.a() == F.trace(F.mul(e, e)));
            CHECK(F.norm(e) == (em.g1 * em.g2).a());
            CHECK(F.from_quad(F.to_quad(e)) == e);
            CHECK(F.conj(F.conj(e)) == e);
        }
    }
}
