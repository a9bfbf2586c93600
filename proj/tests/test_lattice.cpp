#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "arak/error.hpp"
#include "arak/lattice.hpp"

using namespace arak;

namespace {

// Brute-force shortest vector over a coefficient box of the HNF basis.
mpq_class shortest_brute(const FracIdeal& I, int box) {
    const auto b = I.basis();
    mpq_class best = -1;
    for (int x = -box; x <= box; ++x)
        for (int y = -box; y <= box; ++y) {
            if (x == 0 && y == 0) continue;
            const FieldElem e = mpz_class(x) * b[0] + mpz_class(y) * b[1];
            const mpq_class n = I.field().inner(e, e);
            if (best < 0 || n < best) best = n;
        }
    return best;
}

} // namespace

TEST_CASE("reduced bases of maximal orders") {
    const EmbeddedBasis B5 = embed_and_reduce(unit_ideal(make_field(5)));
    CHECK(shortest_sq(B5) == 2);
    CHECK((B5.b1 == FieldElem{1, 0} || B5.b1 == FieldElem{-1, 0}));
    CHECK(shortest_sq(embed_and_reduce(unit_ideal(make_field(2)))) == 2);
    CHECK(shortest_sq(embed_and_reduce(scale(unit_ideal(make_field(5)), mpq_class(1, 2)))) == mpq_class(1, 2));

    const EmbeddedBasis B3 = embed_and_reduce(scale(unit_ideal(make_field(5)), 3));
    CHECK(shortest_sq(B3) == 18);
    CHECK(B3.covol_sq() == 81 * 5);
}

TEST_CASE("reduction is idempotent and satisfies the invariants") {
    std::mt19937_64 rng(4);
    for (std::int64_t d : {2, 3, 5, 79, 499}) {
        const QuadField F = make_field(d);
        for (int i = 0; i < 40; ++i) {
            const long a = static_cast<long>(rng() % 50) + 1;
            const FracIdeal I = ideal_generated_by(F, {{a, 0}, {static_cast<long>(rng() % 20), 1}});
            const EmbeddedBasis B = embed_and_reduce(I);
            CHECK(abs(B.mu) <= mpq_class(1, 2));
            CHECK(B.g11 <= B.g22);
            CHECK(qsign(B.e1.g1) > 0);
            CHECK(B.covol_sq() == I.norm() * I.norm() * F.delta());
            CHECK(shortest_sq(B) == shortest_brute(I, 60));
            const EmbeddedBasis again = reduce_basis(F, B.b1, B.b2);
            CHECK(again.b1 == B.b1);
            CHECK(again.g22 == B.g22);
        }
    }
}

TEST_CASE("bounded enumeration") {
    const EmbeddedBasis B = embed_and_reduce(unit_ideal(make_field(5)));
    const auto p1 = enumerate_bounded(B, mpq_class(5, 2));
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].norm_sq == 2);
    CHECK(enumerate_bounded(B, 2).empty());
    const auto p3 = enumerate_bounded(B, mpq_class(7, 2));
    CHECK(p3.size() == 3);
    std::multiset<mpq_class> norms;
    for (const auto& p : p3) norms.insert(p.norm_sq);
    CHECK(norms == std::multiset<mpq_class>{2, 3, 3});
    CHECK_THROWS_AS(enumerate_bounded(B, 1000000, 10), Error);
}

TEST_CASE("enumeration matches a brute-force count") {
    std::mt19937_64 rng(8);
    for (std::int64_t d : {6, 13, 79}) {
        const QuadField F = make_field(d);
        const FracIdeal I = ideal_inverse(ideal_generated_by(F, {{7, 0}, {static_cast<long>(rng() % 7), 1}}));
        const EmbeddedBasis B = embed_and_reduce(I);
        const mpq_class R = 20 * B.g11;
        const auto pts = enumerate_bounded(B, R);
        std::uint64_t brute = 0;
        const auto b = I.basis();
        for (int x = -400; x <= 400; ++x)
            for (int y = -400; y <= 400; ++y) {
                if (x == 0 && y == 0) continue;
                const FieldElem e = mpz_class(x) * b[0] + mpz_class(y) * b[1];
                if (F.inner(e, e) < R) ++brute;
            }
        CHECK(2 * pts.size() == brute);
        for (const auto& p : pts) {
            CHECK(p.norm_sq < R);
            CHECK(p.norm_sq == F.inner(p.g, p.g));
            CHECK((p.s2 > 0 || (p.s2 == 0 && p.s1 > 0)));
        }
    }
}
