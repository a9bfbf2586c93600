#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arak/census.hpp"
#include "arak/cubic.hpp"

using namespace arak;

namespace {

CubicSeed seed(long a, long b, long c, long d, mpq_class C = 1) {
    CubicSeed s;
    s.a = a;
    s.b = b;
    s.c = c;
    s.d = d;
    s.C = C;
    return s;
}

} // namespace

TEST_CASE("parallel census matches the serial full-ball reference") {
    const std::vector<CubicSeed> seeds{seed(1, 0, -3, 1), seed(2, 1, -3, -1), seed(3, 1, -5, -1), seed(5, 2, -9, -2)};
    for (const auto& s : seeds) {
        const CubicLattice L = build_cubic_lattice(s);
        for (const mpq_class& C : {mpq_class(1), mpq_class(6, 5), mpq_class(3, 2)}) {
            CensusParams p;
            p.C = C;
            p.chunk_rows = 7;
            const CensusResult fast = count_G_cubic(L, p);
            const CensusResult ref = count_G_cubic_reference(L, p);
            CHECK(fast.complete);
            CHECK(ref.complete);
            CHECK(fast.pairs == ref.pairs);
            CHECK(fast.per_slab == ref.per_slab);
            CHECK(fast.ambiguous == 0);
            CHECK(ref.ambiguous == 0);
            CHECK(fast.g_count == 2 * fast.pairs);
        }
    }
}

TEST_CASE("census is independent of the chunk size") {
    const CubicLattice L = build_cubic_lattice(seed(8573, -18461, 8432, 1461));
    CensusParams a, b;
    a.chunk_rows = 1;
    b.chunk_rows = 1000;
    CHECK(count_G_cubic(L, a).per_slab == count_G_cubic(L, b).per_slab);
}

TEST_CASE("desk seed satisfies the cardinality bound") {
    const CubicLattice L = build_cubic_lattice(seed(8573, -18461, 8432, 1461));
    REQUIRE(verify_cardG_conditions(L, 1).all());
    const CensusResult r = count_G_cubic(L, CensusParams{});
    CHECK(r.complete);
    CHECK(r.ambiguous == 0);
    CHECK(static_cast<long double>(r.g_count) >= r.lower_bound.to_ld());
    // Independent lower bound: (2/3) floor(sqrt(disc))/a.
    const mpz_class disc = cubic_disc(L.seed.a, L.seed.b, L.seed.c, L.seed.d);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    CHECK(mpq_class(r.g_count) * 3 * L.seed.a >= 2 * mpq_class(root));
}

TEST_CASE("vectors from the cardinality construction land in G") {
    const CubicLattice L = build_cubic_lattice(seed(8573, -18461, 8432, 1461));
    const mpq_class C = 1;
    const auto b1 = lattice_point(L, {1, 0, 0}), b2 = lattice_point(L, {0, 1, 0});
    // A coordinate where b1 is long.
    int j = 0;
    while (j < 3 && std::abs(b1[j].to_ld()) < 1.0L) ++j;
    REQUIRE(j < 3);
    const long double covol = L.covol.to_ld();
    const long s2_max = static_cast<long>(std::floor(covol / 3));
    int checked = 0;
    for (long s2 = -s2_max; s2 <= s2_max; s2 += std::max(1L, s2_max / 50)) {
        const long double lo = (-1.0L - s2 * b2[j].to_ld()) / b1[j].to_ld();
        const long double hi = (1.0L - s2 * b2[j].to_ld()) / b1[j].to_ld();
        const long s1 = static_cast<long>(std::ceil(std::min(lo, hi) + 1e-9L));
        REQUIRE(s1 < std::max(lo, hi));
        if (s1 == 0 && s2 == 0) continue;
        const auto e = original_coords(L, {s1, s2, 0});
        CHECK(g_membership(L, e, C) == 1);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("large seed is declined by the estimate") {
    CubicSeed w;
    w.a = mpz_class("10000000019");
    w.b = mpz_class("10218400019");
    w.c = mpz_class("-8813199073");
    w.d = mpz_class("-4923977196");
    const CubicLattice L = build_cubic_lattice(w);
    const CensusResult r = count_G_cubic(L, CensusParams{});
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.declined_reason.empty());
    CHECK(r.examined == 0);
    CHECK(r.lower_bound.to_ld() > 1.7e10L);
    CHECK(r.estimate > 1e12L);
}

TEST_CASE("budget stops a census with a partial count") {
    const CubicLattice L = build_cubic_lattice(seed(8573, -18461, 8432, 1461));
    CensusParams p;
    p.budget = 300'000;  // above the estimate, below the slab total
    p.chunk_rows = 4;
    const CensusResult full = count_G_cubic(L, CensusParams{});
    p.budget = full.examined / 2;
    const CensusResult r = count_G_cubic(L, p);
    if (r.declined_reason.empty()) {
        CHECK_FALSE(r.complete);
        CHECK(r.pairs <= full.pairs);
    }
}

TEST_CASE("empty shell when delta is below the shortest vector") {
    for (const auto& s : {seed(1, 0, -3, 1), seed(2, 1, -3, -1)}) {
        const CubicLattice L = build_cubic_lattice(s);
        CensusParams p;
        const CensusResult r = count_G_cubic(L, p);
        if (r.delta.to_ld() * r.delta.to_ld() <
            mpq_class(exact_norm_sq(L, original_coords(L, {1, 0, 0}))).get_d())
            CHECK(r.g_count == 0);
        else
            CHECK(r.g_count > 0);
    }
}
