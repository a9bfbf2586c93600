#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arak/cubic.hpp"
#include "arak/error.hpp"
#include "arak/numtheory.hpp"

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

CubicSeed large_seed() {
    CubicSeed s;
    s.a = mpz_class("10000000019");
    s.b = mpz_class("10218400019");
    s.c = mpz_class("-8813199073");
    s.d = mpz_class("-4923977196");
    return s;
}

// Desk seed found by the generator at C = 1, a in [1000, 10000], rng seed 1.
CubicSeed desk_seed() { return seed(8573, -18461, 8432, 1461); }

} // namespace

TEST_CASE("discriminants") {
    const CubicSeed w = large_seed();
    CHECK(cubic_disc(w.a, w.b, w.c, w.d) == mpz_class("70862499223222398531211367826392679055149"));
    CHECK(cubic_disc(1, 0, -1, 0) == 4);
    CHECK(cubic_disc(1, 0, 0, -2) == -108);
    CHECK(cubic_disc(1, 0, -3, 1) == 81);
}

TEST_CASE("discriminant against the root product") {
    for (const CubicSeed& s : {desk_seed(), seed(2, 1, -3, -1), large_seed()}) {
        const auto r = real_roots(s, 256);
        const BigFloat a(s.a, 256);
        const BigFloat v = (r[0] - r[1]) * (r[0] - r[2]) * (r[1] - r[2]);
        const BigFloat prod = a * a * a * a * v * v;
        const BigFloat exact(cubic_disc(s.a, s.b, s.c, s.d), 256);
        CHECK((abs(prod - exact) / exact).to_double() < 1e-24);
    }
    CHECK_THROWS_AS(real_roots(seed(1, 0, 0, -2), 128), Error);
}

TEST_CASE("seed checks") {
    const SeedChecks w = check_seed(large_seed());
    CHECK(w.irreducible);
    CHECK(w.a_prime);
    CHECK(w.disc_positive);
    CHECK(w.squarefree != Squarefree::No);

    const SeedChecks r = check_seed(seed(1, 0, -1, 0));
    CHECK_FALSE(r.irreducible);
    REQUIRE(r.rational_root);

    const SeedChecks s = check_seed(seed(2, 1, -3, -1));
    CHECK(s.disc == 229);
    CHECK(s.irreducible);
    CHECK(s.squarefree == Squarefree::Yes);
    CHECK(s.a_prime);

    // (2X - 1)(X^2 - 3) has the rational root 1/2.
    const SeedChecks h = check_seed(seed(2, -1, -6, 3));
    CHECK_FALSE(h.irreducible);
    REQUIRE(h.rational_root);
    CHECK(*h.rational_root == mpq_class(1, 2));

    CHECK_FALSE(check_seed(seed(12, 1, -30, -1)).a_prime);
}

TEST_CASE("lattice covolume matches sqrt(disc)/a") {
    for (const CubicSeed& s : {desk_seed(), seed(2, 1, -3, -1), large_seed()}) {
        const CubicLattice L = build_cubic_lattice(s);
        CHECK(L.covol_relerr.to_double() < 1e-20);
        CHECK(index_R_in_I(s) == s.a);
    }
}

TEST_CASE("reduced basis is short and b1 shortest") {
    const CubicLattice L = build_cubic_lattice(large_seed());
    CHECK(exact_norm_sq(L, original_coords(L, {1, 0, 0})) < 3);
    for (int k = 0; k < 3; ++k) {
        const auto e = original_coords(L, {k == 0 ? 1 : 0, k == 1 ? 1 : 0, k == 2 ? 1 : 0});
        const auto g = lattice_point(L, {k == 0 ? 1 : 0, k == 1 ? 1 : 0, k == 2 ? 1 : 0});
        const BigFloat n = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
        const BigFloat exact(exact_norm_sq(L, e), 256);
        CHECK((abs(n - exact) / exact).to_double() < 1e-30);
    }
}

TEST_CASE("large seed: bound arithmetic") {
    const CubicSeed w = large_seed();
    const mpz_class disc = cubic_disc(w.a, w.b, w.c, w.d);
    CHECK(index_R_in_I(w) == w.a);
    CHECK(covol_exceeds_disc_quarter(disc, w.a, mpq_class(8, 5)));
    CHECK(covol_exceeds(disc, w.a, mpq_class(3, 2) * mpq_class(17, 1) * mpz_class("1000000000")));
    CHECK_FALSE(covol_exceeds(disc, w.a, mpz_class("30000000000")));
    // Independent check by integer square roots: isqrt(disc)/a vs 2.662e10.
    const mpz_class r = isqrt(disc);
    CHECK(r / w.a == 26620011073);
}

TEST_CASE("large seed: all four conditions") {
    const CubicLattice L = build_cubic_lattice(large_seed());
    const CardGConditions c = verify_cardG_conditions(L, 1);
    CHECK(c.one_primitive);
    CHECK(c.s1_empty);
    CHECK(c.b1_short);
    CHECK(c.covol_at_least_10);
    CHECK(c.s1_uncertified == 0);
}

TEST_CASE("composite a flags primitivity") {
    const CubicSeed s = seed(4, 1, -9, -1);
    REQUIRE(cubic_disc(s.a, s.b, s.c, s.d) > 0);
    const CardGConditions c = verify_cardG_conditions(build_cubic_lattice(s), 1);
    CHECK_FALSE(c.one_primitive);
    CHECK_FALSE(c.notes.empty());
}

TEST_CASE("exact coordinate ties") {
    const CubicLattice L = build_cubic_lattice(desk_seed());
    // g = 1 has every coordinate equal to 1 = 1/C.
    for (int i = 0; i < 3; ++i) CHECK(coord_abs_cmp(L, {1, 0, 0}, i, 1) == 0);
    CHECK(coord_abs_cmp(L, {1, 0, 0}, 0, 2) == 1);
    CHECK(coord_abs_cmp(L, {0, 0, 0}, 0, 1) == -1);
}

TEST_CASE("cuboid coefficient box") {
    const CubicLattice L = build_cubic_lattice(desk_seed());
    const auto box = cuboid_coefficient_box(L, 1);
    for (long double b : box) CHECK(b > 0);
    // No lattice point inside the box lies in the open cuboid of the shell.
    const long bx = static_cast<long>(box[0]), by = static_cast<long>(box[1]), bz = static_cast<long>(box[2]);
    for (long x = -bx; x <= bx; ++x)
        for (long y = -by; y <= by; ++y)
            for (long z = -bz; z <= bz; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                const auto e = original_coords(L, {x, y, z});
                if (exact_norm_sq(L, e) >= 3) continue;
                bool inside = true;
                for (int i = 0; i < 3; ++i) inside = inside && slab_test(L, e, i, 1) < 0;
                CHECK_FALSE(inside);
            }
}

TEST_CASE("covolume error is certified at every precision") {
    for (unsigned prec : {64u, 128u, 512u}) {
        const CubicLattice L = build_cubic_lattice(large_seed(), prec);
        BigFloat bound(1L, prec + kGuardBits);
        mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec), MPFR_RNDN);
        CHECK(L.covol_relerr < bound);
    }
}

TEST_CASE("generator") {
    GenParams p;
    p.C = 1;
    p.a_lo = 1000;
    p.a_hi = 10000;
    p.seed = 1;
    const GenResult r = gen_search(p);
    CHECK(r.seed == desk_seed());
    CHECK(r.checks.squarefree == Squarefree::Yes);
    CHECK(r.checks.irreducible);
    CHECK(r.conditions.all());
    CHECK(gen_search(p).seed == r.seed);

    GenParams none = p;
    none.a_lo = 24;
    none.a_hi = 28;
    none.max_attempts = 500;
    CHECK_THROWS_AS(gen_search(none), Error);

    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto c = gen_candidate(p, i);
        if (!c) continue;
        CHECK(is_prime(c->a));
        CHECK(c->a >= 1000);
        CHECK(c->a <= 10000);
    }
}
