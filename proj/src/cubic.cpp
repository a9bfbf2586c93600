#include "arak/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arak/enum3.hpp"
#include "arak/error.hpp"
#include "arak/rng.hpp"

namespace arak {

mpz_class cubic_disc(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

namespace {

mpz_class eval_scaled(const CubicSeed& s, const mpz_class& p, const mpz_class& q) {
    // q^3 P(p/q)
    return s.a * p * p * p + s.b * p * p * q + s.c * p * q * q + s.d * q * q * q;
}

std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
    const Factorization f = factor(abs(n));
    if (!f.unfactored.empty()) return std::nullopt;
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : f.primes) {
        const std::size_t m = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

BigFloat horner(const CubicSeed& s, const BigFloat& x, mpfr_prec_t w) {
    BigFloat r(s.a, w);
    r = r * x + BigFloat(s.b, w);
    r = r * x + BigFloat(s.c, w);
    return r * x + BigFloat(s.d, w);
}

BigFloat horner_deriv(const CubicSeed& s, const BigFloat& x, mpfr_prec_t w) {
    BigFloat r(mpz_class(3 * s.a), w);
    r = r * x + BigFloat(mpz_class(2 * s.b), w);
    return r * x + BigFloat(s.c, w);
}

BigFloat pow2(long e, mpfr_prec_t w) {
    BigFloat r(1L, w);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

BigFloat to_prec(const BigFloat& x, mpfr_prec_t w) {
    BigFloat r(w);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat dot(const std::array<BigFloat, 3>& u, const std::array<BigFloat, 3>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

BigFloat det(const std::array<std::array<BigFloat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

struct Gso {
    std::array<std::array<BigFloat, 3>, 3> mu;
    std::array<BigFloat, 3> B;  // |b_k*|^2
};

Gso gram_schmidt(const std::array<std::array<BigFloat, 3>, 3>& b, mpfr_prec_t w) {
    Gso g{{{{BigFloat(w), BigFloat(w), BigFloat(w)},
            {BigFloat(w), BigFloat(w), BigFloat(w)},
            {BigFloat(w), BigFloat(w), BigFloat(w)}}},
          {BigFloat(w), BigFloat(w), BigFloat(w)}};
    std::array<std::array<BigFloat, 3>, 3> star = b;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            g.mu[i][j] = dot(b[i], star[j]) / g.B[j];
            for (int k = 0; k < 3; ++k) star[i][k] -= g.mu[i][j] * star[j][k];
        }
        g.B[i] = dot(star[i], star[i]);
    }
    return g;
}

// Unimodular matrix whose first row is the primitive vector x.
std::array<std::array<mpz_class, 3>, 3> complete_to_basis(std::array<mpz_class, 3> x) {
    // Column operations V with x V = (1, 0, 0); the inverse of V has first row x.
    std::array<std::array<mpz_class, 3>, 3> V;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) V[r][c] = r == c ? 1 : 0;
    for (;;) {
        int piv = -1, nonzero = 0;
        for (int i = 0; i < 3; ++i) {
            if (x[i] == 0) continue;
            ++nonzero;
            if (piv < 0 || abs(x[i]) < abs(x[piv])) piv = i;
        }
        if (piv < 0) throw std::logic_error("zero vector has no basis completion");
        if (nonzero == 1) {
            if (abs(x[piv]) != 1) throw std::logic_error("vector is not primitive");
            if (x[piv] < 0)
                for (int r = 0; r < 3; ++r) V[r][piv] = -V[r][piv];
            for (int r = 0; r < 3; ++r) std::swap(V[r][0], V[r][piv]);
            break;
        }
        for (int j = 0; j < 3; ++j) {
            if (j == piv || x[j] == 0) continue;
            mpz_class q;
            mpz_tdiv_q(q.get_mpz_t(), x[j].get_mpz_t(), x[piv].get_mpz_t());
            x[j] -= q * x[piv];
            for (int r = 0; r < 3; ++r) V[r][j] -= q * V[r][piv];
        }
    }
    // Adjugate; det V = +-1.
    std::array<std::array<mpz_class, 3>, 3> inv;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
            inv[r][c] = V[r1][c1] * V[r2][c2] - V[r1][c2] * V[r2][c1];
        }
    const mpz_class dt = V[0][0] * inv[0][0] + V[0][1] * inv[1][0] + V[0][2] * inv[2][0];
    if (dt == -1)
        for (auto& row : inv)
            for (auto& e : row) e = -e;
    return inv;
}

// Coefficients (over the current basis) of a vector strictly shorter than b1,
// the shortest such one found by enumeration; nullopt when b1 is shortest.
std::optional<std::array<mpz_class, 3>> shorter_than_b1(const CubicLattice& L);

} // namespace

SeedChecks check_seed(const CubicSeed& seed, const FactorEffort& effort) {
    SeedChecks r;
    if (seed.a == 0) throw Error(ErrorCode::InputError, "leading coefficient a must be nonzero");
    r.disc = cubic_disc(seed.a, seed.b, seed.c, seed.d);
    r.disc_positive = r.disc > 0;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), seed.a.get_mpz_t(), seed.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), seed.c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), seed.d.get_mpz_t());
    r.gcd_one = g == 1;
    r.a_prime = seed.a > 0 && is_prime(seed.a);

    // Rational root test: a root p/q in lowest terms has p | d and q | a.
    if (seed.d == 0) {
        r.rational_root = mpq_class(0);
    } else {
        const auto dp = divisors(seed.d), dq = divisors(seed.a);
        if (dp && dq) {
            for (const auto& q : *dq) {
                for (const auto& p : *dp) {
                    for (int sgn : {1, -1}) {
                        const mpz_class sp = sgn * p;
                        if (!r.rational_root && eval_scaled(seed, sp, q) == 0) {
                            r.rational_root = mpq_class(sp, q);
                            r.rational_root->canonicalize();
                        }
                    }
                }
            }
        } else if (r.disc_positive) {
            // q | a, so a * root is an integer for every rational root.
            for (const auto& beta : real_roots(seed, 128)) {
                const mpz_class m = (beta * BigFloat(seed.a, beta.prec())).round_z();
                if (!r.rational_root && eval_scaled(seed, m, seed.a) == 0) r.rational_root = mpq_class(m, seed.a);
            }
        }
    }
    r.irreducible = !r.rational_root.has_value();
    if (r.disc != 0) {
        r.disc_factorization = factor(abs(r.disc), effort);
        r.squarefree = r.disc_factorization.status;
    } else {
        r.squarefree = Squarefree::No;
    }
    return r;
}

std::array<BigFloat, 3> real_roots(const CubicSeed& seed, unsigned prec) {
    const mpz_class disc = cubic_disc(seed.a, seed.b, seed.c, seed.d);
    if (disc <= 0) throw Error(ErrorCode::NotTotallyReal, "discriminant must be positive for three real roots");
    const mpfr_prec_t w = prec + 32;
    const mpq_class A(seed.a), B(seed.b), C(seed.c), D(seed.d);
    // x = t - B/(3A) gives t^3 + p t + q.
    const mpq_class p = (3 * A * C - B * B) / (3 * A * A);
    const mpq_class q = (2 * B * B * B - 9 * A * B * C + 27 * A * A * D) / (27 * A * A * A);
    const BigFloat P(p, w), Q(q, w), three(3L, w);
    const BigFloat m = sqrt(-P / three) * 2;
    BigFloat arg = (three * Q / (P * 2)) * sqrt(-three / P);
    if (cmp(arg, BigFloat(1L, w)) > 0) arg = BigFloat(1L, w);
    if (cmp(arg, BigFloat(-1L, w)) < 0) arg = BigFloat(-1L, w);
    const BigFloat theta = acos(arg) / three;
    const BigFloat third_turn = BigFloat::pi(w) * 2 / three;
    const BigFloat shift(mpq_class(-B / (3 * A)), w);
    std::array<BigFloat, 3> roots{BigFloat(w), BigFloat(w), BigFloat(w)};
    for (int k = 0; k < 3; ++k) {
        BigFloat x = m * cos(theta - third_turn * k) + shift;
        for (int it = 0; it < 6; ++it) {
            const BigFloat dp = horner_deriv(seed, x, w);
            if (dp.sign() == 0) break;
            x -= horner(seed, x, w) / dp;
        }
        roots[k] = to_prec(x, prec);
    }
    std::sort(roots.begin(), roots.end(), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    return roots;
}

BigFloat CubicLattice::norm(int k) const { return sqrt(dot(basis[k], basis[k])); }

CubicLattice build_cubic_lattice(const CubicSeed& seed, unsigned prec) {
    const mpfr_prec_t w = prec + kGuardBits;
    CubicLattice L{seed, prec, {}, cubic_disc(seed.a, seed.b, seed.c, seed.d),
                   {BigFloat(w), BigFloat(w), BigFloat(w)},
                   {{{BigFloat(w), BigFloat(w), BigFloat(w)},
                     {BigFloat(w), BigFloat(w), BigFloat(w)},
                     {BigFloat(w), BigFloat(w), BigFloat(w)}}},
                   {},
                   BigFloat(w), BigFloat(w), BigFloat(w)};
    if (seed.a <= 0) throw Error(ErrorCode::InputError, "leading coefficient a must be positive");
    L.roots = real_roots(seed, static_cast<unsigned>(w));

    const mpq_class e1(-seed.b, seed.a), e2(seed.c, seed.a), e3(-seed.d, seed.a);
    auto& ps = L.power_sums;
    ps[0] = 3;
    ps[1] = e1;
    ps[2] = e1 * ps[1] - 2 * e2;
    ps[3] = e1 * ps[2] - e2 * ps[1] + 3 * e3;
    ps[4] = e1 * ps[3] - e2 * ps[2] + e3 * ps[1];
    for (auto& x : ps) x.canonicalize();

    const BigFloat a(seed.a, w);
    // disc = a^4 prod (beta_i - beta_j)^2, checked against the exact value.
    {
        const auto& r = L.roots;
        const BigFloat v = (r[0] - r[1]) * (r[0] - r[2]) * (r[1] - r[2]);
        const BigFloat a2 = a * a;
        const BigFloat from_roots = a2 * a2 * v * v;
        const BigFloat exact(L.disc, w);
        if (cmp(abs(from_roots - exact) / exact, pow2(-static_cast<long>(prec), w)) > 0) {
            throw Error(ErrorCode::PrecisionInsufficient, "root product does not reproduce the discriminant");
        }
    }

    std::array<std::array<BigFloat, 3>, 3> v;
    for (int i = 0; i < 3; ++i) {
        v[0][i] = BigFloat(1L, w);
        v[1][i] = L.roots[i];
        v[2][i] = a * L.roots[i] * L.roots[i];
    }
    auto& U = L.transform;
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) U[k][m] = k == m ? 1 : 0;
    auto rebuild = [&] {
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) {
                BigFloat s(w);
                for (int m = 0; m < 3; ++m)
                    if (U[k][m] != 0) s += BigFloat(U[k][m], w) * v[m][i];
                L.basis[k][i] = s;
            }
    };
    rebuild();
    const BigFloat three_quarters(mpq_class(3, 4), w);
    auto lll = [&] {
    int k = 1;
    for (int iter = 0; k < 3; ++iter) {
        if (iter > 100'000) throw Error(ErrorCode::PrecisionInsufficient, "LLL did not terminate");
        for (int j = k - 1; j >= 0; --j) {
            const Gso g = gram_schmidt(L.basis, w);
            const mpz_class r = g.mu[k][j].round_z();
            if (r == 0) continue;
            for (int m = 0; m < 3; ++m) U[k][m] -= r * U[j][m];
            rebuild();
        }
        const Gso g = gram_schmidt(L.basis, w);
        const BigFloat mu = g.mu[k][k - 1];
        if (cmp(g.B[k], (three_quarters - mu * mu) * g.B[k - 1]) >= 0) {
            ++k;
        } else {
            std::swap(U[k], U[k - 1]);
            rebuild();
            k = std::max(k - 1, 1);
        }
    }
    };
    lll();
    // A shortest vector placed first survives another pass: the swap test at
    // k = 1 would need a vector shorter than b1.
    if (const auto s = shorter_than_b1(L)) {
        const auto V = complete_to_basis(*s);
        std::array<std::array<mpz_class, 3>, 3> NU;
        for (int r = 0; r < 3; ++r)
            for (int m = 0; m < 3; ++m) {
                NU[r][m] = 0;
                for (int j = 0; j < 3; ++j) NU[r][m] += V[r][j] * U[j][m];
            }
        U = NU;
        rebuild();
        lll();
    }

    L.covol = abs(det(L.basis));
    L.covol_exact = sqrt(BigFloat(L.disc, w)) / a;
    L.covol_relerr = abs(L.covol - L.covol_exact) / L.covol_exact;
    if (cmp(L.covol_relerr, pow2(-static_cast<long>(prec), w)) > 0) {
        throw Error(ErrorCode::PrecisionInsufficient, "determinant does not match sqrt(disc)/a");
    }
    return L;
}

CubicLattice build_cubic_lattice(const CubicSeed& seed) {
    for (unsigned p = std::max(seed.precision_bits, 64u);; p *= 2) {
        try {
            return build_cubic_lattice(seed, p);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PrecisionInsufficient || p * 2 > kPrecisionCap) throw;
        }
    }
}

std::array<BigFloat, 3> lattice_point(const CubicLattice& L, const std::array<mpz_class, 3>& s) {
    const mpfr_prec_t w = L.prec + kGuardBits;
    std::array<BigFloat, 3> g{BigFloat(w), BigFloat(w), BigFloat(w)};
    for (int k = 0; k < 3; ++k) {
        if (s[k] == 0) continue;
        const BigFloat sk(s[k], w);
        for (int i = 0; i < 3; ++i) g[i] += sk * L.basis[k][i];
    }
    return g;
}

std::array<mpz_class, 3> original_coords(const CubicLattice& L, const std::array<mpz_class, 3>& s) {
    std::array<mpz_class, 3> e{0, 0, 0};
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) e[m] += s[k] * L.transform[k][m];
    return e;
}

namespace {

// max_i |beta_i|^j for j = 1, 2
std::pair<BigFloat, BigFloat> root_scale(const CubicLattice& L) {
    BigFloat m = abs(L.roots[0]);
    for (int i = 1; i < 3; ++i)
        if (abs(L.roots[i]) > m) m = abs(L.roots[i]);
    return {m, m * m};
}

} // namespace

BigFloat coordinate_margin(const CubicLattice& L, const std::array<mpz_class, 3>& s) {
    const mpfr_prec_t w = L.prec + kGuardBits;
    const auto [r1, r2] = root_scale(L);
    const std::array<BigFloat, 3> vmax{BigFloat(1L, w), r1, r2 * BigFloat(L.seed.a, w)};
    BigFloat scale(1L, w);
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) scale += BigFloat(mpz_class(abs(s[k] * L.transform[k][m])), w) * vmax[m];
    return scale * pow2(-static_cast<long>(L.prec), w);
}

std::array<BigFloat, 3> embed_original(const CubicLattice& L, const std::array<mpz_class, 3>& e, BigFloat* margin) {
    const mpfr_prec_t w = L.prec + kGuardBits;
    const BigFloat x(e[0], w), y(e[1], w), za(mpz_class(e[2] * L.seed.a), w);
    std::array<BigFloat, 3> g{BigFloat(w), BigFloat(w), BigFloat(w)};
    for (int i = 0; i < 3; ++i) g[i] = x + y * L.roots[i] + za * L.roots[i] * L.roots[i];
    if (margin) {
        const auto [r1, r2] = root_scale(L);
        *margin = (abs(x) + abs(y) * r1 + abs(za) * r2 + BigFloat(1L, w)) * pow2(-static_cast<long>(L.prec), w);
    }
    return g;
}

mpq_class exact_norm_sq(const CubicLattice& L, const std::array<mpz_class, 3>& e) {
    const auto& p = L.power_sums;
    const mpz_class& x = e[0];
    const mpz_class& y = e[1];
    const mpz_class z = e[2] * L.seed.a;  // g = x + y beta + z beta^2
    mpq_class t = x * x * p[0] + 2 * x * y * p[1] + (y * y + 2 * x * z) * p[2] + 2 * y * z * p[3] + z * z * p[4];
    t.canonicalize();
    return t;
}

namespace {

std::optional<std::array<mpz_class, 3>> shorter_than_b1(const CubicLattice& L) {
    LMat3 G{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) G[k][l] = dot(L.basis[k], L.basis[l]).to_ld();
    const ReducedGram red = lll_gram(G);
    mpq_class best = exact_norm_sq(L, original_coords(L, {1, 0, 0}));
    std::optional<std::array<mpz_class, 3>> arg;
    const long double R = mpq_class(best).get_d() * (1 + 1e-6L);
    for (const auto& row : fp_rows(fp_form(red.gram), R)) {
        for (std::int64_t x1 = row.x1_lo; x1 <= row.x1_hi; ++x1) {
            const std::array<std::int64_t, 3> x{x1, row.x2, row.x3};
            std::array<mpz_class, 3> s{0, 0, 0};
            for (int k = 0; k < 3; ++k)
                for (int m = 0; m < 3; ++m) s[m] += mpz_class(static_cast<long>(x[k])) * red.T[k][m];
            const mpq_class n = exact_norm_sq(L, original_coords(L, s));
            if (n < best) {
                best = n;
                arg = s;
            }
        }
    }
    return arg;
}

} // namespace

std::optional<int> coord_abs_cmp(const CubicLattice& L, const std::array<mpz_class, 3>& e, int i, const mpq_class& C) {
    if (e[1] == 0 && e[2] == 0) {
        const mpq_class v = C * abs(e[0]);
        return v < 1 ? -1 : (v == 1 ? 0 : 1);
    }
    // sigma_i(g) is irrational here, so it never equals +/- 1/C.
    BigFloat margin;
    const auto g = embed_original(L, e, &margin);
    const int c = certified_cmp(abs(g[i]), BigFloat(mpq_class(1 / C), g[i].prec()), margin);
    if (c == 0) return std::nullopt;
    return c;
}

int slab_test(const CubicLattice& L, const std::array<mpz_class, 3>& e, int i, const mpq_class& C) {
    const auto c = coord_abs_cmp(L, e, i, C);
    if (!c) return 0;
    return *c < 0 ? 1 : -1;
}

bool covol_exceeds(const mpz_class& disc, const mpz_class& a, const mpq_class& t) {
    if (t <= 0) return true;
    // sqrt(disc)/a > t  <=>  disc * den^2 > num^2 * a^2
    const mpz_class& n = t.get_num();
    const mpz_class& dn = t.get_den();
    return disc * dn * dn > n * n * a * a;
}

bool covol_exceeds_disc_quarter(const mpz_class& disc, const mpz_class& a, const mpq_class& k) {
    if (k <= 0) return true;
    // disc/a^2 > k^2 sqrt(disc)  <=>  sqrt(disc) > k^2 a^2  <=>  disc > k^4 a^4
    const mpz_class& n = k.get_num();
    const mpz_class& dn = k.get_den();
    const mpz_class n2 = n * n, d2 = dn * dn, a2 = a * a;
    return disc * d2 * d2 > n2 * n2 * a2 * a2;
}

mpz_class index_R_in_I(const CubicSeed& seed) {
    // Rows: 1, a beta, a beta^2 + b beta over {1, beta, a beta^2}.
    const std::array<std::array<mpz_class, 3>, 3> m{{{1, 0, 0}, {0, seed.a, 0}, {0, seed.b, 1}}};
    const mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return abs(det);
}

CardGConditions verify_cardG_conditions(const CubicLattice& L, const mpq_class& C) {
    CardGConditions r;
    const mpq_class r2 = 3 / (C * C);  // |x|^2 bound of S1

    r.one_primitive = L.seed.a > 0 && is_prime(L.seed.a);
    if (!r.one_primitive) r.notes.emplace_back("a is not prime: primitivity of 1 is not certified");

    r.b1_short = exact_norm_sq(L, original_coords(L, {1, 0, 0})) < r2;
    r.covol_at_least_10 = L.disc >= 100 * L.seed.a * L.seed.a;

    LMat3 G{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) G[k][l] = dot(L.basis[k], L.basis[l]).to_ld();
    const ReducedGram red = lll_gram(G);
    const long double R = r2.get_d() * (1 + 1e-9L) + 1e-12L;
    bool occupied = false;
    for (const auto& row : fp_rows(fp_form(red.gram), R)) {
        for (std::int64_t x1 = row.x1_lo; x1 <= row.x1_hi; ++x1) {
            const std::array<std::int64_t, 3> x{x1, row.x2, row.x3};
            std::array<mpz_class, 3> s{0, 0, 0};
            for (int k = 0; k < 3; ++k)
                for (int m = 0; m < 3; ++m) s[m] += mpz_class(static_cast<long>(x[k])) * red.T[k][m];
            const auto e = original_coords(L, s);
            if (exact_norm_sq(L, e) >= r2) continue;
            ++r.s1_ball_points;
            bool inside = true, undecided = false;
            for (int i = 0; i < 3 && inside; ++i) {
                const auto c = coord_abs_cmp(L, e, i, C);
                if (!c) undecided = true;
                else if (*c > 0) inside = false;
            }
            if (inside && undecided) {
                ++r.s1_uncertified;
            } else if (inside && !occupied) {
                occupied = true;
                r.notes.push_back("nonzero S1 point over {1, beta, a beta^2}: (" + e[0].get_str() + ", " +
                                  e[1].get_str() + ", " + e[2].get_str() + ")");
            }
        }
    }
    r.s1_empty = !occupied && r.s1_uncertified == 0;
    if (r.s1_uncertified) r.notes.emplace_back("S1 membership undecided at the configured precision");
    return r;
}

std::array<long double, 3> cuboid_coefficient_box(const CubicLattice& L, const mpq_class& C) {
    const mpfr_prec_t w = L.prec + kGuardBits;
    const Gso g = gram_schmidt(L.basis, w);
    const long double r = std::sqrt(3.0L) / C.get_d();
    return {2.0L * 2.25L * r / std::sqrt(g.B[0].to_ld()), 3.0L * r / std::sqrt(g.B[1].to_ld()),
            2.0L * r / std::sqrt(g.B[2].to_ld())};
}

std::optional<CubicSeed> gen_candidate(const GenParams& params, std::uint64_t index) {
    auto rng = substream(params.seed, index);
    const std::uint64_t lo = params.a_lo.get_ui(), hi = params.a_hi.get_ui();
    const mpz_class a(static_cast<unsigned long>(lo + rng() % (hi - lo + 1)));
    if (!is_prime(a)) return std::nullopt;
    const double invC = 1.0 / params.C.get_d();
    const double side = std::sqrt(3.0) * invC;
    for (int tries = 0; tries < 64; ++tries) {
        std::array<double, 3> beta{};
        for (auto& x : beta) x = (2 * unit_real(rng) - 1) * side;
        const double n2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
        const double mx = std::max({std::abs(beta[0]), std::abs(beta[1]), std::abs(beta[2])});
        if (!(n2 > invC * invC && n2 < 3 * invC * invC && mx > invC)) continue;
        const double e1 = beta[0] + beta[1] + beta[2];
        const double e2 = beta[0] * beta[1] + beta[0] * beta[2] + beta[1] * beta[2];
        const double e3 = beta[0] * beta[1] * beta[2];
        const double ad = a.get_d();
        CubicSeed s;
        s.a = a;
        s.b = mpz_class(static_cast<long>(std::llround(-ad * e1)));
        s.c = mpz_class(static_cast<long>(std::llround(ad * e2)));
        s.d = mpz_class(static_cast<long>(std::llround(-ad * e3)));
        s.C = params.C;
        s.precision_bits = params.precision_bits;
        return s;
    }
    return std::nullopt;
}

namespace {

std::optional<GenResult> evaluate(const GenParams& params, std::uint64_t index) {
    const auto seed = gen_candidate(params, index);
    if (!seed) return std::nullopt;
    try {
        GenResult r;
        r.seed = *seed;
        r.checks = check_seed(*seed);
        if (!r.checks.ok()) return std::nullopt;
        const CubicLattice L = build_cubic_lattice(*seed);
        r.conditions = verify_cardG_conditions(L, params.C);
        if (!r.conditions.all()) return std::nullopt;
        r.attempts = index + 1;
        return r;
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

GenResult gen_search(const GenParams& params) {
    if (params.a_lo < 2 || params.a_hi < params.a_lo || !params.a_hi.fits_ulong_p()) {
        throw Error(ErrorCode::InputError, "a range must satisfy 2 <= a_lo <= a_hi < 2^64");
    }
    constexpr std::uint64_t kBatch = 32;
    for (std::uint64_t base = 0; base < params.max_attempts; base += kBatch) {
        const std::uint64_t n = std::min(kBatch, params.max_attempts - base);
        std::vector<std::optional<GenResult>> out(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            out[static_cast<std::size_t>(i)] = evaluate(params, base + static_cast<std::uint64_t>(i));
        }
        for (auto& r : out)
            if (r) return std::move(*r);
    }
    throw Error(ErrorCode::SearchBudgetExceeded,
                "no seed passed every check within " + std::to_string(params.max_attempts) + " attempts");
}

} // namespace arak
