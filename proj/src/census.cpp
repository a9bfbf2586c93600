#include "arak/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "arak/enum3.hpp"
#include "arak/error.hpp"

namespace arak {

namespace {

using Coeffs = std::array<mpz_class, 3>;

mpfr_prec_t work_prec(const CubicLattice& L) { return L.prec + kGuardBits; }

BigFloat pow2(long e, mpfr_prec_t w) {
    BigFloat r(1L, w);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

// One representative per +/- pair: first nonzero coordinate positive.
Coeffs canonical_sign(Coeffs e) {
    for (const auto& x : e) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : e) y = -y;
        break;
    }
    return e;
}

struct CoeffsLess {
    bool operator()(const Coeffs& x, const Coeffs& y) const {
        for (int i = 0; i < 3; ++i) {
            if (x[i] != y[i]) return x[i] < y[i];
        }
        return false;
    }
};

void fill_bounds(const CubicLattice& L, const mpq_class& C, CensusResult& r) {
    const mpfr_prec_t w = work_prec(L);
    const BigFloat C2(mpq_class(C * C), w);
    r.delta = BigFloat(6L, w) / BigFloat::pi(w) * C2 * L.covol_exact;
    r.lower_bound = BigFloat(mpq_class(2, 3), w) * C2 * L.covol_exact;
}

/// Classifies leftover points at doubled precision until decided or the cap.
void resolve(const CubicLattice& L, const mpq_class& C, std::set<Coeffs, CoeffsLess> todo, CensusResult& r) {
    r.ambiguous = todo.size();
    for (unsigned p = L.prec * 2; !todo.empty() && p <= kPrecisionCap; p *= 2) {
        const CubicLattice H = build_cubic_lattice(L.seed, p);
        for (auto it = todo.begin(); it != todo.end();) {
            int slab = -1;
            const int m = g_membership(H, *it, C, &slab);
            if (m == 0) {
                ++it;
                continue;
            }
            if (m > 0) {
                ++r.pairs;
                ++r.per_slab[static_cast<std::size_t>(slab)];
            }
            ++r.resolved_at_higher_precision;
            it = todo.erase(it);
        }
    }
    r.g_count = 2 * r.pairs;
}

} // namespace

mpq_class delta_sq_upper(const CubicLattice& L, const mpq_class& C) {
    const mpq_class pi_lo = BigFloat::pi(64, MPFR_RNDD).to_q();
    const mpq_class C2 = C * C;
    mpq_class v = 36 * C2 * C2 * mpq_class(L.disc) / (mpq_class(L.seed.a * L.seed.a) * pi_lo * pi_lo);
    v.canonicalize();
    return v;
}

int g_membership(const CubicLattice& L, const Coeffs& e, const mpq_class& C, int* slab) {
    if (e[0] == 0 && e[1] == 0 && e[2] == 0) return -1;
    const mpfr_prec_t w = work_prec(L);
    // |g|^2 < delta^2  <=>  |g|^2 pi^2 a^2 < 36 C^4 disc; pi is irrational so
    // equality cannot occur and a fine enough margin always decides.
    const mpq_class C2 = C * C;
    const mpq_class rhs_q = 36 * C2 * C2 * mpq_class(L.disc);
    const BigFloat pi = BigFloat::pi(w);
    const BigFloat lhs = BigFloat(exact_norm_sq(L, e), w) * pi * pi * BigFloat(mpz_class(L.seed.a * L.seed.a), w);
    const BigFloat rhs(rhs_q, w);
    const int norm = certified_cmp(lhs, rhs, abs(rhs) * pow2(-static_cast<long>(L.prec), w));
    if (norm > 0) return -1;
    for (int i = 0; i < 3; ++i) {
        const auto c = coord_abs_cmp(L, e, i, C);
        if (!c) return 0;
        if (*c < 0) {
            if (slab) *slab = i;
            return norm < 0 ? 1 : 0;
        }
    }
    return -1;
}

CensusResult count_G_cubic(const CubicLattice& L, const CensusParams& params) {
    CensusResult r;
    fill_bounds(L, params.C, r);
    const mpq_class& C = params.C;
    const long double C2 = mpq_class(C * C).get_d();
    const long double invC = 1.0L / C.get_d();
    const long double delta2 = (r.delta * r.delta).to_ld();
    const mpfr_prec_t w = work_prec(L);

    struct Slab {
        ReducedGram red;
        std::array<std::array<long double, 3>, 3> c;  // reduced basis vectors in R^3
        std::array<long double, 3> cmax;
        std::vector<FPRow> rows;
    };
    constexpr long double kR = 2.0L * (1 + 1e-6L);
    const mpq_class d2hi = delta_sq_upper(L, C);
    const BigFloat C2b(mpq_class(C * C), w), inv_d2(mpq_class(1 / d2hi), w);
    // Q_i(x) = C^2 x_i^2 + |x|^2 / delta_hi^2 on the vectors `v`, in BigFloat so
    // the reduced Gram keeps full relative accuracy.
    auto slab_gram = [&](const std::array<std::array<BigFloat, 3>, 3>& v, int i) {
        LMat3 G{};
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                BigFloat s(w);
                for (int j = 0; j < 3; ++j) s += v[k][j] * v[l][j];
                G[k][l] = (C2b * v[k][i] * v[l][i] + s * inv_d2).to_ld();
            }
        return G;
    };
    // Volume of {Q_i < R} over covol, halved for +/- pairs.
    const long double covol = L.covol_exact.to_ld();
    const long double inv_d2l = inv_d2.to_ld();
    const long double per_slab_estimate =
        4.0L / 3.0L * std::acos(-1.0L) * std::pow(kR, 1.5L) / (std::sqrt(C2 + inv_d2l) * inv_d2l) / covol / 2;
    std::array<Slab, 3> slabs;
    for (int i = 0; i < 3; ++i) {
        r.estimate += per_slab_estimate;
        auto& S = slabs[static_cast<std::size_t>(i)];
        S.red = lll_gram(slab_gram(L.basis, i));
        std::array<std::array<BigFloat, 3>, 3> cv;
        for (int k = 0; k < 3; ++k) {
            S.cmax[k] = 0;
            for (int j = 0; j < 3; ++j) {
                BigFloat s(w);
                for (int m = 0; m < 3; ++m) s += BigFloat(static_cast<long>(S.red.T[k][m]), w) * L.basis[m][j];
                S.c[k][j] = s.to_ld();
                S.cmax[k] = std::max(S.cmax[k], std::abs(S.c[k][j]));
                cv[k][j] = s;
            }
        }
        S.red.gram = slab_gram(cv, i);
    }
    if (!std::isfinite(r.estimate)) r.estimate = std::numeric_limits<long double>::infinity();
    if (r.estimate > static_cast<long double>(params.budget)) {
        r.declined_reason = "estimated candidate count exceeds the budget";
        return r;
    }

    std::set<Coeffs, CoeffsLess> ambiguous;
    bool stopped = false;
    for (int i = 0; i < 3 && !stopped; ++i) {
        auto& S = slabs[static_cast<std::size_t>(i)];
        S.rows = fp_rows(fp_form(S.red.gram), kR);
        const std::size_t n = S.rows.size();
        const std::size_t super = params.chunk_rows * 64;
        for (std::size_t base = 0; base < n && !stopped; base += super) {
            const std::size_t end = std::min(n, base + super);
            const auto nchunks = static_cast<std::int64_t>((end - base + params.chunk_rows - 1) / params.chunk_rows);
            std::uint64_t pairs = 0, examined = 0;
            std::array<std::uint64_t, 3> per{};
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : pairs, examined)
            for (std::int64_t ch = 0; ch < nchunks; ++ch) {
                std::vector<Coeffs> unsure;
                const std::size_t lo = base + static_cast<std::size_t>(ch) * params.chunk_rows;
                const std::size_t hi = std::min(end, lo + params.chunk_rows);
                for (std::size_t ri = lo; ri < hi; ++ri) {
                    const FPRow& row = S.rows[ri];
                    for (std::int64_t x1 = row.x1_lo; x1 <= row.x1_hi; ++x1) {
                        ++examined;
                        const std::array<std::int64_t, 3> x{x1, row.x2, row.x3};
                        std::array<long double, 3> g{};
                        long double scale = 1;
                        for (int k = 0; k < 3; ++k) {
                            const auto xk = static_cast<long double>(x[k]);
                            for (int j = 0; j < 3; ++j) g[j] += xk * S.c[k][j];
                            scale += std::abs(xk) * S.cmax[k];
                        }
                        const long double eps = 1e-15L * scale;
                        const long double n2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
                        const long double eps2 = 4 * (std::sqrt(n2) + 1) * eps;
                        if (n2 > delta2 + eps2) continue;
                        bool unsure_pt = n2 > delta2 - eps2;
                        const long double gi = std::abs(g[static_cast<std::size_t>(i)]);
                        if (gi > invC + eps) continue;
                        unsure_pt = unsure_pt || gi > invC - eps;
                        bool smaller = false;
                        for (int j = 0; j < i; ++j) {
                            const long double gj = std::abs(g[static_cast<std::size_t>(j)]);
                            if (gj < invC - eps) smaller = true;
                            else if (gj <= invC + eps) unsure_pt = true;
                        }
                        if (smaller) continue;
                        if (!unsure_pt) {
                            ++pairs;
                            continue;
                        }
                        unsure.push_back({x[0], x[1], x[2]});
                    }
                }
                if (!unsure.empty()) {
#pragma omp critical(census_unsure)
                    for (const auto& xs : unsure) {
                        Coeffs s{0, 0, 0};
                        for (int k = 0; k < 3; ++k)
                            for (int m = 0; m < 3; ++m) s[m] += xs[k] * mpz_class(static_cast<long>(S.red.T[k][m]));
                        const Coeffs e = original_coords(L, s);
                        int slab = -1;
                        const int mem = g_membership(L, e, C, &slab);
                        if (mem == 0) ambiguous.insert(canonical_sign(e));
                        else if (mem > 0 && slab == i) ++per[static_cast<std::size_t>(i)];
                    }
                }
            }
            r.pairs += pairs + per[static_cast<std::size_t>(i)];
            r.per_slab[static_cast<std::size_t>(i)] += pairs + per[static_cast<std::size_t>(i)];
            r.examined += examined;
            if (r.examined >= params.budget && (end < n || i < 2)) stopped = true;
        }
    }
    r.complete = !stopped;
    resolve(L, C, std::move(ambiguous), r);
    return r;
}

CensusResult count_G_cubic_reference(const CubicLattice& L, const CensusParams& params) {
    CensusResult r;
    fill_bounds(L, params.C, r);
    const mpfr_prec_t w = work_prec(L);
    LMat3 G{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            BigFloat s(w);
            for (int i = 0; i < 3; ++i) s += L.basis[k][i] * L.basis[l][i];
            G[k][l] = s.to_ld();
        }
    const long double R = delta_sq_upper(L, params.C).get_d() * (1 + 1e-6L);
    r.estimate = 4.0L / 3.0L * std::acos(-1.0L) * std::pow(R, 1.5L) / L.covol_exact.to_ld() / 2;
    std::set<Coeffs, CoeffsLess> ambiguous;
    for (const auto& row : fp_rows(fp_form(G), R)) {
        for (std::int64_t x1 = row.x1_lo; x1 <= row.x1_hi; ++x1) {
            if (++r.examined > params.budget) {
                r.declined_reason = "budget exhausted";
                resolve(L, params.C, std::move(ambiguous), r);
                return r;
            }
            const Coeffs e = original_coords(L, {x1, row.x2, row.x3});
            int slab = -1;
            const int m = g_membership(L, e, params.C, &slab);
            if (m == 0) {
                ambiguous.insert(canonical_sign(e));
            } else if (m > 0) {
                ++r.pairs;
                ++r.per_slab[static_cast<std::size_t>(slab)];
            }
        }
    }
    r.complete = true;
    resolve(L, params.C, std::move(ambiguous), r);
    return r;
}

} // namespace arak
