#include "arak/enum3.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace arak {

namespace {

LMat3 transform_gram(const LMat3& G0, const IMat3& T) {
    LMat3 G{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long double s = 0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    s += static_cast<long double>(T[i][k]) * G0[k][l] * static_cast<long double>(T[j][l]);
            G[i][j] = s;
        }
    return G;
}

// Gram-Schmidt data from a Gram matrix: mu[i][j] (j < i) and B[i] = |b_i*|^2.
void gso(const LMat3& G, LMat3& mu, std::array<long double, 3>& B) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            long double s = G[i][j];
            for (int k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * B[k];
            mu[i][j] = s / B[j];
        }
        long double s = G[i][i];
        for (int k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * B[k];
        B[i] = s;
    }
}

} // namespace

ReducedGram lll_gram(const LMat3& G0) {
    IMat3 T{};
    for (int i = 0; i < 3; ++i) T[i][i] = 1;
    LMat3 G = G0, mu{};
    std::array<long double, 3> B{};
    int k = 1;
    for (int iter = 0; k < 3 && iter < 10'000; ++iter) {
        for (int j = k - 1; j >= 0; --j) {
            gso(G, mu, B);
            const auto r = static_cast<std::int64_t>(std::llround(mu[k][j]));
            if (r == 0) continue;
            for (int m = 0; m < 3; ++m) T[k][m] -= r * T[j][m];
            G = transform_gram(G0, T);
        }
        gso(G, mu, B);
        if (B[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(T[k], T[k - 1]);
            G = transform_gram(G0, T);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return {G, T};
}

FPForm fp_form(const LMat3& G) {
    FPForm f;
    auto& q = f.q;
    q = G;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (int k = i + 1; k < 3; ++k)
            for (int l = k; l < 3; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return f;
}

std::vector<FPRow> fp_rows(const FPForm& f, long double R) {
    const auto& q = f.q;
    std::vector<FPRow> rows;
    const auto x3max = static_cast<std::int64_t>(std::floor(std::sqrt(R / q[2][2])));
    for (std::int64_t x3 = 0; x3 <= x3max; ++x3) {
        const long double R3 = R - q[2][2] * static_cast<long double>(x3 * x3);
        if (R3 < 0) continue;
        const long double c2 = -q[1][2] * static_cast<long double>(x3);
        const long double h2 = std::sqrt(R3 / q[1][1]);
        auto x2lo = static_cast<std::int64_t>(std::ceil(c2 - h2));
        const auto x2hi = static_cast<std::int64_t>(std::floor(c2 + h2));
        if (x3 == 0 && x2lo < 0) x2lo = 0;
        for (std::int64_t x2 = x2lo; x2 <= x2hi; ++x2) {
            const long double t = static_cast<long double>(x2) - c2;
            const long double R2 = R3 - q[1][1] * t * t;
            if (R2 < 0) continue;
            const long double c1 = -q[0][1] * static_cast<long double>(x2) - q[0][2] * static_cast<long double>(x3);
            const long double h1 = std::sqrt(R2 / q[0][0]);
            auto lo = static_cast<std::int64_t>(std::ceil(c1 - h1));
            const auto hi = static_cast<std::int64_t>(std::floor(c1 + h1));
            if (x3 == 0 && x2 == 0 && lo < 1) lo = 1;
            if (lo <= hi) rows.push_back({x3, x2, lo, hi});
        }
    }
    return rows;
}

long double det3(const LMat3& G) {
    return G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1]) - G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0]) +
           G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
}

long double ellipsoid_points(const LMat3& G, long double R) {
    return 4.0L / 3.0L * std::numbers::pi_v<long double> * std::pow(R, 1.5L) / std::sqrt(det3(G));
}

} // namespace arak
