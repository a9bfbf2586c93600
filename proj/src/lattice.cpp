#include "arak/lattice.hpp"

#include <utility>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

namespace {

void refresh(EmbeddedBasis& B) {
    const auto& F = B.field;
    B.g11 = F.inner(B.b1, B.b1);
    B.g12 = F.inner(B.b1, B.b2);
    B.g22 = F.inner(B.b2, B.b2);
    B.mu = B.g12 / B.g11;
    B.bstar2_sq = B.g22 - B.mu * B.mu * B.g11;
    B.e1 = F.embed(B.b1);
    B.e2 = F.embed(B.b2);
}

} // namespace

EmbeddedBasis reduce_basis(const QuadField& field, const FieldElem& u, const FieldElem& v) {
    EmbeddedBasis B;
    B.field = field;
    B.b1 = u;
    B.b2 = v;
    auto g = [&](const FieldElem& p, const FieldElem& q) { return field.inner(p, q); };
    mpq_class n1 = g(B.b1, B.b1), n2 = g(B.b2, B.b2);
    if (sgn(mpq_class(n1 * n2 - g(B.b1, B.b2) * g(B.b1, B.b2))) == 0) {
        throw Error(ErrorCode::Singular, "basis vectors are dependent");
    }
    if (n2 < n1) {
        std::swap(B.b1, B.b2);
        std::swap(n1, n2);
    }
    for (;;) {
        const mpz_class m = round_q(g(B.b1, B.b2) / n1);
        if (m != 0) B.b2 = B.b2 - m * B.b1;
        n2 = g(B.b2, B.b2);
        if (n2 >= n1) break;
        std::swap(B.b1, B.b2);
        std::swap(n1, n2);
    }
    if (qsign(field.to_quad(B.b1)) < 0) B.b1 = -B.b1;
    refresh(B);
    return B;
}

EmbeddedBasis embed_and_reduce(const FracIdeal& I) {
    return reduce_basis(I.field(), I.col(0), I.col(1));
}

std::vector<LatticePoint> enumerate_bounded(const EmbeddedBasis& B, const mpq_class& R_sq,
                                            std::uint64_t budget) {
    std::vector<LatticePoint> out;
    if (sgn(R_sq) <= 0) return out;
    // s2^2 |b2*|^2 <= |g|^2 < R_sq
    const mpz_class s2_max = floor_sqrt_q(R_sq / B.bstar2_sq);
    std::uint64_t examined = 0;
    for (mpz_class s2 = 0; s2 <= s2_max; ++s2) {
        // |g|^2 = g11 (s1 + mu s2)^2 + s2^2 |b2*|^2
        const mpq_class T = (R_sq - s2 * s2 * B.bstar2_sq) / B.g11;
        if (sgn(T) < 0) continue;
        const mpz_class r = floor_sqrt_q(T);
        const mpq_class center = -B.mu * s2;
        const mpz_class lo = floor_q(center) - r - 1;
        const mpz_class hi = ceil_q(center) + r + 1;
        const mpz_class width = hi - lo + 1;
        examined += width.get_ui();
        if (!width.fits_ulong_p() || examined > budget) {
            throw Error(ErrorCode::EnumerationBudgetExceeded,
                        "coefficient box exceeds " + std::to_string(budget) + " points");
        }
        for (mpz_class s1 = lo; s1 <= hi; ++s1) {
            if (sgn(s2) == 0 && sgn(s1) <= 0) continue;
            mpq_class n = B.norm_sq(s1, s2);
            if (n < R_sq) out.push_back({s1, s2, B.at(s1, s2), std::move(n)});
        }
    }
    return out;
}

} // namespace arak
