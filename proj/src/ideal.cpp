#include "arak/ideal.hpp"

#include <algorithm>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

namespace {

struct IntCol {
    mpz_class x, y;
};

mpz_class lcm_denominators(const std::vector<FieldElem>& gens) {
    mpz_class l = 1;
    for (const auto& g : gens) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.x.get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.y.get_den_mpz_t());
    }
    return l;
}

} // namespace

FracIdeal hnf_span(const QuadField& field, const std::vector<FieldElem>& gens, bool check_module) {
    const mpz_class D = lcm_denominators(gens);
    std::vector<IntCol> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) {
        mpq_class x = g.x * D, y = g.y * D;
        cols.push_back({x.get_num(), y.get_num()});
    }
    // Euclid on the omega row until a single column carries it.
    for (;;) {
        auto nonzero = [](const IntCol& c) { return sgn(c.y) != 0; };
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (nonzero(cols[i])) idx.push_back(i);
        }
        if (idx.size() <= 1) break;
        const auto piv = *std::min_element(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
            return abs(cols[i].y) < abs(cols[j].y);
        });
        for (std::size_t i : idx) {
            if (i == piv) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), cols[i].y.get_mpz_t(), cols[piv].y.get_mpz_t());
            cols[i].x -= q * cols[piv].x;
            cols[i].y -= q * cols[piv].y;
        }
    }
    std::optional<IntCol> pivot;
    mpz_class a = 0;
    for (const auto& c : cols) {
        if (sgn(c.y) != 0) {
            pivot = c;
        } else {
            mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), c.x.get_mpz_t());
        }
    }
    if (!pivot || a == 0) throw Error(ErrorCode::Singular, "generators span a lattice of rank < 2");
    if (sgn(pivot->y) < 0) {
        pivot->x = -pivot->x;
        pivot->y = -pivot->y;
    }
    mpz_class b;
    mpz_fdiv_r(b.get_mpz_t(), pivot->x.get_mpz_t(), a.get_mpz_t());

    FracIdeal I;
    I.field_ = field;
    I.mat_ = {mpq_class(a, D), mpq_class(0), mpq_class(b, D), mpq_class(pivot->y, D)};
    for (auto& e : I.mat_) e.canonicalize();

    if (check_module) {
        const FieldElem omega{0, 1};
        for (int j = 0; j < 2; ++j) {
            if (!I.contains(field.mul(omega, I.col(j)))) {
                throw Error(ErrorCode::NotAnIdeal, "Z-span is not stable under multiplication by omega");
            }
        }
    }
    return I;
}

std::optional<std::pair<mpz_class, mpz_class>> FracIdeal::coordinates(const FieldElem& e) const {
    const mpq_class k = e.y / mat_[3];
    if (k.get_den() != 1) return std::nullopt;
    const mpq_class m = (e.x - k * mat_[2]) / mat_[0];
    if (m.get_den() != 1) return std::nullopt;
    return std::make_pair(m.get_num(), k.get_num());
}

FracIdeal ideal_from_matrix(const QuadField& field, const Mat2& m) {
    if (sgn(mpq_class(m[0] * m[3] - m[1] * m[2])) == 0) {
        throw Error(ErrorCode::Singular, "ideal matrix has zero determinant");
    }
    return hnf_span(field, {{m[0], m[1]}, {m[2], m[3]}}, true);
}

FracIdeal unit_ideal(const QuadField& field) { return hnf_span(field, {{1, 0}, {0, 1}}, false); }

FracIdeal ideal_generated_by(const QuadField& field, const std::vector<FieldElem>& gens) {
    std::vector<FieldElem> span;
    const FieldElem omega{0, 1};
    for (const auto& g : gens) {
        span.push_back(g);
        span.push_back(field.mul(omega, g));
    }
    return hnf_span(field, span, true);
}

FracIdeal scale(const FracIdeal& I, const mpq_class& q) {
    if (sgn(q) == 0) throw Error(ErrorCode::Singular, "scaling an ideal by zero");
    return hnf_span(I.field(), {q * I.col(0), q * I.col(1)}, false);
}

FracIdeal conjugate(const FracIdeal& I) {
    const auto& F = I.field();
    return hnf_span(F, {F.conj(I.col(0)), F.conj(I.col(1))}, false);
}

FracIdeal multiply(const FracIdeal& I, const FracIdeal& J) {
    const auto& F = I.field();
    std::vector<FieldElem> gens;
    for (const auto& u : I.basis()) {
        for (const auto& v : J.basis()) gens.push_back(F.mul(u, v));
    }
    return hnf_span(F, gens, false);
}

FracIdeal ideal_inverse(const FracIdeal& I) {
    const mpq_class n = I.norm();
    return scale(conjugate(I), mpq_class(1 / n));
}

bool norm_bound_check(const FracIdeal& I, const mpq_class& C) {
    const mpq_class inv = 1 / I.norm();
    const mpq_class C2 = C * C;
    return inv * inv <= C2 * C2 * I.field().delta();
}

mpz_class integer_content(const std::vector<FieldElem>& elems) {
    mpz_class g = 0;
    for (const auto& e : elems) {
        if (e.x.get_den() != 1 || e.y.get_den() != 1) {
            throw Error(ErrorCode::OutOfRange, "element is not in O_F");
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.x.get_num_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.y.get_num_mpz_t());
    }
    return g;
}

std::pair<bool, PrimitivityEvidence> is_primitive_one(const FracIdeal& I) {
    if (!I.contains_one()) throw Error(ErrorCode::OneNotInIdeal, "1 is not in I");
    // 1/k in I  <=>  I^{-1} subset k O_F  <=>  k divides every k_ij
    const FracIdeal inv = ideal_inverse(I);
    PrimitivityEvidence ev;
    for (int i = 0; i < 4; ++i) ev.coeffs[static_cast<std::size_t>(i)] = inv.mat()[static_cast<std::size_t>(i)].get_num();
    ev.gcd_all = integer_content({inv.col(0), inv.col(1)});
    return {ev.gcd_all == 1, ev};
}

} // namespace arak
