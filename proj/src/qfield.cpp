#include "arak/qfield.hpp"

#include <cassert>
#include <cmath>

#include "arak/error.hpp"
#include "arak/numtheory.hpp"

namespace arak {

QuadNum::QuadNum(std::int64_t d, mpq_class a, mpq_class b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    assert(x.d_ == y.d_ || x.is_rational() || y.is_rational());
    return {x.is_rational() ? y.d_ : x.d_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
    assert(x.d_ == y.d_ || x.is_rational() || y.is_rational());
    return {x.is_rational() ? y.d_ : x.d_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    assert(x.d_ == y.d_ || x.is_rational() || y.is_rational());
    const std::int64_t d = x.is_rational() ? y.d_ : x.d_;
    return {d, x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadNum QuadNum::inverse() const {
    const mpq_class n = norm();
    if (sgn(n) == 0) throw Error(ErrorCode::OutOfRange, "inverse of zero");
    return {d_, a_ / n, -b_ / n};
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }

int qsign(const QuadNum& x) {
    const int sa = sgn(x.a());
    const int sb = sgn(x.b());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    const mpq_class diff = x.a() * x.a() - x.b() * x.b() * x.d();
    return sa * sgn(diff);
}

mpz_class QuadNum::floor() const {
    if (is_rational()) return floor_q(a_);
    // y = b*sqrt(d) is irrational, so floor(y) = +/- floor(sqrt(b^2 d)) (- 1)
    const mpq_class r = b_ * b_ * d_;
    const mpz_class s = floor_sqrt_q(r);
    const mpz_class fy = sgn(b_) > 0 ? s : mpz_class(-s - 1);
    // a + fy <= a + y < a + fy + 1
    const mpz_class n0 = floor_q(a_ + mpq_class(fy));
    return qsign(*this - mpq_class(n0 + 1)) >= 0 ? mpz_class(n0 + 1) : n0;
}

mpz_class QuadNum::ceil() const { return -(-*this).floor(); }

std::pair<mpq_class, mpq_class> QuadNum::bounds(unsigned bits) const {
    if (is_rational()) return {a_, a_};
    mpz_class scale = 1;
    scale <<= bits;
    const mpz_class s = isqrt(mpz_class(scale * scale * d_));
    const mpq_class lo_root(s, scale), hi_root(s + 1, scale);
    if (sgn(b_) > 0) return {a_ + b_ * lo_root, a_ + b_ * hi_root};
    return {a_ + b_ * hi_root, a_ + b_ * lo_root};
}

double QuadNum::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadNum::str() const {
    std::string out = rational_string(a_);
    if (!is_rational()) out += " + " + rational_string(b_) + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadField make_field(std::int64_t d) {
    if (d <= 1) throw Error(ErrorCode::OutOfRange, "d must exceed 1, got " + std::to_string(d));
    if (!is_squarefree_u64(static_cast<std::uint64_t>(d))) {
        throw Error(ErrorCode::NotSquarefree, std::to_string(d) + " has a square factor");
    }
    QuadField f;
    f.d_ = d;
    f.half_ = (d % 4 == 1);
    f.delta_ = f.half_ ? d : 4 * d;
    return f;
}

QuadNum QuadField::to_quad(const FieldElem& e) const {
    if (half_) return {d_, e.x + e.y / 2, e.y / 2};
    return {d_, e.x, e.y};
}

FieldElem QuadField::from_quad(const QuadNum& q) const {
    if (half_) {
        const mpq_class y = 2 * q.b();
        return {q.a() - y / 2, y};
    }
    return {q.a(), q.b()};
}

FieldElem QuadField::mul(const FieldElem& p, const FieldElem& q) const {
    const mpq_class yy = p.y * q.y;
    return {p.x * q.x + yy * omega_const(), p.x * q.y + p.y * q.x + yy * omega_trace()};
}

FieldElem QuadField::conj(const FieldElem& p) const {
    // conj(omega) = trace(omega) - omega
    return {p.x + p.y * omega_trace(), -p.y};
}

mpq_class QuadField::trace(const FieldElem& p) const { return 2 * p.x + p.y * omega_trace(); }

mpq_class QuadField::norm(const FieldElem& p) const {
    const FieldElem n = mul(p, conj(p));
    return n.x;
}

Embedding QuadField::embed(const FieldElem& p) const {
    const QuadNum q = to_quad(p);
    return {q, q.conj()};
}

} // namespace arak
