#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace arak {

/// Exact element a + b*sqrt(d) of Q(sqrt(d)). The radicand travels with the
/// value so arithmetic needs no field handle; mixing radicands is a logic
/// error and is asserted.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(std::int64_t d, mpq_class a, mpq_class b = 0);
    static QuadNum rational(std::int64_t d, const mpq_class& a) { return {d, a, 0}; }

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    std::int64_t d() const { return d_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadNum conj() const { return {d_, a_, -b_}; }
    mpq_class norm() const { return a_ * a_ - b_ * b_ * d_; }
    mpq_class trace() const { return 2 * a_; }
    QuadNum inverse() const;

    /// floor of the real value, computed exactly.
    mpz_class floor() const;
    mpz_class ceil() const;
    /// Rational lower/upper bounds with gap at most 2^-bits * (|b| + 1).
    std::pair<mpq_class, mpq_class> bounds(unsigned bits) const;
    double to_double() const;

    /// "a/b + c/e*sqrt(d)"; the radical term is dropped when b == 0.
    std::string str() const;

    friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator/(const QuadNum& x, const QuadNum& y);
    friend QuadNum operator+(const QuadNum& x, const mpq_class& r) { return {x.d_, x.a_ + r, x.b_}; }
    friend QuadNum operator-(const QuadNum& x, const mpq_class& r) { return {x.d_, x.a_ - r, x.b_}; }
    friend QuadNum operator*(const QuadNum& x, const mpq_class& r) { return {x.d_, x.a_ * r, x.b_ * r}; }
    friend QuadNum operator*(const mpq_class& r, const QuadNum& x) { return x * r; }
    friend QuadNum operator+(const mpq_class& r, const QuadNum& x) { return x + r; }
    friend QuadNum operator-(const mpq_class& r, const QuadNum& x) { return {x.d_, r - x.a_, -x.b_}; }
    QuadNum operator-() const { return {d_, -a_, -b_}; }

    friend bool operator==(const QuadNum& x, const QuadNum& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    std::int64_t d_ = 2;
    mpq_class a_ = 0;
    mpq_class b_ = 0;
};

/// Exact sign of a + b*sqrt(d).
int qsign(const QuadNum& x);
inline int qcmp(const QuadNum& x, const QuadNum& y) { return qsign(x - y); }
inline int qcmp(const QuadNum& x, const mpq_class& r) { return qsign(x - r); }

/// Element x + y*omega of F in coordinates over the integral basis {1, omega}.
struct FieldElem {
    mpq_class x = 0;
    mpq_class y = 0;
    friend bool operator==(const FieldElem& p, const FieldElem& q) { return p.x == q.x && p.y == q.y; }
    friend FieldElem operator+(const FieldElem& p, const FieldElem& q) { return {p.x + q.x, p.y + q.y}; }
    friend FieldElem operator-(const FieldElem& p, const FieldElem& q) { return {p.x - q.x, p.y - q.y}; }
    friend FieldElem operator*(const mpz_class& k, const FieldElem& p) { return {k * p.x, k * p.y}; }
    friend FieldElem operator*(const mpq_class& k, const FieldElem& p) { return {k * p.x, k * p.y}; }
    FieldElem operator-() const { return {-x, -y}; }
};

struct Embedding {
    QuadNum g1;  // sigma_1: sqrt(d) -> +sqrt(d)
    QuadNum g2;  // sigma_2: sqrt(d) -> -sqrt(d)
};

/// Real quadratic field Q(sqrt(d)), d squarefree > 1, with integral basis
/// {1, omega}: omega = (1 + sqrt d)/2 when d = 1 mod 4, else sqrt d.
class QuadField {
public:
    std::int64_t d() const { return d_; }
    std::int64_t delta() const { return delta_; }
    bool omega_is_half() const { return half_; }
    /// omega^2 = omega_trace * omega + omega_const
    std::int64_t omega_trace() const { return half_ ? 1 : 0; }
    std::int64_t omega_const() const { return half_ ? (d_ - 1) / 4 : d_; }

    QuadNum to_quad(const FieldElem& e) const;
    FieldElem from_quad(const QuadNum& q) const;
    QuadNum omega() const { return to_quad({0, 1}); }

    FieldElem mul(const FieldElem& p, const FieldElem& q) const;
    FieldElem conj(const FieldElem& p) const;
    mpq_class trace(const FieldElem& p) const;
    mpq_class norm(const FieldElem& p) const;
    /// Tr(p*q) = <sigma(p), sigma(q)>, the embedded inner product.
    mpq_class inner(const FieldElem& p, const FieldElem& q) const { return trace(mul(p, q)); }

    Embedding embed(const FieldElem& p) const;

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }

private:
    friend QuadField make_field(std::int64_t d);
    std::int64_t d_ = 5;
    std::int64_t delta_ = 5;
    bool half_ = true;
};

/// Throws OutOfRange for d <= 1 and NotSquarefree when d has a square factor.
QuadField make_field(std::int64_t d);

} // namespace arak
