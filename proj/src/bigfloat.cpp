#include "arak/bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace arak {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
}

namespace {
mpfr_prec_t joint(const BigFloat& x, const BigFloat& y) { return std::max(x.prec(), y.prec()); }
} // namespace

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
    BigFloat r(joint(x, y));
    mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
    BigFloat r(joint(x, y));
    mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
    BigFloat r(joint(x, y));
    mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
    BigFloat r(joint(x, y));
    mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& x, long k) {
    BigFloat r(x.prec());
    mpfr_mul_si(r.v_, x.v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class BigFloat::round_z() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

mpq_class BigFloat::to_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::str(int digits) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", digits - 1, v_);
    std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
    return raw ? std::string(raw) : std::string();
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_cos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat acos(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_acos(r.get(), x.get(), MPFR_RNDN);
    return r;
}

int certified_cmp(const BigFloat& x, const BigFloat& y, const BigFloat& margin) {
    const BigFloat diff = x - y;
    if (cmp(abs(diff), margin) <= 0) return 0;
    return diff.sign();
}

} // namespace arak
