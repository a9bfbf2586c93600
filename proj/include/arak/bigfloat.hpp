#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace arak {

/// Owning MPFR value. Binary operations round to nearest at the larger of the
/// operand precisions.
class BigFloat {
public:
    BigFloat() : BigFloat(mpfr_prec_t{128}) {}
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(const mpz_class& v, mpfr_prec_t prec);
    BigFloat(const mpq_class& v, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigFloat pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator*(const BigFloat& x, long k);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& y) { return *this = *this + y; }
    BigFloat& operator-=(const BigFloat& y) { return *this = *this - y; }

    friend int cmp(const BigFloat& x, const BigFloat& y) { return mpfr_cmp(x.v_, y.v_); }
    friend bool operator<(const BigFloat& x, const BigFloat& y) { return cmp(x, y) < 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return cmp(x, y) > 0; }
    int sign() const { return mpfr_sgn(v_); }

    long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer.
    mpz_class round_z() const;
    /// Exact value of the binary float as a rational.
    mpq_class to_q() const;
    /// Scientific notation with `digits` significant digits.
    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat acos(const BigFloat& x);

/// Three-way comparison that refuses to decide inside the margin: returns
/// -1/+1 when |x - y| > margin, 0 otherwise.
int certified_cmp(const BigFloat& x, const BigFloat& y, const BigFloat& margin);

} // namespace arak
