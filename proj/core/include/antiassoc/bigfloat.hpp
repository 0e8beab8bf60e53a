#pragma once

#include "antiassoc/rational.hpp"

#include <mpfr.h>

#include <string>

namespace antiassoc {

constexpr mpfr_prec_t default_precision = 256;

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = default_precision);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(double v, mpfr_prec_t prec);
    BigFloat(const Rational& q, mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero
    long exponent() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 12) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat exp(const BigFloat& x);
    friend BigFloat sin(const BigFloat& x);
    friend BigFloat cos(const BigFloat& x);
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat pow2(long e, mpfr_prec_t prec);

private:
    mpfr_t v_;
};

class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = default_precision) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const Rational& q, mpfr_prec_t prec) : re_(q, prec), im_(prec) {}
    BigComplex(const Rational& re, const Rational& im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigFloat abs() const { return hypot(re_, im_); }
    BigFloat arg() const { return atan2(im_, re_); }
    // max(|re|, |im|), cheap magnitude used for pivoting
    BigFloat norm_inf() const;
    std::string to_string(int digits = 12) const;

    BigComplex operator-() const { return BigComplex(-re_, -im_); }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

    // principal branches
    BigComplex sqrt() const;
    BigComplex pow(const Rational& e) const;
    BigComplex pow(long e) const;
    static BigComplex polar(const BigFloat& r, const BigFloat& theta);

private:
    BigFloat re_, im_;
};

inline bool is_zero(const BigComplex& x) { return x.is_zero(); }

}
