#include "antiassoc/bigfloat.hpp"

#include <climits>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace antiassoc {

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept
{
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(v_);
}

long BigFloat::exponent() const
{
    if (mpfr_zero_p(v_))
        return LONG_MIN / 4;
    return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const
{
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b)
{
    return std::max(a.precision(), b.precision());
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat sqrt(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x)
{
    BigFloat r(join(x, y));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y)
{
    BigFloat r(join(x, y));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec)
{
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec)
{
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigComplex::norm_inf() const
{
    BigFloat a = antiassoc::abs(re_), b = antiassoc::abs(im_);
    return a < b ? b : a;
}

std::string BigComplex::to_string(int digits) const
{
    std::string s = re_.to_string(digits);
    if (im_.sign() >= 0)
        s += "+";
    return s + im_.to_string(digits) + "i";
}

BigComplex& BigComplex::operator+=(const BigComplex& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o)
{
    BigFloat r = re_ * o.re_ - im_ * o.im_;
    BigFloat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    // Smith's algorithm
    if (antiassoc::abs(o.im_) <= antiassoc::abs(o.re_)) {
        BigFloat q = o.im_ / o.re_;
        BigFloat d = o.re_ + o.im_ * q;
        BigFloat r = (re_ + im_ * q) / d;
        BigFloat i = (im_ - re_ * q) / d;
        re_ = std::move(r);
        im_ = std::move(i);
    } else {
        BigFloat q = o.re_ / o.im_;
        BigFloat d = o.re_ * q + o.im_;
        BigFloat r = (re_ * q + im_) / d;
        BigFloat i = (im_ * q - re_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
    }
    return *this;
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta)
{
    return BigComplex(r * antiassoc::cos(theta), r * antiassoc::sin(theta));
}

BigComplex BigComplex::sqrt() const
{
    mpfr_prec_t p = precision();
    if (is_zero())
        return BigComplex(p);
    if (im_.is_zero()) {
        if (re_.sign() > 0)
            return BigComplex(antiassoc::sqrt(re_), BigFloat(p));
        return BigComplex(BigFloat(p), antiassoc::sqrt(-re_));
    }
    // w = sqrt((|z| + |re|)/2), stable branch
    BigFloat m = abs();
    BigFloat w = antiassoc::sqrt((m + antiassoc::abs(re_)) / BigFloat(2L, p));
    if (re_.sign() >= 0)
        return BigComplex(w, im_ / (BigFloat(2L, p) * w));
    BigFloat y = im_.sign() >= 0 ? w : -w;
    return BigComplex(antiassoc::abs(im_) / (BigFloat(2L, p) * w), y);
}

BigComplex BigComplex::pow(long e) const
{
    mpfr_prec_t p = precision();
    BigComplex base = *this;
    if (e < 0) {
        base = BigComplex(Rational(1), p) / base;
        e = -e;
    }
    BigComplex r(Rational(1), p);
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

BigComplex BigComplex::pow(const Rational& e) const
{
    if (e.get_den() == 1)
        return pow(e.get_num().get_si());
    mpfr_prec_t p = precision();
    if (is_zero()) {
        if (e > 0)
            return BigComplex(p);
        throw std::domain_error("zero to a negative power");
    }
    if (e.get_den() == 2) {
        BigComplex s = sqrt();
        return s.pow(e.get_num().get_si());
    }
    // exp(e * Log z), principal branch
    BigFloat lr = log(abs());
    BigFloat th = arg();
    BigFloat ef(e, p);
    return polar(antiassoc::exp(lr * ef), th * ef);
}

}
