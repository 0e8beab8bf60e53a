#pragma once

#include "antiassoc/poly.hpp"

namespace antiassoc {

class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    RatFun(const Cyclo12& c) : num_(c), den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::set<std::string> symbols() const;

    RatFun operator-() const { return RatFun(-num_, den_, true); }
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    // cross-multiplication
    friend bool operator==(const RatFun& a, const RatFun& b);
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }
    RatFun pow(long e) const;

    RatFun derivative(const std::string& sym) const;
    RatFun substitute(const std::map<std::string, RatFun>& values) const;
    Cyclo12 eval(const std::map<std::string, Cyclo12>& values) const;
    BigComplex eval(const std::map<std::string, BigComplex>& values, mpfr_prec_t prec) const;

    std::string to_string() const;

private:
    RatFun(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_, den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

}
