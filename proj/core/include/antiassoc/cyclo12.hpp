#pragma once

#include "antiassoc/rational.hpp"

#include <array>
#include <ostream>
#include <string>

namespace antiassoc {

// a0 + a1 z + a2 z^2 + a3 z^3 in Q[z]/(z^4 - z^2 + 1), z a primitive 12th root of unity
class Cyclo12 {
public:
    Cyclo12() = default;
    Cyclo12(long v) { c_[0] = v; }
    Cyclo12(const Rational& q) { c_[0] = q; }
    Cyclo12(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
        : c_{a0, a1, a2, a3} {}

    static Cyclo12 zeta() { return Cyclo12(0, 1, 0, 0); }
    static Cyclo12 imag_unit() { return Cyclo12(0, 0, 0, 1); }
    static Cyclo12 omega() { return Cyclo12(-1, 0, 1, 0); }

    const Rational& coeff(int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    Cyclo12 operator-() const;
    Cyclo12& operator+=(const Cyclo12& o);
    Cyclo12& operator-=(const Cyclo12& o);
    Cyclo12& operator*=(const Cyclo12& o);
    Cyclo12& operator/=(const Cyclo12& o);
    Cyclo12 inverse() const;
    Cyclo12 pow(long e) const;

    friend Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
    friend Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }
    friend Cyclo12 operator*(Cyclo12 a, const Cyclo12& b) { return a *= b; }
    friend Cyclo12 operator/(Cyclo12 a, const Cyclo12& b) { return a /= b; }
    friend bool operator==(const Cyclo12& a, const Cyclo12& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo12& a, const Cyclo12& b) { return !(a == b); }
    bool operator<(const Cyclo12& o) const;

    // written in the basis 1, w, i, i*w
    std::string to_string() const;

private:
    std::array<Rational, 4> c_{};
};

inline bool is_zero(const Cyclo12& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Cyclo12& x);

}
