#include "antiassoc/cyclo12.hpp"

#include <stdexcept>

namespace antiassoc {

bool Cyclo12::is_zero() const
{
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyclo12::is_rational() const
{
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclo12 Cyclo12::operator-() const
{
    return Cyclo12(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Cyclo12& Cyclo12::operator+=(const Cyclo12& o)
{
    for (int k = 0; k < 4; ++k)
        c_[k] += o.c_[k];
    return *this;
}

Cyclo12& Cyclo12::operator-=(const Cyclo12& o)
{
    for (int k = 0; k < 4; ++k)
        c_[k] -= o.c_[k];
    return *this;
}

Cyclo12& Cyclo12::operator*=(const Cyclo12& o)
{
    if (o.is_rational()) {
        for (auto& x : c_)
            x *= o.c_[0];
        return *this;
    }
    std::array<Rational, 7> p{};
    for (int a = 0; a < 4; ++a) {
        if (c_[a] == 0)
            continue;
        for (int b = 0; b < 4; ++b)
            if (o.c_[b] != 0)
                p[a + b] += c_[a] * o.c_[b];
    }
    // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
    p[0] -= p[6];
    p[3] += p[5];
    p[1] -= p[5];
    p[2] += p[4];
    p[0] -= p[4];
    for (int k = 0; k < 4; ++k)
        c_[k] = p[k];
    return *this;
}

Cyclo12 Cyclo12::inverse() const
{
    if (is_zero())
        throw std::domain_error("Cyclo12: inverse of zero");
    if (is_rational())
        return Cyclo12(Rational(1) / c_[0]);
    // solve M x = e0 with M the multiplication-by-this matrix
    std::array<std::array<Rational, 5>, 4> m;
    Cyclo12 basis[4] = {Cyclo12(1), zeta(), zeta() * zeta(), imag_unit()};
    for (int col = 0; col < 4; ++col) {
        Cyclo12 prod = *this * basis[col];
        for (int row = 0; row < 4; ++row)
            m[row][col] = prod.c_[row];
    }
    for (int row = 0; row < 4; ++row)
        m[row][4] = row == 0 ? 1 : 0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (m[piv][col] == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        Rational inv = Rational(1) / m[col][col];
        for (int k = col; k < 5; ++k)
            m[col][k] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            Rational f = m[row][col];
            for (int k = col; k < 5; ++k)
                m[row][k] -= f * m[col][k];
        }
    }
    return Cyclo12(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyclo12& Cyclo12::operator/=(const Cyclo12& o)
{
    return *this *= o.inverse();
}

Cyclo12 Cyclo12::pow(long e) const
{
    Cyclo12 base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -e : e;
    Cyclo12 r(1);
    while (n) {
        if (n & 1)
            r *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return r;
}

bool Cyclo12::operator<(const Cyclo12& o) const
{
    for (int k = 0; k < 4; ++k) {
        if (c_[k] < o.c_[k])
            return true;
        if (o.c_[k] < c_[k])
            return false;
    }
    return false;
}

std::string Cyclo12::to_string() const
{
    // z = -i w, z^2 = 1 + w, z^3 = i
    Rational one = c_[0] + c_[2], w = c_[2], im = c_[3], iw = -c_[1];
    std::string out;
    auto term = [&](const Rational& q, const char* sym) {
        if (q == 0)
            return;
        Rational a = abs(q);
        bool neg = q < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (!*sym) {
            out += a.get_str();
            return;
        }
        if (a != 1)
            out += a.get_str() + "*";
        out += sym;
    };
    term(one, "");
    term(w, "w");
    term(im, "i");
    term(iw, "i*w");
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Cyclo12& x)
{
    return os << x.to_string();
}

}
