#include "antiassoc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace antiassoc {

Monomial monomial_mul(const Monomial& a, const Monomial& b)
{
    Monomial r;
    r.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first))
            r.push_back(*i++);
        else if (i == a.end() || j->first < i->first)
            r.push_back(*j++);
        else {
            int e = i->second + j->second;
            if (e != 0)
                r.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

int monomial_degree(const Monomial& m, const std::string& sym)
{
    for (const auto& [s, e] : m)
        if (s == sym)
            return e;
    return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b)
{
    for (const auto& [s, e] : a)
        if (monomial_degree(b, s) < e)
            return false;
    return true;
}

Monomial monomial_div(const Monomial& a, const Monomial& b)
{
    Monomial inv = b;
    for (auto& p : inv)
        p.second = -p.second;
    return monomial_mul(a, inv);
}

bool monomial_lex_less(const Monomial& a, const Monomial& b)
{
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first))
            return false;
        if (i == a.end() || j->first < i->first)
            return true;
        if (i->second != j->second)
            return i->second < j->second;
        ++i;
        ++j;
    }
    return false;
}

Poly::Poly(const Cyclo12& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial{}, c);
}

Poly Poly::symbol(const std::string& name, int exp)
{
    Poly p;
    if (exp == 0)
        p.terms_.emplace(Monomial{}, Cyclo12(1));
    else
        p.terms_.emplace(Monomial{{name, exp}}, Cyclo12(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Cyclo12& c)
{
    Poly p;
    if (!c.is_zero())
        p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclo12 Poly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Cyclo12() : it->second;
}

std::set<std::string> Poly::symbols() const
{
    std::set<std::string> s;
    for (const auto& [m, c] : terms_)
        for (const auto& p : m)
            s.insert(p.first);
    return s;
}

int Poly::degree(const std::string& sym) const
{
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, monomial_degree(m, sym));
    return d;
}

int Poly::min_degree(const std::string& sym) const
{
    if (terms_.empty())
        return 0;
    int d = INT32_MAX;
    for (const auto& [m, c] : terms_)
        d = std::min(d, monomial_degree(m, sym));
    return d;
}

int Poly::total_degree() const
{
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int k = 0;
        for (const auto& p : m)
            k += p.second;
        d = std::max(d, k);
    }
    return d;
}

Poly Poly::coeff(const std::string& sym, int d) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m, sym) != d)
            continue;
        Monomial rest;
        for (const auto& p : m)
            if (p.first != sym)
                rest.push_back(p);
        r.terms_.emplace(std::move(rest), c);
    }
    return r;
}

std::pair<Monomial, Cyclo12> Poly::leading_term() const
{
    if (terms_.empty())
        throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (monomial_lex_less(best->first, it->first))
            best = it;
    return *best;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Cyclo12 c = ca * cb;
            auto [it, fresh] = r.terms_.emplace(monomial_mul(ma, mb), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero())
                    r.terms_.erase(it);
            }
        }
    return r;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::pow(unsigned e) const
{
    Poly r(1), base = *this;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

Poly Poly::scaled(const Cyclo12& c) const
{
    if (c.is_zero())
        return Poly();
    Poly r = *this;
    for (auto& [m, v] : r.terms_)
        v *= c;
    return r;
}

Poly Poly::derivative(const std::string& sym) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        int d = monomial_degree(m, sym);
        if (d == 0)
            continue;
        r += Poly::term(monomial_mul(m, Monomial{{sym, -1}}), c * Cyclo12(d));
    }
    return r;
}

Poly Poly::substitute(const std::string& sym, const Poly& value) const
{
    return substitute(std::map<std::string, Poly>{{sym, value}});
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const
{
    std::map<std::pair<std::string, int>, Poly> cache;
    auto power = [&](const std::string& s, int e) -> const Poly& {
        auto key = std::make_pair(s, e);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, values.at(s).pow(e)).first;
        return it->second;
    };
    Poly r;
    for (const auto& [m, c] : terms_) {
        Monomial kept;
        Poly factor(c);
        for (const auto& [s, e] : m) {
            if (values.count(s)) {
                if (e < 0)
                    throw std::domain_error("substitution into negative exponent");
                factor *= power(s, e);
            } else
                kept.emplace_back(s, e);
        }
        if (!kept.empty())
            factor *= Poly::term(kept, Cyclo12(1));
        r += factor;
    }
    return r;
}

Cyclo12 Poly::eval(const std::map<std::string, Cyclo12>& values) const
{
    Cyclo12 r;
    for (const auto& [m, c] : terms_) {
        Cyclo12 v = c;
        for (const auto& [s, e] : m) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("unassigned symbol " + s);
            v *= it->second.pow(e);
        }
        r += v;
    }
    return r;
}

BigComplex to_complex(const Cyclo12& c, mpfr_prec_t prec)
{
    // z = cos(pi/6) + i sin(pi/6) = sqrt(3)/2 + i/2
    BigFloat h(Rational(1, 2), prec);
    BigFloat s3 = sqrt(BigFloat(3L, prec)) * h;
    BigComplex z(s3, h);
    BigComplex r(c.coeff(0), prec);
    BigComplex zk(Rational(1), prec);
    for (int k = 1; k < 4; ++k) {
        zk *= z;
        if (c.coeff(k) != 0)
            r += zk * BigComplex(c.coeff(k), prec);
    }
    return r;
}

BigComplex Poly::eval(const std::map<std::string, BigComplex>& values, mpfr_prec_t prec) const
{
    BigComplex r(prec);
    for (const auto& [m, c] : terms_) {
        BigComplex v = c.is_rational() ? BigComplex(c.coeff(0), prec) : to_complex(c, prec);
        for (const auto& [s, e] : m) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("unassigned symbol " + s);
            v *= it->second.pow(long(e));
        }
        r += v;
    }
    return r;
}

Monomial Poly::content_monomial() const
{
    if (terms_.empty())
        return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        Monomial next;
        for (const auto& [s, e] : g) {
            int d = std::min(e, monomial_degree(m, s));
            if (d > 0)
                next.emplace_back(s, d);
        }
        g = std::move(next);
        if (g.empty())
            break;
    }
    return g;
}

Poly Poly::divide_monomial(const Monomial& m) const
{
    Poly r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(monomial_div(k, m), c);
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (d.is_constant())
        return scaled(d.constant_term().inverse());
    auto [dm, dc] = d.leading_term();
    Cyclo12 dinv = dc.inverse();
    Poly q, r = *this;
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!monomial_divides(dm, rm))
            return std::nullopt;
        Poly t = Poly::term(monomial_div(rm, dm), rc * dinv);
        q += t;
        r -= t * d;
    }
    return q;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Cyclo12>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return monomial_lex_less(b.first, a.first);
    });
    std::string out;
    for (const auto& [m, c] : ts) {
        std::string mono;
        for (const auto& [s, e] : m) {
            if (!mono.empty())
                mono += "*";
            mono += s;
            if (e < 0)
                mono += "^(" + std::to_string(e) + ")";
            else if (e != 1)
                mono += "^" + std::to_string(e);
        }
        bool neg = false;
        std::string coef;
        if (c.is_rational()) {
            Rational q = c.coeff(0);
            neg = q < 0;
            q = abs(q);
            if (q != 1 || mono.empty())
                coef = q.get_str();
        } else {
            coef = "(" + c.to_string() + ")";
        }
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += coef;
        if (!coef.empty() && !mono.empty())
            out += "*";
        out += mono;
    }
    return out;
}

bool poly_equal(const Poly& p, const Poly& q)
{
    return (p - q).is_zero();
}

std::optional<Poly> univariate_gcd(const Poly& a, const Poly& b)
{
    auto sa = a.symbols(), sb = b.symbols();
    std::set<std::string> all = sa;
    all.insert(sb.begin(), sb.end());
    if (all.size() > 1)
        return std::nullopt;
    if (a.is_zero() && b.is_zero())
        return Poly();
    if (all.empty())
        return Poly(1);
    std::string s = *all.begin();
    auto monic = [](const Poly& p) { return p.scaled(p.leading_term().second.inverse()); };
    Poly x = a, y = b;
    while (!y.is_zero()) {
        // x mod y
        Poly r = x;
        int dy = y.degree(s);
        Cyclo12 ly = y.coeff(s, dy).constant_term().inverse();
        while (!r.is_zero() && r.degree(s) >= dy) {
            int dr = r.degree(s);
            Poly t = Poly::symbol(s, dr - dy).scaled(r.coeff(s, dr).constant_term() * ly);
            r -= t * y;
        }
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

}
