#include "antiassoc/ratfun.hpp"

#include <stdexcept>

namespace antiassoc {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFun::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Monomial mn = num_.content_monomial(), md = den_.content_monomial();
    Monomial common;
    for (const auto& [s, e] : mn) {
        int d = std::min(e, monomial_degree(md, s));
        if (d > 0)
            common.emplace_back(s, d);
    }
    if (!common.empty()) {
        num_ = num_.divide_monomial(common);
        den_ = den_.divide_monomial(common);
    }
    if (!den_.is_constant()) {
        if (auto g = univariate_gcd(num_, den_); g && !g->is_constant()) {
            num_ = *num_.divide_exact(*g);
            den_ = *den_.divide_exact(*g);
        } else if (auto q = num_.divide_exact(den_)) {
            num_ = std::move(*q);
            den_ = Poly(1);
        } else if (auto r = den_.divide_exact(num_)) {
            den_ = std::move(*r);
            num_ = Poly(1);
        }
    }
    Cyclo12 lead = den_.leading_term().second;
    if (lead != Cyclo12(1)) {
        Cyclo12 inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::set<std::string> RatFun::symbols() const
{
    auto s = num_.symbols();
    auto d = den_.symbols();
    s.insert(d.begin(), d.end());
    return s;
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (den_ == o.den_)
        num_ += o.num_;
    else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o)
{
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator==(const RatFun& a, const RatFun& b)
{
    return poly_equal(a.num_ * b.den_, b.num_ * a.den_);
}

RatFun RatFun::pow(long e) const
{
    if (e >= 0)
        return RatFun(num_.pow(e), den_.pow(e), true);
    if (is_zero())
        throw std::domain_error("zero to a negative power");
    return RatFun(den_.pow(-e), num_.pow(-e));
}

RatFun RatFun::derivative(const std::string& sym) const
{
    return RatFun(num_.derivative(sym) * den_ - num_ * den_.derivative(sym), den_ * den_);
}

RatFun RatFun::substitute(const std::map<std::string, RatFun>& values) const
{
    auto sub = [&](const Poly& p) {
        RatFun r;
        for (const auto& [m, c] : p.terms()) {
            RatFun t(c);
            Monomial kept;
            for (const auto& [s, e] : m) {
                auto it = values.find(s);
                if (it == values.end())
                    kept.emplace_back(s, e);
                else
                    t *= it->second.pow(e);
            }
            if (!kept.empty())
                t *= RatFun(Poly::term(kept, Cyclo12(1)));
            r += t;
        }
        return r;
    };
    return sub(num_) / sub(den_);
}

Cyclo12 RatFun::eval(const std::map<std::string, Cyclo12>& values) const
{
    Cyclo12 d = den_.eval(values);
    if (d.is_zero())
        throw std::domain_error("rational function pole");
    return num_.eval(values) / d;
}

BigComplex RatFun::eval(const std::map<std::string, BigComplex>& values, mpfr_prec_t prec) const
{
    return num_.eval(values, prec) / den_.eval(values, prec);
}

std::string RatFun::to_string() const
{
    if (den_ == Poly(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}
