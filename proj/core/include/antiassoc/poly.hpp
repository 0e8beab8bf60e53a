#pragma once

#include "antiassoc/bigfloat.hpp"
#include "antiassoc/cyclo12.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace antiassoc {

// sorted by symbol name, exponents positive
using Monomial = std::vector<std::pair<std::string, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);
int monomial_degree(const Monomial& m, const std::string& sym);
// lexicographic order on exponent vectors, symbols compared alphabetically
bool monomial_lex_less(const Monomial& a, const Monomial& b);

class Poly {
public:
    using Terms = std::map<Monomial, Cyclo12>;

    Poly() = default;
    Poly(long c) : Poly(Cyclo12(c)) {}
    Poly(const Rational& c) : Poly(Cyclo12(c)) {}
    Poly(const Cyclo12& c);
    static Poly symbol(const std::string& name, int exp = 1);
    static Poly term(const Monomial& m, const Cyclo12& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclo12 constant_term() const;
    std::set<std::string> symbols() const;
    std::size_t size() const { return terms_.size(); }

    int degree(const std::string& sym) const;
    int min_degree(const std::string& sym) const;
    int total_degree() const;
    // coefficient of sym^d, as a polynomial in the remaining symbols
    Poly coeff(const std::string& sym, int d) const;
    std::pair<Monomial, Cyclo12> leading_term() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly pow(unsigned e) const;
    Poly scaled(const Cyclo12& c) const;

    Poly derivative(const std::string& sym) const;
    Poly substitute(const std::string& sym, const Poly& value) const;
    Poly substitute(const std::map<std::string, Poly>& values) const;
    // all symbols must be assigned
    Cyclo12 eval(const std::map<std::string, Cyclo12>& values) const;
    BigComplex eval(const std::map<std::string, BigComplex>& values, mpfr_prec_t prec) const;

    // monomial gcd of all terms
    Monomial content_monomial() const;
    Poly divide_monomial(const Monomial& m) const;
    std::optional<Poly> divide_exact(const Poly& d) const;

    std::string to_string() const;

private:
    Terms terms_;
};

BigComplex to_complex(const Cyclo12& c, mpfr_prec_t prec);

inline bool is_zero(const Poly& p) { return p.is_zero(); }
bool poly_equal(const Poly& p, const Poly& q);
// gcd when both inputs involve at most one common symbol, monic; nullopt otherwise
std::optional<Poly> univariate_gcd(const Poly& a, const Poly& b);

}
