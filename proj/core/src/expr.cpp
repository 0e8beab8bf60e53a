#include "antiassoc/expr.hpp"

#include <cctype>
#include <numeric>

namespace antiassoc {

using Kind = Expr::Kind;

Expr Expr::number(const Rational& q)
{
    if (q < 0)
        return neg(number(-q));
    return Expr(std::make_shared<const Node>(Node{Kind::Number, q, {}, {}}));
}

Expr Expr::symbol(const std::string& name)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Symbol, 0, name, {}}));
}

Expr Expr::neg(Expr a)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Neg, 0, {}, {std::move(a)}}));
}

Expr Expr::binary(Kind k, Expr a, Expr b)
{
    return Expr(std::make_shared<const Node>(Node{k, 0, {}, {std::move(a), std::move(b)}}));
}

Expr Expr::pow(Expr base, const Rational& exponent)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Pow, exponent, {}, {std::move(base)}}));
}

Expr Expr::sqrt(Expr a)
{
    return Expr(std::make_shared<const Node>(Node{Kind::Sqrt, 0, {}, {std::move(a)}}));
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.node_->value != b.node_->value || a.name() != b.name()
        || a.arity() != b.arity())
        return false;
    for (std::size_t k = 0; k < a.arity(); ++k)
        if (!(a.arg(k) == b.arg(k)))
            return false;
    return true;
}

std::set<std::string> Expr::symbols() const
{
    std::set<std::string> out;
    std::vector<const Expr*> stack{this};
    while (!stack.empty()) {
        const Expr* e = stack.back();
        stack.pop_back();
        if (e->kind() == Kind::Symbol)
            out.insert(e->name());
        for (const auto& a : e->node_->args)
            stack.push_back(&a);
    }
    return out;
}

unsigned long Expr::root_index() const
{
    unsigned long n = 1;
    if (kind() == Kind::Pow)
        n = exponent().get_den().get_ui();
    else if (kind() == Kind::Sqrt)
        n = 2;
    for (const auto& a : node_->args)
        n = std::lcm(n, a.root_index());
    return n;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, const std::optional<std::set<std::string>>& syms) : s_(s), syms_(syms) {}

    Expr parse()
    {
        Expr e = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit()
    {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    mpz_class integer()
    {
        if (!at_digit())
            fail("expected integer");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    mpz_class positive_integer()
    {
        mpz_class d = integer();
        if (d == 0)
            fail("zero denominator");
        return d;
    }

    Expr expr()
    {
        Expr e = term();
        for (;;) {
            if (eat('+'))
                e = Expr::binary(Kind::Add, e, term());
            else if (eat('-'))
                e = Expr::binary(Kind::Sub, e, term());
            else
                return e;
        }
    }

    Expr term()
    {
        Expr e = factor();
        for (;;) {
            if (eat('*'))
                e = Expr::binary(Kind::Mul, e, factor());
            else if (eat('/'))
                e = Expr::binary(Kind::Div, e, factor());
            else
                return e;
        }
    }

    Expr factor()
    {
        if (eat('-'))
            return Expr::neg(factor());
        Expr b = base();
        if (eat('^'))
            return Expr::pow(b, exponent());
        return b;
    }

    Rational exponent()
    {
        if (eat('(')) {
            bool neg = eat('-');
            mpz_class p = integer();
            mpz_class q = 1;
            if (eat('/'))
                q = positive_integer();
            if (!eat(')'))
                fail("expected ')' in exponent");
            Rational r(neg ? mpz_class(-p) : p, q);
            r.canonicalize();
            return r;
        }
        bool neg = eat('-');
        mpz_class p = integer();
        return Rational(neg ? mpz_class(-p) : p);
    }

    Expr base()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class p = integer();
            std::size_t save = pos_;
            if (eat('/') && at_digit()) {
                Rational r(p, positive_integer());
                r.canonicalize();
                return Expr::number(r);
            }
            pos_ = save;
            return Expr::number(Rational(p));
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size()
                   && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "sqrt") {
                if (!eat('('))
                    fail("expected '(' after sqrt");
                Expr e = expr();
                if (!eat(')'))
                    fail("expected ')'");
                return Expr::sqrt(e);
            }
            if (name != "i" && name != "w" && syms_ && !syms_->count(name)) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return Expr::symbol(name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::optional<std::set<std::string>>& syms_;
    std::size_t pos_ = 0;
};

enum Level { SUM = 1, PRODUCT = 2, FACTOR = 3, POWER = 4, ATOM = 5 };

int level(const Expr& e)
{
    switch (e.kind()) {
    case Kind::Add:
    case Kind::Sub:
        return SUM;
    case Kind::Mul:
    case Kind::Div:
        return PRODUCT;
    case Kind::Neg:
        return FACTOR;
    case Kind::Pow:
        return POWER;
    case Kind::Number:
        return e.value().get_den() == 1 ? ATOM : POWER;
    default:
        return ATOM;
    }
}

void print(const Expr& e, int min_level, std::string& out);

void wrap(const Expr& e, int min_level, std::string& out)
{
    if (level(e) < min_level) {
        out += "(";
        print(e, SUM, out);
        out += ")";
    } else
        print(e, min_level, out);
}

std::string rational_exponent(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return "(" + q.get_str() + ")";
}

void print(const Expr& e, int, std::string& out)
{
    switch (e.kind()) {
    case Kind::Number:
        out += e.value().get_str();
        break;
    case Kind::Symbol:
        out += e.name();
        break;
    case Kind::Neg:
        out += "-";
        wrap(e.arg(0), FACTOR, out);
        break;
    case Kind::Add:
    case Kind::Sub:
        wrap(e.arg(0), SUM, out);
        out += e.kind() == Kind::Add ? " + " : " - ";
        wrap(e.arg(1), PRODUCT, out);
        break;
    case Kind::Mul:
        wrap(e.arg(0), PRODUCT, out);
        out += "*";
        wrap(e.arg(1), FACTOR, out);
        break;
    case Kind::Div: {
        wrap(e.arg(0), PRODUCT, out);
        out += "/";
        std::string rhs;
        wrap(e.arg(1), FACTOR, rhs);
        if (!rhs.empty() && std::isdigit(static_cast<unsigned char>(rhs[0])))
            rhs = "(" + rhs + ")";
        out += rhs;
        break;
    }
    case Kind::Pow:
        wrap(e.arg(0), ATOM, out);
        out += "^" + rational_exponent(e.exponent());
        break;
    case Kind::Sqrt:
        out += "sqrt(";
        print(e.arg(0), SUM, out);
        out += ")";
        break;
    }
}

}

Expr parse_expr(std::string_view text, const std::optional<std::set<std::string>>& symbols)
{
    return Parser(text, symbols).parse();
}

std::string print_expr(const Expr& e)
{
    std::string out;
    print(e, SUM, out);
    return out;
}

namespace {

bool cancels(const BigComplex& a, const BigComplex& b, const BigComplex& r, mpfr_prec_t prec)
{
    BigFloat m = a.norm_inf();
    BigFloat mb = b.norm_inf();
    if (m < mb)
        m = mb;
    if (m.is_zero())
        return false;
    return r.norm_inf() < m * BigFloat::pow2(-long(prec) / 2, prec);
}

NumericValue eval(const Expr& e, const std::map<std::string, BigComplex>& env, mpfr_prec_t prec)
{
    switch (e.kind()) {
    case Kind::Number:
        return {BigComplex(e.value(), prec), false};
    case Kind::Symbol: {
        if (e.name() == "i")
            return {BigComplex(Rational(0), Rational(1), prec), false};
        if (e.name() == "w")
            return {to_complex(Cyclo12::omega(), prec), false};
        auto it = env.find(e.name());
        if (it == env.end())
            throw std::invalid_argument("unassigned symbol " + e.name());
        return {it->second, false};
    }
    case Kind::Neg: {
        auto a = eval(e.arg(0), env, prec);
        return {-a.value, a.cancellation};
    }
    case Kind::Add:
    case Kind::Sub: {
        auto a = eval(e.arg(0), env, prec);
        auto b = eval(e.arg(1), env, prec);
        BigComplex r = e.kind() == Kind::Add ? a.value + b.value : a.value - b.value;
        bool c = a.cancellation || b.cancellation || cancels(a.value, b.value, r, prec);
        return {r, c};
    }
    case Kind::Mul: {
        auto a = eval(e.arg(0), env, prec);
        auto b = eval(e.arg(1), env, prec);
        return {a.value * b.value, a.cancellation || b.cancellation};
    }
    case Kind::Div: {
        auto a = eval(e.arg(0), env, prec);
        auto b = eval(e.arg(1), env, prec);
        if (b.value.is_zero())
            throw std::domain_error("division by zero");
        return {a.value / b.value, a.cancellation || b.cancellation};
    }
    case Kind::Pow: {
        auto a = eval(e.arg(0), env, prec);
        if (a.value.is_zero() && e.exponent() < 0)
            throw std::domain_error("division by zero");
        return {a.value.pow(e.exponent()), a.cancellation};
    }
    case Kind::Sqrt: {
        auto a = eval(e.arg(0), env, prec);
        return {a.value.sqrt(), a.cancellation};
    }
    }
    throw std::logic_error("bad expression node");
}

Cyclo12 exact_power(const Cyclo12& base, const Rational& e)
{
    if (e.get_den() == 1)
        return base.pow(e.get_num().get_si());
    if (base.is_zero()) {
        if (e > 0)
            return Cyclo12();
        throw std::domain_error("division by zero");
    }
    if (!base.is_rational())
        throw NotExact("fractional power of an irrational value");
    const Rational& q = base.rational_part();
    unsigned long den = e.get_den().get_ui();
    Rational r;
    if (q > 0) {
        if (!exact_root(q, den, r))
            throw NotExact("root of " + q.get_str() + " is not rational");
        return Cyclo12(r).pow(e.get_num().get_si());
    }
    if (den == 2 && exact_root(Rational(-q), 2, r))
        return (Cyclo12(r) * Cyclo12::imag_unit()).pow(e.get_num().get_si());
    throw NotExact("fractional power of a negative value");
}

}

NumericValue eval_expr(const Expr& e, const std::map<std::string, BigComplex>& env, mpfr_prec_t prec)
{
    return eval(e, env, prec);
}

Cyclo12 eval_exact(const Expr& e, const std::map<std::string, Cyclo12>& env)
{
    switch (e.kind()) {
    case Kind::Number:
        return Cyclo12(e.value());
    case Kind::Symbol: {
        if (e.name() == "i")
            return Cyclo12::imag_unit();
        if (e.name() == "w")
            return Cyclo12::omega();
        auto it = env.find(e.name());
        if (it == env.end())
            throw std::invalid_argument("unassigned symbol " + e.name());
        return it->second;
    }
    case Kind::Neg:
        return -eval_exact(e.arg(0), env);
    case Kind::Add:
        return eval_exact(e.arg(0), env) + eval_exact(e.arg(1), env);
    case Kind::Sub:
        return eval_exact(e.arg(0), env) - eval_exact(e.arg(1), env);
    case Kind::Mul:
        return eval_exact(e.arg(0), env) * eval_exact(e.arg(1), env);
    case Kind::Div: {
        Cyclo12 d = eval_exact(e.arg(1), env);
        if (d.is_zero())
            throw std::domain_error("division by zero");
        return eval_exact(e.arg(0), env) / d;
    }
    case Kind::Pow:
        return exact_power(eval_exact(e.arg(0), env), e.exponent());
    case Kind::Sqrt:
        return exact_power(eval_exact(e.arg(0), env), Rational(1, 2));
    }
    throw std::logic_error("bad expression node");
}

namespace {

// c * m with m a Laurent monomial
std::optional<std::pair<Cyclo12, Monomial>> as_monomial(const Poly& p)
{
    if (p.size() != 1)
        return std::nullopt;
    return std::make_pair(p.terms().begin()->second, p.terms().begin()->first);
}

RatFun ratfun_power(const RatFun& base, const Rational& e)
{
    if (e.get_den() == 1)
        return base.pow(e.get_num().get_si());
    if (base.is_zero()) {
        if (e > 0)
            return RatFun();
        throw std::domain_error("division by zero");
    }
    auto n = as_monomial(base.num());
    auto d = as_monomial(base.den());
    if (!n || !d)
        throw NotExact("radical of a non-monomial");
    Cyclo12 c = n->first / d->first;
    Monomial m = monomial_div(n->second, d->second);
    long den = e.get_den().get_si();
    long p = e.get_num().get_si();
    Monomial root;
    for (const auto& [s, k] : m) {
        if (k % den != 0)
            throw NotExact("radical of " + s + "^" + std::to_string(k));
        root.emplace_back(s, k / den);
    }
    Cyclo12 rc = exact_power(c, Rational(1, den));
    Poly num(1), dp(1);
    for (const auto& [s, k] : root) {
        if (k > 0)
            num *= Poly::symbol(s, k);
        else
            dp *= Poly::symbol(s, -k);
    }
    return RatFun(num.scaled(rc), dp).pow(p);
}

}

RatFun to_ratfun(const Expr& e, const std::map<std::string, RatFun>& env)
{
    switch (e.kind()) {
    case Kind::Number:
        return RatFun(Cyclo12(e.value()));
    case Kind::Symbol: {
        if (e.name() == "i")
            return RatFun(Cyclo12::imag_unit());
        if (e.name() == "w")
            return RatFun(Cyclo12::omega());
        auto it = env.find(e.name());
        if (it != env.end())
            return it->second;
        return RatFun(Poly::symbol(e.name()));
    }
    case Kind::Neg:
        return -to_ratfun(e.arg(0), env);
    case Kind::Add:
        return to_ratfun(e.arg(0), env) + to_ratfun(e.arg(1), env);
    case Kind::Sub:
        return to_ratfun(e.arg(0), env) - to_ratfun(e.arg(1), env);
    case Kind::Mul:
        return to_ratfun(e.arg(0), env) * to_ratfun(e.arg(1), env);
    case Kind::Div: {
        RatFun d = to_ratfun(e.arg(1), env);
        if (d.is_zero())
            throw std::domain_error("division by zero");
        return to_ratfun(e.arg(0), env) / d;
    }
    case Kind::Pow:
        return ratfun_power(to_ratfun(e.arg(0), env), e.exponent());
    case Kind::Sqrt:
        return ratfun_power(to_ratfun(e.arg(0), env), Rational(1, 2));
    }
    throw std::logic_error("bad expression node");
}

Poly to_poly(const Expr& e, const std::map<std::string, RatFun>& env)
{
    RatFun f = to_ratfun(e, env);
    if (!f.is_polynomial())
        throw NotExact("expression is not a polynomial: " + print_expr(e));
    return f.num().scaled(f.den().constant_term().inverse());
}

}
