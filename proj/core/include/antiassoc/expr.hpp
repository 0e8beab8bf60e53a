#pragma once

#include "antiassoc/bigfloat.hpp"
#include "antiassoc/cyclo12.hpp"
#include "antiassoc/ratfun.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antiassoc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("at " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

// no exact value in Q(zeta12) or in the rational function field
class NotExact : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Expr {
public:
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Sqrt };

    Expr() : Expr(number(0)) {}

    static Expr number(const Rational& q);
    static Expr symbol(const std::string& name);
    static Expr neg(Expr a);
    static Expr binary(Kind k, Expr a, Expr b);
    static Expr pow(Expr base, const Rational& exponent);
    static Expr sqrt(Expr a);

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    const std::string& name() const { return node_->name; }
    const Rational& exponent() const { return node_->value; }
    const Expr& arg(int k) const { return node_->args[k]; }
    std::size_t arity() const { return node_->args.size(); }

    bool is_zero_literal() const { return kind() == Kind::Number && value() == 0; }
    std::set<std::string> symbols() const;
    // lcm of the denominators of fractional exponents, sqrt counting 2
    unsigned long root_index() const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    struct Node {
        Kind kind;
        Rational value;
        std::string name;
        std::vector<Expr> args;
    };
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// i and w are always accepted; an empty optional accepts any symbol
Expr parse_expr(std::string_view text, const std::optional<std::set<std::string>>& symbols = std::nullopt);
std::string print_expr(const Expr& e);

struct NumericValue {
    BigComplex value;
    bool cancellation = false;
};

NumericValue eval_expr(const Expr& e, const std::map<std::string, BigComplex>& env, mpfr_prec_t prec);
Cyclo12 eval_exact(const Expr& e, const std::map<std::string, Cyclo12>& env);
// unassigned symbols stay formal; radicals must be of monomials
RatFun to_ratfun(const Expr& e, const std::map<std::string, RatFun>& env = {});
Poly to_poly(const Expr& e, const std::map<std::string, RatFun>& env = {});

}
