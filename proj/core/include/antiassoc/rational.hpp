#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace antiassoc {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// integer k-th root of a nonnegative rational when it is exact
bool exact_root(const Rational& q, unsigned k, Rational& out);

}
