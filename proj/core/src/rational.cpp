#include "antiassoc/rational.hpp"

#include <stdexcept>

namespace antiassoc {

Rational parse_rational(std::string_view text)
{
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

static bool exact_root_z(const mpz_class& z, unsigned k, mpz_class& out)
{
    if (z < 0) {
        if (k % 2 == 0)
            return false;
        mpz_class m = -z;
        if (!mpz_root(out.get_mpz_t(), m.get_mpz_t(), k))
            return false;
        out = -out;
        return true;
    }
    return mpz_root(out.get_mpz_t(), z.get_mpz_t(), k) != 0;
}

bool exact_root(const Rational& q, unsigned k, Rational& out)
{
    if (k == 0)
        return false;
    mpz_class n, d;
    if (!exact_root_z(q.get_num(), k, n) || !exact_root_z(q.get_den(), k, d))
        return false;
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

}
