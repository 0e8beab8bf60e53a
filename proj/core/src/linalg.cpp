#include "antiassoc/linalg.hpp"

namespace antiassoc {

namespace {

struct Elimination {
    bool ok = true;
    bool small_pivot = false;
    Vec<BigComplex> x;
};

Elimination eliminate(Matrix<BigComplex> a, Vec<BigComplex> b, bool complete, mpfr_prec_t prec)
{
    int n = a.rows(), cols = a.cols();
    BigFloat tiny = BigFloat::pow2(-long(prec) / 2, prec);
    BigFloat zero_cut = BigFloat::pow2(-long(prec) + 8, prec);
    std::vector<int> perm(cols);
    for (int j = 0; j < cols; ++j)
        perm[j] = j;
    Elimination out;
    int r = 0;
    for (int c = 0; c < cols && r < n; ++c) {
        int pi = -1, pj = c;
        BigFloat best(prec);
        if (complete) {
            for (int i = r; i < n; ++i)
                for (int j = c; j < cols; ++j) {
                    BigFloat m = a(i, j).norm_inf();
                    if (pi < 0 || best < m) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
        } else {
            for (int i = r; i < n; ++i) {
                BigFloat m = a(i, c).norm_inf();
                if (pi < 0 || best < m) {
                    best = m;
                    pi = i;
                }
            }
        }
        if (pi < 0 || best <= zero_cut) {
            if (complete)
                break;
            out.small_pivot = true;
            continue;
        }
        if (best < tiny)
            out.small_pivot = true;
        a.swap_rows(pi, r);
        std::swap(b[pi], b[r]);
        if (pj != c) {
            for (int i = 0; i < n; ++i)
                std::swap(a(i, pj), a(i, c));
            std::swap(perm[pj], perm[c]);
        }
        BigComplex inv = BigComplex(Rational(1), prec) / a(r, c);
        for (int i = r + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            BigComplex f = a(i, c) * inv;
            for (int j = c; j < cols; ++j)
                a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        ++r;
    }
    BigFloat bscale(prec);
    for (const auto& v : b)
        if (bscale < v.norm_inf())
            bscale = v.norm_inf();
    for (int i = r; i < n; ++i)
        if (bscale * BigFloat::pow2(-long(prec) / 2, prec) < b[i].norm_inf()) {
            out.ok = false;
            return out;
        }
    Vec<BigComplex> y(cols, BigComplex(prec));
    for (int k = r - 1; k >= 0; --k) {
        int c = k;
        while (c < cols && a(k, c).norm_inf() <= zero_cut)
            ++c;
        if (c >= cols)
            continue;
        BigComplex s = b[k];
        for (int j = c + 1; j < cols; ++j)
            if (!a(k, j).is_zero())
                s -= a(k, j) * y[j];
        y[c] = s / a(k, c);
    }
    out.x.assign(cols, BigComplex(prec));
    for (int j = 0; j < cols; ++j)
        out.x[perm[j]] = y[j];
    return out;
}

}

NumericSolution solve_numeric(const Matrix<BigComplex>& m, const Vec<BigComplex>& b, mpfr_prec_t prec)
{
    int n = m.rows(), cols = m.cols();
    Matrix<BigComplex> a = m;
    Vec<BigComplex> rhs = b;
    // scale each row to unit max entry
    for (int i = 0; i < n; ++i) {
        BigFloat mx(prec);
        for (int j = 0; j < cols; ++j)
            if (mx < a(i, j).norm_inf())
                mx = a(i, j).norm_inf();
        if (mx.is_zero())
            continue;
        BigComplex s(BigFloat(1L, prec) / mx, BigFloat(prec));
        for (int j = 0; j < cols; ++j)
            a(i, j) *= s;
        rhs[i] *= s;
    }
    NumericSolution out;
    Elimination e = eliminate(a, rhs, false, prec);
    if (e.small_pivot) {
        out.condition_warning = true;
        out.complete_pivoting = true;
        e = eliminate(a, rhs, true, prec);
    }
    if (e.ok)
        out.x = std::move(e.x);
    return out;
}

}
