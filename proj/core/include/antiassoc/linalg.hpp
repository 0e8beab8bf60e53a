#pragma once

#include "antiassoc/bigfloat.hpp"
#include "antiassoc/cyclo12.hpp"
#include "antiassoc/ratfun.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace antiassoc {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const F& fill = F(0)) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, fill) {}
    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<F>>& rows, int cols)
    {
        Matrix m(int(rows.size()), cols);
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    Vec<F> row(int i) const { return Vec<F>(a_.begin() + std::size_t(i) * cols_, a_.begin() + std::size_t(i + 1) * cols_); }
    void append_row(const Vec<F>& r)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = int(r.size());
        assert(int(r.size()) == cols_);
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }
    void swap_rows(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    Matrix transpose() const
    {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.a_ = a_;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k)))
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j)))
                        c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    Vec<F> apply(const Vec<F>& v) const
    {
        Vec<F> r(rows_, F(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero((*this)(i, j)) && !is_zero(v[j]))
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> m;
    int rank = 0;
    std::vector<int> pivots;
};

template <class F>
inline constexpr bool normalizing_field = std::is_same_v<F, Rational> || std::is_same_v<F, Cyclo12>;

// Gauss-Jordan touching only rows with a nonzero entry in the pivot column
template <class F>
RrefResult<F> rref_sparse(Matrix<F> m)
{
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        m.swap_rows(p, r);
        if (m(r, c) != F(1)) {
            F inv = F(1) / m(r, c);
            for (int j = c; j < cols; ++j)
                if (!is_zero(m(r, j)))
                    m(r, j) *= inv;
        }
        std::vector<int> support;
        for (int j = c + 1; j < cols; ++j)
            if (!is_zero(m(r, j)))
                support.push_back(j);
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            F a = m(i, c);
            m(i, c) = F(0);
            for (int j : support)
                m(i, j) -= a * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

// fraction-free forward pass, then pivot normalization and back substitution
template <class F>
RrefResult<F> rref(Matrix<F> m)
{
    if constexpr (normalizing_field<F>)
        return rref_sparse(std::move(m));
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    F prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        m.swap_rows(p, r);
        F piv = m(r, c);
        for (int i = r + 1; i < rows; ++i) {
            F a = m(i, c);
            for (int j = c; j < cols; ++j) {
                if (is_zero(a) && is_zero(m(i, j)))
                    continue;
                F v = piv * m(i, j);
                if (!is_zero(a) && !is_zero(m(r, j)))
                    v -= a * m(r, j);
                m(i, j) = v / prev;
            }
            // entries left of c are already zero
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    for (int k = r - 1; k >= 0; --k) {
        int c = pivots[k];
        F inv = F(1) / m(k, c);
        for (int j = c; j < cols; ++j)
            if (!is_zero(m(k, j)))
                m(k, j) = m(k, j) * inv;
        for (int i = 0; i < k; ++i) {
            F a = m(i, c);
            if (is_zero(a))
                continue;
            for (int j = c; j < cols; ++j)
                if (!is_zero(m(k, j)))
                    m(i, j) -= a * m(k, j);
        }
    }
    for (int i = r; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = F(0);
    return {std::move(m), r, std::move(pivots)};
}

template <class F>
int rank(const Matrix<F>& m)
{
    return rref(m).rank;
}

template <class F>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient), basis_(0, ambient) {}
    static Subspace full(int n) { return span(Matrix<F>::identity(n)); }
    static Subspace span(const Matrix<F>& rows)
    {
        auto r = rref(rows);
        Subspace s(rows.cols());
        for (int i = 0; i < r.rank; ++i)
            s.basis_.append_row(r.m.row(i));
        s.pivots_ = std::move(r.pivots);
        return s;
    }
    static Subspace span(const std::vector<Vec<F>>& rows, int n)
    {
        return span(Matrix<F>::from_rows(rows, n));
    }

    int ambient() const { return n_; }
    int dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    Vec<F> vector(int k) const { return basis_.row(k); }
    const std::vector<int>& pivots() const { return pivots_; }
    bool is_zero() const { return dim() == 0; }

    bool contains(const Vec<F>& v) const
    {
        Vec<F> r = v;
        for (int k = 0; k < dim(); ++k) {
            int c = pivots_[k];
            if (antiassoc::is_zero(r[c]))
                continue;
            F a = r[c];
            for (int j = 0; j < n_; ++j)
                if (!antiassoc::is_zero(basis_(k, j)))
                    r[j] -= a * basis_(k, j);
        }
        for (const auto& x : r)
            if (!antiassoc::is_zero(x))
                return false;
        return true;
    }
    bool contains(const Subspace& o) const
    {
        for (int k = 0; k < o.dim(); ++k)
            if (!contains(o.vector(k)))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    int n_ = 0;
    Matrix<F> basis_;
    std::vector<int> pivots_;
};

template <class F>
Subspace<F> kernel(const Matrix<F>& m)
{
    auto r = rref(m);
    int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivots)
        is_pivot[c] = true;
    Matrix<F> basis(0, cols);
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec<F> v(cols, F(0));
        v[f] = F(1);
        for (int k = 0; k < r.rank; ++k)
            if (!is_zero(r.m(k, f)))
                v[r.pivots[k]] = -r.m(k, f);
        basis.append_row(v);
    }
    if (basis.rows() == 0)
        return Subspace<F>(cols);
    return Subspace<F>::span(basis);
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b)
{
    Matrix<F> m = a.basis();
    for (int k = 0; k < b.dim(); ++k)
        m.append_row(b.vector(k));
    if (m.rows() == 0)
        return Subspace<F>(a.ambient());
    return Subspace<F>::span(m);
}

// {x : <x, v> = 0 for all v in s}, bilinear pairing without conjugation
template <class F>
Subspace<F> orthogonal(const Subspace<F>& s)
{
    if (s.dim() == 0)
        return Subspace<F>::full(s.ambient());
    return kernel(s.basis());
}

template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersect: ambient mismatch");
    return orthogonal(sum(orthogonal(a), orthogonal(b)));
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b)
{
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto r = rref(aug);
    Vec<F> x(m.cols(), F(0));
    for (int k = 0; k < r.rank; ++k) {
        if (r.pivots[k] == m.cols())
            return std::nullopt;
        x[r.pivots[k]] = r.m(k, m.cols());
    }
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m)
{
    int n = m.rows();
    if (m.cols() != n)
        return std::nullopt;
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = r.m(i, n + j);
    return inv;
}

// Bareiss determinant, exact division
template <class F>
F determinant(Matrix<F> m)
{
    int n = m.rows();
    if (n == 0)
        return F(1);
    F prev(1);
    bool neg = false;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0)
            return F(0);
        if (p != c) {
            m.swap_rows(p, c);
            neg = !neg;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j)
                m(i, j) = (m(c, c) * m(i, j) - m(i, c) * m(c, j)) / prev;
        prev = m(c, c);
    }
    return neg ? F(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

struct NumericSolution {
    std::optional<Vec<BigComplex>> x;
    bool condition_warning = false;
    bool complete_pivoting = false;
};

// row-equilibrated Gaussian elimination; falls back to complete pivoting
// when a partial pivot drops below 2^(-prec/2)
NumericSolution solve_numeric(const Matrix<BigComplex>& m, const Vec<BigComplex>& b, mpfr_prec_t prec);

}
