#pragma once

#include "antiassoc/linalg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace antiassoc {

// e_i e_j = sum_k c(i,j,k) e_k, zero-based indices
template <class F>
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(int n, const F& fill = F(0)) : n_(n), c_(std::size_t(n) * n * n, fill) {}
    int dim() const { return n_; }
    F& operator()(int i, int j, int k) { return c_[(std::size_t(i) * n_ + j) * n_ + k]; }
    const F& operator()(int i, int j, int k) const { return c_[(std::size_t(i) * n_ + j) * n_ + k]; }
    const std::vector<F>& data() const { return c_; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    int n_ = 0;
    std::vector<F> c_;
};

using ExactTensor = Tensor<Cyclo12>;
using ParamValues = std::map<std::string, Cyclo12>;

class AlgebraSC {
public:
    AlgebraSC() = default;
    AlgebraSC(std::string name, int dim, std::vector<std::string> params = {})
        : name_(std::move(name)), params_(std::move(params)), c_(dim) {}
    AlgebraSC(std::string name, Tensor<RatFun> c, std::vector<std::string> params = {})
        : name_(std::move(name)), params_(std::move(params)), c_(std::move(c)) {}

    const std::string& name() const { return name_; }
    int dim() const { return c_.dim(); }
    const std::vector<std::string>& params() const { return params_; }
    bool is_parametric() const { return !params_.empty(); }
    const Tensor<RatFun>& constants() const { return c_; }
    void set(int i, int j, int k, RatFun v) { c_(i, j, k) = std::move(v); }

    // every parameter must be assigned
    ExactTensor at(const ParamValues& values = {}) const;
    AlgebraSC substitute(const std::map<std::string, RatFun>& values, std::vector<std::string> params) const;

private:
    std::string name_;
    std::vector<std::string> params_;
    Tensor<RatFun> c_;
};

template <class F>
Vec<F> multiply(const Tensor<F>& t, const Vec<F>& x, const Vec<F>& y)
{
    int n = t.dim();
    Vec<F> r(n, F(0));
    for (int i = 0; i < n; ++i) {
        if (is_zero(x[i]))
            continue;
        for (int j = 0; j < n; ++j) {
            if (is_zero(y[j]))
                continue;
            F xy = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (!is_zero(t(i, j, k)))
                    r[k] += xy * t(i, j, k);
        }
    }
    return r;
}

template <class F>
Vec<F> basis_vector(int n, int i)
{
    Vec<F> v(n, F(0));
    v[i] = F(1);
    return v;
}

struct Violation {
    int i, j, k;
    std::vector<std::string> residual;
};

struct IdentityReport {
    bool pass = true;
    std::vector<Violation> violations;
};

template <class F>
std::vector<std::pair<std::array<int, 3>, Vec<F>>> antiassociator_residuals(const Tensor<F>& t)
{
    int n = t.dim();
    std::vector<std::pair<std::array<int, 3>, Vec<F>>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<F> r(n, F(0));
                for (int m = 0; m < n; ++m) {
                    if (!is_zero(t(i, j, m)))
                        for (int p = 0; p < n; ++p)
                            if (!is_zero(t(m, k, p)))
                                r[p] += t(i, j, m) * t(m, k, p);
                    if (!is_zero(t(j, k, m)))
                        for (int p = 0; p < n; ++p)
                            if (!is_zero(t(i, m, p)))
                                r[p] += t(j, k, m) * t(i, m, p);
                }
                bool zero = true;
                for (const auto& x : r)
                    zero = zero && is_zero(x);
                if (!zero)
                    out.push_back({{i, j, k}, std::move(r)});
            }
    return out;
}

IdentityReport check_antiassociative(const AlgebraSC& a);

template <class F>
Subspace<F> product_space(const Tensor<F>& t, const Subspace<F>& u, const Subspace<F>& v)
{
    int n = t.dim();
    Matrix<F> rows(0, n);
    for (int a = 0; a < u.dim(); ++a)
        for (int b = 0; b < v.dim(); ++b)
            rows.append_row(multiply(t, u.vector(a), v.vector(b)));
    if (rows.rows() == 0)
        return Subspace<F>(n);
    return Subspace<F>::span(rows);
}

struct PowerChain {
    int a2 = 0, a3 = 0, a4 = 0;
};

template <class F>
PowerChain power_chain(const Tensor<F>& t)
{
    auto full = Subspace<F>::full(t.dim());
    auto a2 = product_space(t, full, full);
    auto a3 = sum(product_space(t, a2, full), product_space(t, full, a2));
    auto a4 = sum(sum(product_space(t, a3, full), product_space(t, full, a3)), product_space(t, a2, a2));
    return {a2.dim(), a3.dim(), a4.dim()};
}

struct NilpotencyReport {
    bool pass = true;
    PowerChain dims;
    // per sampled parameter point for families
    std::vector<PowerChain> samples;
};

NilpotencyReport check_nilpotency4(const AlgebraSC& a, std::uint64_t seed = 1);

// side: 0 both, 1 left {x : xA = 0}, 2 right {x : Ax = 0}
template <class F>
Subspace<F> annihilator(const Tensor<F>& t, int side = 0)
{
    int n = t.dim();
    Matrix<F> m(0, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Vec<F> left(n, F(0)), right(n, F(0));
            for (int x = 0; x < n; ++x) {
                left[x] = t(x, j, k);
                right[x] = t(j, x, k);
            }
            if (side != 2)
                m.append_row(left);
            if (side != 1)
                m.append_row(right);
        }
    if (m.rows() == 0)
        return Subspace<F>::full(n);
    return kernel(m);
}

// rows indexed by (i,j,k), columns by d(a,b) = a*n+b with d(e_b) = sum_a d(a,b) e_a
template <class F>
Matrix<F> derivation_system(const Tensor<F>& t)
{
    int n = t.dim();
    Matrix<F> m(n * n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int row = (i * n + j) * n + k;
                for (int p = 0; p < n; ++p)
                    if (!is_zero(t(i, j, p)))
                        m(row, k * n + p) += t(i, j, p);
                for (int a = 0; a < n; ++a) {
                    if (!is_zero(t(a, j, k)))
                        m(row, a * n + i) -= t(a, j, k);
                    if (!is_zero(t(i, a, k)))
                        m(row, a * n + j) -= t(i, a, k);
                }
            }
    return m;
}

template <class F>
Subspace<F> derivations(const Tensor<F>& t)
{
    if (t.dim() == 0)
        return Subspace<F>(0);
    return kernel(derivation_system(t));
}

// (g*mu)(x,y) = g mu(g^-1 x, g^-1 y)
template <class F>
Tensor<F> basis_change(const Tensor<F>& t, const Matrix<F>& g)
{
    int n = t.dim();
    auto h = inverse(g);
    if (!h)
        throw std::invalid_argument("basis change by a singular matrix");
    Matrix<F> ht = h->transpose();
    Tensor<F> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<F> p = g.apply(multiply(t, ht.row(i), ht.row(j)));
            for (int k = 0; k < n; ++k)
                out(i, j, k) = p[k];
        }
    return out;
}

struct Fingerprint {
    int dim = 0, ann = 0, a2 = 0, a3 = 0, a4 = 0, left_ann = 0, right_ann = 0, der = 0, z2 = 0, h2 = 0,
        ann_a2 = 0;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const ExactTensor& t);

struct FamilyFingerprint {
    bool generic = true;
    std::vector<std::pair<ParamValues, Fingerprint>> samples;
    const Fingerprint& value() const { return samples.front().second; }
};

FamilyFingerprint fingerprint(const AlgebraSC& a, std::uint64_t seed, int samples = 5);

// random rational in [-bound, bound] with denominators up to bound
Rational random_rational(std::mt19937_64& rng, int bound = 7);
ParamValues random_params(const std::vector<std::string>& params, std::mt19937_64& rng);
// entries in {-2..2}, invertible
Matrix<Cyclo12> random_invertible(int n, std::mt19937_64& rng);
AlgebraSC random_basis_change(const AlgebraSC& a, const Matrix<Cyclo12>& g);

}
