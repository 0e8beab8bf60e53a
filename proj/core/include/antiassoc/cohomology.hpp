#pragma once

#include "antiassoc/algebra.hpp"
#include "antiassoc/expr.hpp"

#include <random>

namespace antiassoc {

// a cocycle is stored as an n*n vector, entry i*n+j = theta(e_i, e_j)
template <class F>
using Cocycle = Vec<F>;

template <class F>
Matrix<F> cocycle_system(const Tensor<F>& t)
{
    int n = t.dim();
    Matrix<F> m(n * n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int row = (a * n + b) * n + c;
                for (int k = 0; k < n; ++k) {
                    if (!is_zero(t(a, b, k)))
                        m(row, k * n + c) += t(a, b, k);
                    if (!is_zero(t(b, c, k)))
                        m(row, a * n + k) += t(b, c, k);
                }
            }
    return m;
}

template <class F>
bool is_cocycle(const Tensor<F>& t, const Cocycle<F>& theta)
{
    for (const auto& x : cocycle_system(t).apply(theta))
        if (!is_zero(x))
            return false;
    return true;
}

template <class F>
Subspace<F> compute_Z2(const Tensor<F>& t)
{
    if (t.dim() == 0)
        return Subspace<F>(0);
    return kernel(cocycle_system(t));
}

template <class F>
Subspace<F> compute_B2(const Tensor<F>& t)
{
    int n = t.dim();
    Matrix<F> m(0, n * n);
    for (int k = 0; k < n; ++k) {
        Vec<F> v(n * n, F(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                v[i * n + j] = t(i, j, k);
        m.append_row(v);
    }
    if (m.rows() == 0)
        return Subspace<F>(n * n);
    return Subspace<F>::span(m);
}

template <class F>
struct CohomologySpaces {
    Subspace<F> z2, b2;
    std::vector<Cocycle<F>> h2_reps;
    int h2_dim() const { return int(h2_reps.size()); }
};

// transversal: Z^2 basis vectors, in echelon order, that enlarge the running span of B^2
template <class F>
CohomologySpaces<F> compute_H2(const Tensor<F>& t)
{
    CohomologySpaces<F> h{compute_Z2(t), compute_B2(t), {}};
    Subspace<F> running = h.b2;
    for (int k = 0; k < h.z2.dim(); ++k) {
        auto v = h.z2.vector(k);
        if (running.contains(v))
            continue;
        h.h2_reps.push_back(v);
        Matrix<F> m(0, running.ambient());
        m.append_row(v);
        running = sum(running, Subspace<F>::span(m));
    }
    return h;
}

template <class F>
Subspace<F> span_with(const Subspace<F>& base, const std::vector<Cocycle<F>>& extra)
{
    if (extra.empty())
        return base;
    Matrix<F> m(0, base.ambient());
    for (const auto& v : extra)
        m.append_row(v);
    return sum(base, Subspace<F>::span(m));
}

template <class F>
bool classes_independent(const Subspace<F>& b2, const std::vector<Cocycle<F>>& list)
{
    return span_with(b2, list).dim() == b2.dim() + int(list.size());
}

// coordinates of theta in the basis reps, modulo b2; nullopt when theta is outside span(reps) + b2
template <class F>
std::optional<Vec<F>> class_coordinates(const std::vector<Cocycle<F>>& reps, const Subspace<F>& b2,
                                        const Cocycle<F>& theta)
{
    int s = int(reps.size());
    int cols = s + b2.dim();
    int len = int(theta.size());
    Matrix<F> m(len, cols);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < len; ++c)
            m(c, r) = reps[r][c];
    for (int r = 0; r < b2.dim(); ++r)
        for (int c = 0; c < len; ++c)
            m(c, s + r) = b2.basis()(r, c);
    auto x = solve(m, theta);
    if (!x)
        return std::nullopt;
    x->resize(s);
    return x;
}

template <class F>
Subspace<F> cocycle_annihilator(const Cocycle<F>& theta, int n)
{
    Matrix<F> m(2 * n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            m(j, i) = theta[i * n + j];
            m(n + j, i) = theta[j * n + i];
        }
    return kernel(m);
}

template <class F>
bool check_Ts(const Tensor<F>& t, const std::vector<Cocycle<F>>& cocycles)
{
    if (cocycles.empty())
        return false;
    int n = t.dim();
    Subspace<F> common = annihilator(t);
    for (const auto& c : cocycles)
        common = intersect(common, cocycle_annihilator(c, n));
    if (!common.is_zero())
        return false;
    return classes_independent(compute_B2(t), cocycles);
}

template <class F>
Tensor<F> central_extension(const Tensor<F>& t, const std::vector<Cocycle<F>>& cocycles)
{
    int n = t.dim(), s = int(cocycles.size());
    for (const auto& c : cocycles)
        if (!is_cocycle(t, c))
            throw std::invalid_argument("central extension by a non-cocycle");
    Tensor<F> out(n + s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                out(i, j, k) = t(i, j, k);
            for (int r = 0; r < s; ++r)
                out(i, j, n + r) = cocycles[r][i * n + j];
        }
    return out;
}

// phi(e_j) = sum_i phi(i,j) e_i
template <class F>
bool is_automorphism(const Tensor<F>& t, const Matrix<F>& phi)
{
    int n = t.dim();
    Matrix<F> cols = phi.transpose();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec<F> lhs(n, F(0));
            for (int k = 0; k < n; ++k)
                if (!is_zero(t(a, b, k)))
                    for (int i = 0; i < n; ++i)
                        if (!is_zero(phi(i, k)))
                            lhs[i] += t(a, b, k) * phi(i, k);
            Vec<F> rhs = multiply(t, cols.row(a), cols.row(b));
            for (int i = 0; i < n; ++i)
                if (!is_zero(lhs[i] - rhs[i]))
                    return false;
        }
    return true;
}

// (phi theta)(x, y) = theta(phi x, phi y), as the matrix phi^T theta phi
template <class F>
Cocycle<F> aut_action_unchecked(const Matrix<F>& phi, const Cocycle<F>& theta)
{
    int n = phi.rows();
    Matrix<F> th(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            th(i, j) = theta[i * n + j];
    Matrix<F> r = phi.transpose() * th * phi;
    Cocycle<F> out(n * n, F(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[i * n + j] = r(i, j);
    return out;
}

template <class F>
Cocycle<F> aut_action(const Tensor<F>& t, const Matrix<F>& phi, const Cocycle<F>& theta)
{
    if (!is_automorphism(t, phi))
        throw std::invalid_argument("aut_action: not an automorphism");
    return aut_action_unchecked(phi, theta);
}

// linear combination of the symbols Dij (one-based) parsed into an n*n cocycle
Cocycle<RatFun> parse_cocycle(const Expr& e, int n);
Cocycle<RatFun> parse_cocycle(const std::string& text, int n, const std::vector<std::string>& params);
// linear form in named symbols, e.g. n1..n9 or a1..a4
std::vector<RatFun> linear_coefficients(const Expr& e, const std::vector<std::string>& names);

Cocycle<Cyclo12> eval_cocycle(const Cocycle<RatFun>& c, const ParamValues& values);

struct AutomorphismShape {
    std::string label;
    std::vector<std::vector<Expr>> matrix;
    std::vector<Expr> formulas;
};

struct AlphaFormulaSet {
    std::string family;
    std::vector<Expr> nablas;
    std::vector<std::string> alphas;
    std::vector<AutomorphismShape> shapes;
};

struct AlphaCheck {
    std::string shape;
    int index = 0;
    bool pass = false;
    std::string residual;
};

struct AlphaReport {
    bool pass = true;
    std::vector<std::string> errors;
    std::vector<AlphaCheck> checks;
};

AlphaReport verify_alpha_formulas(const AlgebraSC& base, const AlphaFormulaSet& set);

struct ReductionCase {
    std::string id;
    std::string shape;
    std::map<std::string, Expr> params;
    std::map<std::string, Expr> alpha_values;
    std::map<std::string, Expr> phi_values;
    // linear forms in n1..ns, may involve alpha symbols
    std::vector<Expr> theta_in;
    std::vector<Expr> expected;
};

struct ReductionReport {
    bool pass = false;
    std::string detail;
};

ReductionReport verify_reduction(const AlgebraSC& base, const AlphaFormulaSet& set, const ReductionCase& rc);

struct TsProbeReport {
    bool certificate = false;
    int trials = 0;
    int counterexamples = 0;
    std::string detail;
};

// T_s emptiness: every cocycle keeps a nonzero common annihilator with A
TsProbeReport probe_Ts_empty(const AlgebraSC& base, int trials, std::uint64_t seed);

}
