#include "antiassoc/cohomology.hpp"

#include <sstream>

namespace antiassoc {

std::vector<RatFun> linear_coefficients(const Expr& e, const std::vector<std::string>& names)
{
    Poly p = to_poly(e);
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < names.size(); ++k)
        index[names[k]] = int(k);
    std::vector<Poly> out(names.size());
    for (const auto& [m, c] : p.terms()) {
        int hit = -1;
        Monomial rest;
        for (const auto& [s, d] : m) {
            auto it = index.find(s);
            if (it == index.end()) {
                rest.emplace_back(s, d);
                continue;
            }
            if (hit >= 0 || d != 1)
                throw std::invalid_argument("not linear in the basis symbols: " + print_expr(e));
            hit = it->second;
        }
        if (hit < 0)
            throw std::invalid_argument("term without a basis symbol in: " + print_expr(e));
        out[hit] += Poly::term(rest, c);
    }
    return std::vector<RatFun>(out.begin(), out.end());
}

static std::vector<std::string> delta_names(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back("D" + std::to_string(i) + std::to_string(j));
    return names;
}

Cocycle<RatFun> parse_cocycle(const Expr& e, int n)
{
    return linear_coefficients(e, delta_names(n));
}

Cocycle<RatFun> parse_cocycle(const std::string& text, int n, const std::vector<std::string>& params)
{
    std::set<std::string> allowed(params.begin(), params.end());
    for (const auto& d : delta_names(n))
        allowed.insert(d);
    return parse_cocycle(parse_expr(text, allowed), n);
}

Cocycle<Cyclo12> eval_cocycle(const Cocycle<RatFun>& c, const ParamValues& values)
{
    Cocycle<Cyclo12> out;
    out.reserve(c.size());
    for (const auto& x : c)
        out.push_back(x.is_zero() ? Cyclo12() : x.eval(values));
    return out;
}

namespace {

// left inverse data for coordinates in (nablas, B^2)
struct Projector {
    int s = 0, width = 0, rank = 0;
    Matrix<RatFun> t;
    std::string error;
};

Projector make_projector(const std::vector<Cocycle<RatFun>>& nablas, const Subspace<RatFun>& b2)
{
    Projector p;
    p.s = int(nablas.size());
    int len = b2.ambient();
    p.width = p.s + b2.dim();
    Matrix<RatFun> aug(len, p.width + len);
    for (int c = 0; c < len; ++c) {
        for (int r = 0; r < p.s; ++r)
            aug(c, r) = nablas[r][c];
        for (int r = 0; r < b2.dim(); ++r)
            aug(c, p.s + r) = b2.basis()(r, c);
        aug(c, p.width + c) = RatFun(1);
    }
    auto rr = rref(aug);
    int rk = 0;
    while (rk < int(rr.pivots.size()) && rr.pivots[rk] < p.width)
        ++rk;
    p.rank = rk;
    if (rk != p.width)
        p.error = "listed classes are dependent modulo B2";
    p.t = Matrix<RatFun>(len, len);
    for (int i = 0; i < len; ++i)
        for (int c = 0; c < len; ++c)
            p.t(i, c) = rr.m(i, p.width + c);
    return p;
}

RatFun apply_row(const Matrix<RatFun>& t, int i, const Cocycle<RatFun>& v)
{
    RatFun r;
    for (int c = 0; c < t.cols(); ++c)
        if (!t(i, c).is_zero() && !v[c].is_zero())
            r += t(i, c) * v[c];
    return r;
}

}

AlphaReport verify_alpha_formulas(const AlgebraSC& base, const AlphaFormulaSet& set)
{
    AlphaReport rep;
    int n = base.dim();
    const auto& t = base.constants();
    std::vector<Cocycle<RatFun>> nablas;
    for (const auto& e : set.nablas)
        nablas.push_back(parse_cocycle(e, n));
    if (set.alphas.size() != nablas.size()) {
        rep.pass = false;
        rep.errors.push_back("alpha count differs from nabla count");
        return rep;
    }
    for (std::size_t k = 0; k < nablas.size(); ++k)
        if (!is_cocycle(t, nablas[k])) {
            rep.pass = false;
            rep.errors.push_back("nabla " + std::to_string(k + 1) + " is not a cocycle");
        }
    Projector proj = make_projector(nablas, compute_B2(t));
    if (!proj.error.empty()) {
        rep.pass = false;
        rep.errors.push_back(proj.error);
        return rep;
    }
    Cocycle<RatFun> theta(n * n, RatFun(0));
    for (std::size_t k = 0; k < nablas.size(); ++k) {
        RatFun a(Poly::symbol(set.alphas[k]));
        for (int c = 0; c < n * n; ++c)
            if (!nablas[k][c].is_zero())
                theta[c] += a * nablas[k][c];
    }
    for (const auto& shape : set.shapes) {
        Matrix<RatFun> phi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                phi(i, j) = to_ratfun(shape.matrix[i][j]);
        if (!is_automorphism(t, phi)) {
            rep.pass = false;
            rep.errors.push_back(shape.label + ": matrix is not an automorphism");
            continue;
        }
        Cocycle<RatFun> moved = aut_action_unchecked(phi, theta);
        for (int i = proj.width; i < n * n; ++i)
            if (!apply_row(proj.t, i, moved).is_zero()) {
                rep.pass = false;
                rep.errors.push_back(shape.label + ": image leaves span(nablas) + B2");
                break;
            }
        for (int k = 0; k < proj.s; ++k) {
            RatFun got = apply_row(proj.t, k, moved);
            AlphaCheck chk{shape.label, k + 1, false, {}};
            if (k < int(shape.formulas.size())) {
                RatFun want = to_ratfun(shape.formulas[k]);
                RatFun diff = got - want;
                chk.pass = diff.is_zero();
                if (!chk.pass)
                    chk.residual = diff.to_string();
            } else
                chk.residual = "missing formula";
            rep.pass = rep.pass && chk.pass;
            rep.checks.push_back(std::move(chk));
        }
    }
    return rep;
}

namespace {

std::vector<std::string> nabla_names(std::size_t s)
{
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= s; ++k)
        names.push_back("n" + std::to_string(k));
    return names;
}

Vec<Cyclo12> eval_linear(const Expr& e, const std::vector<std::string>& names,
                         const std::map<std::string, Cyclo12>& env)
{
    Vec<Cyclo12> out;
    for (const auto& c : linear_coefficients(e, names))
        out.push_back(c.is_zero() ? Cyclo12() : c.eval(env));
    return out;
}

}

ReductionReport verify_reduction(const AlgebraSC& base, const AlphaFormulaSet& set, const ReductionCase& rc)
{
    ReductionReport rep;
    int n = base.dim();
    std::map<std::string, Cyclo12> env;
    for (const auto& [k, e] : rc.params)
        env[k] = eval_exact(e, {});
    ParamValues params = env;
    for (const auto& [k, e] : rc.alpha_values)
        env[k] = eval_exact(e, env);
    const AutomorphismShape* shape = nullptr;
    for (const auto& s : set.shapes)
        if (s.label == rc.shape)
            shape = &s;
    if (!shape) {
        rep.detail = "unknown automorphism shape " + rc.shape;
        return rep;
    }
    std::set<std::string> vars;
    for (const auto& row : shape->matrix)
        for (const auto& e : row)
            for (const auto& s : e.symbols())
                if (!params.count(s))
                    vars.insert(s);
    std::map<std::string, Cyclo12> phienv = params;
    for (const auto& v : vars)
        phienv[v] = Cyclo12();
    try {
        for (const auto& [k, e] : rc.phi_values) {
            if (!vars.count(k)) {
                rep.detail = "substitution for unknown variable " + k;
                return rep;
            }
            phienv[k] = eval_exact(e, env);
        }
    } catch (const NotExact& ex) {
        rep.detail = std::string("radical not rational at the sample: ") + ex.what();
        return rep;
    } catch (const std::domain_error& ex) {
        rep.detail = ex.what();
        return rep;
    }
    Matrix<Cyclo12> phi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            phi(i, j) = eval_exact(shape->matrix[i][j], phienv);
    ExactTensor t = base.at(params);
    if (rank(phi) < n || !is_automorphism(t, phi)) {
        rep.detail = "substitution is not an automorphism at the sample";
        return rep;
    }
    std::vector<Cocycle<Cyclo12>> nablas;
    for (const auto& e : set.nablas)
        nablas.push_back(eval_cocycle(parse_cocycle(e, n), params));
    auto b2 = compute_B2(t);
    auto names = nabla_names(nablas.size());
    int s = int(nablas.size());
    Matrix<Cyclo12> got(0, s), want(0, s);
    for (const auto& e : rc.theta_in) {
        auto coeffs = eval_linear(e, names, env);
        Cocycle<Cyclo12> th(n * n, Cyclo12());
        for (int k = 0; k < s; ++k)
            for (int c = 0; c < n * n; ++c)
                th[c] += coeffs[k] * nablas[k][c];
        auto coords = class_coordinates(nablas, b2, aut_action_unchecked(phi, th));
        if (!coords) {
            rep.detail = "image is outside the listed classes";
            return rep;
        }
        got.append_row(*coords);
    }
    for (const auto& e : rc.expected)
        want.append_row(eval_linear(e, names, env));
    auto a = Subspace<Cyclo12>::span(got), b = Subspace<Cyclo12>::span(want);
    rep.pass = a == b && a.dim() == int(rc.expected.size());
    std::ostringstream os;
    os << "image coordinates:";
    for (int r = 0; r < got.rows(); ++r) {
        os << " (";
        for (int k = 0; k < s; ++k)
            os << (k ? ", " : "") << got(r, k);
        os << ")";
    }
    rep.detail = os.str();
    return rep;
}

namespace {

Tensor<Rational> rational_tensor(const ExactTensor& t)
{
    Tensor<Rational> r(t.dim());
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j)
            for (int k = 0; k < t.dim(); ++k) {
                if (!t(i, j, k).is_rational())
                    throw std::invalid_argument("probe needs rational constants");
                r(i, j, k) = t(i, j, k).rational_part();
            }
    return r;
}

}

TsProbeReport probe_Ts_empty(const AlgebraSC& base, int trials, std::uint64_t seed)
{
    TsProbeReport rep;
    int n = base.dim();
    const auto& tg = base.constants();
    auto z2g = compute_Z2(tg);
    auto common = annihilator(tg);
    for (int k = 0; k < z2g.dim(); ++k)
        common = intersect(common, cocycle_annihilator(z2g.vector(k), n));
    rep.certificate = common.dim() > 0;
    std::mt19937_64 rng(seed);
    int per_point = base.is_parametric() ? std::max(1, trials / 10) : trials;
    while (rep.trials < trials) {
        auto t = rational_tensor(base.at(random_params(base.params(), rng)));
        auto z2 = compute_Z2(t);
        auto ann = annihilator(t);
        int a = ann.dim();
        // images of the annihilator basis under each Z2 basis cocycle, on both sides
        std::vector<Matrix<Rational>> images;
        for (int k = 0; k < z2.dim(); ++k) {
            Matrix<Rational> img(2 * n, a);
            for (int l = 0; l < a; ++l) {
                Vec<Rational> v = ann.vector(l);
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i) {
                        if (is_zero(v[i]))
                            continue;
                        img(j, l) += v[i] * z2.basis()(k, i * n + j);
                        img(n + j, l) += v[i] * z2.basis()(k, j * n + i);
                    }
            }
            images.push_back(std::move(img));
        }
        for (int r = 0; r < per_point && rep.trials < trials; ++r, ++rep.trials) {
            if (a == 0) {
                ++rep.counterexamples;
                continue;
            }
            Matrix<Rational> m(2 * n, a);
            for (int k = 0; k < z2.dim(); ++k) {
                Rational c = random_rational(rng, 5);
                for (int i = 0; i < 2 * n; ++i)
                    for (int l = 0; l < a; ++l)
                        if (!is_zero(images[k](i, l)))
                            m(i, l) += c * images[k](i, l);
            }
            if (rank(m) == a)
                ++rep.counterexamples;
        }
    }
    std::ostringstream os;
    os << "common annihilator of Z2 inside Ann(A) has dim " << common.dim() << "; " << rep.counterexamples
       << " of " << rep.trials << " random cocycles give Ann(theta) ^ Ann(A) = 0";
    rep.detail = os.str();
    return rep;
}

}
