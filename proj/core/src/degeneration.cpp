#include "antiassoc/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace antiassoc {

namespace {

const std::string s_sym = "_s";

std::string entry_name(int i, int j, int k)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

Poly det_poly(const std::vector<std::vector<Poly>>& m)
{
    int n = int(m.size());
    if (n == 0)
        return Poly(1);
    std::vector<Poly> dp(std::size_t(1) << n);
    dp[0] = Poly(1);
    for (unsigned mask = 1; mask < dp.size(); ++mask) {
        int r = __builtin_popcount(mask) - 1;
        if (r >= n)
            continue;
        Poly acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j)))
                continue;
            const Poly& sub = dp[mask & ~(1u << j)];
            if (!m[r][j].is_zero() && !sub.is_zero()) {
                Poly term = m[r][j] * sub;
                if ((r + pos) % 2)
                    acc -= term;
                else
                    acc += term;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp.back();
}

Poly lcm_poly(const Poly& a, const Poly& b)
{
    if (a.is_constant())
        return b;
    if (b.is_constant() || a == b)
        return a;
    if (auto g = univariate_gcd(a, b))
        return *(a * b).divide_exact(*g);
    if (a.divide_exact(b))
        return a;
    if (b.divide_exact(a))
        return b;
    return a * b;
}

std::vector<std::string> free_symbols(const DegenerationClaim& claim, const AlgebraSC& source,
                                      const AlgebraSC& target)
{
    std::set<std::string> syms;
    for (const auto& row : claim.basis)
        for (const auto& e : row)
            for (const auto& s : e.symbols())
                syms.insert(s);
    for (const auto& [p, e] : claim.source_index)
        for (const auto& s : e.symbols())
            syms.insert(s);
    for (const auto& [p, e] : claim.target_params)
        for (const auto& s : e.symbols())
            syms.insert(s);
    for (const auto& p : source.params())
        if (!claim.source_index.count(p))
            syms.insert(p);
    for (const auto& p : target.params())
        if (!claim.target_params.count(p))
            syms.insert(p);
    syms.erase("t");
    syms.erase("i");
    syms.erase("w");
    for (const auto& [a, e] : claim.aux)
        syms.erase(a);
    for (const auto& a : claim.sampled)
        syms.erase(a);
    return {syms.begin(), syms.end()};
}

Rational sample_value(std::mt19937_64& rng)
{
    Rational q;
    do
        q = random_rational(rng);
    while (q == 0 || q == 1 || q == -1 || q == 2 || q == -2 || q == Rational(1, 2) || q == Rational(-1, 2));
    return q;
}

Tensor<RatFun> substitute_tensor(const Tensor<RatFun>& t, const std::map<std::string, RatFun>& values)
{
    if (values.empty())
        return t;
    int n = t.dim();
    Tensor<RatFun> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!t(i, j, k).is_zero())
                    out(i, j, k) = t(i, j, k).substitute(values);
    return out;
}

}

Tensor<RatFun> relabel(const Tensor<RatFun>& t, const std::vector<int>& perm)
{
    if (perm.empty())
        return t;
    int n = t.dim();
    if (int(perm.size()) != n)
        throw std::invalid_argument("relabelling has the wrong length");
    Tensor<RatFun> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out(i, j, k) = t(perm[i] - 1, perm[j] - 1, perm[k] - 1);
    return out;
}

std::string to_string(Verdict::Status s)
{
    switch (s) {
    case Verdict::Status::VerifiedExact:
        return "verified-exact";
    case Verdict::Status::VerifiedNumeric:
        return "verified-numeric";
    case Verdict::Status::Failed:
        return "failed";
    case Verdict::Status::Inapplicable:
        return "inapplicable";
    }
    return "?";
}

ExactOutcome check_exact(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                         std::uint64_t seed)
{
    ExactOutcome out;
    if (claim.numeric_only) {
        out.detail = "numeric only";
        return out;
    }
    int n = source.dim();
    unsigned long N = 1;
    for (const auto& row : claim.basis)
        for (const auto& e : row)
            N = std::lcm(N, e.root_index());
    for (const auto& [p, e] : claim.source_index)
        N = std::lcm(N, e.root_index());
    out.substitution = N;
    std::mt19937_64 rng(seed);
    int samples = claim.sampled.empty() ? 1 : 3;
    std::ostringstream detail;
    detail << "t = s^" << N;
    try {
        out.pass = true;
        for (int sample = 0; sample < samples; ++sample) {
            std::map<std::string, RatFun> env;
            std::map<std::string, Cyclo12> cenv;
            env["t"] = RatFun(Poly::symbol(s_sym, int(N)));
            for (const auto& a : claim.sampled) {
                Rational q = sample_value(rng);
                cenv[a] = Cyclo12(q);
                env[a] = RatFun(Cyclo12(q));
                detail << "; " << a << " = " << q;
            }
            for (const auto& [a, e] : claim.aux) {
                cenv[a] = eval_exact(e, cenv);
                env[a] = RatFun(cenv[a]);
            }
            Tensor<RatFun> src = relabel(source.constants(), claim.source_relabel);
            std::map<std::string, RatFun> idx;
            for (const auto& [p, e] : claim.source_index)
                idx[p] = to_ratfun(e, env);
            src = substitute_tensor(src, idx);
            std::map<std::string, RatFun> tp;
            for (const auto& [p, e] : claim.target_params)
                tp[p] = to_ratfun(e, env);
            Tensor<RatFun> tgt = substitute_tensor(target.constants(), tp);

            std::vector<std::vector<RatFun>> b(n, std::vector<RatFun>(n));
            Poly den(1);
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < n; ++a) {
                    b[i][a] = to_ratfun(claim.basis[i][a], env);
                    den = lcm_poly(den, b[i][a].den());
                }
            std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n));
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < n; ++a) {
                    if (b[i][a].is_zero())
                        continue;
                    auto q = den.divide_exact(b[i][a].den());
                    if (!q)
                        throw NotExact("denominator does not divide the common denominator");
                    p[i][a] = b[i][a].num() * *q;
                }
            Poly det = det_poly(p);
            if (det.is_zero()) {
                out.applicable = true;
                out.pass = false;
                out.detail = "basis is singular for all t";
                return out;
            }
            // adj(P^T)(k,m) = (-1)^(k+m) minor of P without row k and column m
            std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n));
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    std::vector<std::vector<Poly>> sub;
                    for (int r = 0; r < n; ++r) {
                        if (r == k)
                            continue;
                        std::vector<Poly> row;
                        for (int c = 0; c < n; ++c)
                            if (c != m)
                                row.push_back(p[r][c]);
                        sub.push_back(std::move(row));
                    }
                    adj[k][m] = (k + m) % 2 ? -det_poly(sub) : det_poly(sub);
                }
            Poly scale = den * det;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::vector<RatFun> v(n);
                    for (int a = 0; a < n; ++a) {
                        if (p[i][a].is_zero())
                            continue;
                        for (int bb = 0; bb < n; ++bb) {
                            if (p[j][bb].is_zero())
                                continue;
                            Poly pp = p[i][a] * p[j][bb];
                            for (int m = 0; m < n; ++m)
                                if (!src(a, bb, m).is_zero())
                                    v[m] += RatFun(pp) * src(a, bb, m);
                        }
                    }
                    for (int k = 0; k < n; ++k) {
                        RatFun x;
                        for (int m = 0; m < n; ++m)
                            if (!adj[k][m].is_zero() && !v[m].is_zero())
                                x += RatFun(adj[k][m]) * v[m];
                        const RatFun& want = tgt(i, j, k);
                        if (x.is_zero()) {
                            if (!want.is_zero()) {
                                out.pass = false;
                                out.offending.push_back({i, j, k});
                            }
                            continue;
                        }
                        Poly num = x.num();
                        Poly dd = x.den() * scale;
                        int vn = num.min_degree(s_sym), vd = dd.min_degree(s_sym);
                        if (vn < vd) {
                            out.pass = false;
                            out.offending.push_back({i, j, k});
                            detail << "; " << entry_name(i, j, k) << " diverges";
                            continue;
                        }
                        RatFun limit = vn > vd ? RatFun() : RatFun(num.coeff(s_sym, vd), dd.coeff(s_sym, vd));
                        if (limit != want) {
                            out.pass = false;
                            out.offending.push_back({i, j, k});
                            detail << "; " << entry_name(i, j, k) << " tends to " << limit.to_string()
                                   << ", expected " << want.to_string();
                        }
                    }
                }
        }
        out.applicable = true;
    } catch (const NotExact& ex) {
        out.applicable = false;
        out.pass = false;
        out.detail = std::string("no exact form: ") + ex.what();
        return out;
    }
    out.detail = detail.str();
    return out;
}

namespace {

BigFloat max_residual(const Tensor<BigComplex>& a, const Tensor<BigComplex>& b, mpfr_prec_t prec,
                      std::vector<std::array<int, 3>>* worst)
{
    int n = a.dim();
    BigFloat best(prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                BigFloat r = (a(i, j, k) - b(i, j, k)).abs();
                if (best < r) {
                    best = r;
                    if (worst)
                        *worst = {{i, j, k}};
                }
            }
    return best;
}

struct RungResult {
    bool ok = false;
    BigFloat residual;
    bool cancellation = false;
    bool condition = false;
    std::vector<std::array<int, 3>> worst;
    std::string error;
};

}

NumericOutcome check_numeric(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                             const LadderConfig& cfg, std::uint64_t seed)
{
    NumericOutcome out;
    mpfr_prec_t prec = cfg.precision;
    int n = source.dim();
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::map<std::string, BigComplex> base_env;
    std::map<std::string, Cyclo12> cenv;
    std::ostringstream notes;
    for (const auto& a : claim.sampled) {
        Rational q = sample_value(rng);
        cenv[a] = Cyclo12(q);
        base_env.emplace(a, BigComplex(q, prec));
        notes << a << " = " << q << "; ";
    }
    for (const auto& [a, e] : claim.aux) {
        cenv[a] = eval_exact(e, cenv);
        base_env.emplace(a, to_complex(cenv[a], prec));
    }
    for (const auto& s : free_symbols(claim, source, target)) {
        Rational q = sample_value(rng);
        base_env.emplace(s, BigComplex(q, prec));
        notes << s << " = " << q << "; ";
    }
    Tensor<RatFun> src = relabel(source.constants(), claim.source_relabel);
    const Tensor<RatFun>& tgt = target.constants();
    BigFloat tol(cfg.tolerance, prec);
    BigFloat floor = BigFloat::pow2(-long(prec) + 24, prec);

    auto rung = [&](const BigComplex& t) {
        RungResult r;
        r.residual = BigFloat(prec);
        auto env = base_env;
        env.insert_or_assign("t", t);
        try {
            std::map<std::string, BigComplex> penv = env;
            for (const auto& [p, e] : claim.source_index) {
                auto v = eval_expr(e, env, prec);
                r.cancellation = r.cancellation || v.cancellation;
                penv.insert_or_assign(p, v.value);
            }
            std::map<std::string, BigComplex> tenv = env;
            for (const auto& [p, e] : claim.target_params) {
                auto v = eval_expr(e, env, prec);
                r.cancellation = r.cancellation || v.cancellation;
                tenv.insert_or_assign(p, v.value);
            }
            Tensor<BigComplex> sc(n, BigComplex(prec)), tc(n, BigComplex(prec));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        if (!src(i, j, k).is_zero())
                            sc(i, j, k) = src(i, j, k).eval(penv, prec);
                        if (!tgt(i, j, k).is_zero())
                            tc(i, j, k) = tgt(i, j, k).eval(tenv, prec);
                    }
            Matrix<BigComplex> b(n, n, BigComplex(prec));
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < n; ++a) {
                    if (claim.basis[i][a].is_zero_literal())
                        continue;
                    auto v = eval_expr(claim.basis[i][a], env, prec);
                    r.cancellation = r.cancellation || v.cancellation;
                    b(i, a) = v.value;
                }
            Matrix<BigComplex> bt = b.transpose();
            Tensor<BigComplex> moved(n, BigComplex(prec));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Vec<BigComplex> v(n, BigComplex(prec));
                    for (int a = 0; a < n; ++a) {
                        if (b(i, a).is_zero())
                            continue;
                        for (int bb = 0; bb < n; ++bb) {
                            if (b(j, bb).is_zero())
                                continue;
                            BigComplex pp = b(i, a) * b(j, bb);
                            for (int m = 0; m < n; ++m)
                                if (!sc(a, bb, m).is_zero())
                                    v[m] += pp * sc(a, bb, m);
                        }
                    }
                    auto sol = solve_numeric(bt, v, prec);
                    r.condition = r.condition || sol.condition_warning;
                    if (!sol.x) {
                        r.error = "singular basis";
                        return r;
                    }
                    for (int k = 0; k < n; ++k)
                        moved(i, j, k) = (*sol.x)[k];
                }
            r.residual = max_residual(moved, tc, prec, &r.worst);
            r.ok = true;
        } catch (const std::domain_error& ex) {
            r.error = ex.what();
        }
        return r;
    };

    struct Ray {
        const char* name;
        double angle;
    };
    const Ray rays[] = {{"positive real axis", 0.0}, {"ray exp(i*pi/4)", 0.25}, {"ray exp(-i*pi/4)", -0.25}};
    for (const auto& ray : rays) {
        BigFloat theta = BigFloat::pi(prec) * BigFloat(ray.angle, prec);
        BigComplex dir = BigComplex::polar(BigFloat(1L, prec), theta);
        std::vector<ResidualPoint> trace;
        std::vector<BigFloat> res;
        bool ok = true, cancel = false, cond = false;
        std::string err;
        std::vector<std::array<int, 3>> worst;
        for (int m = 0; m < cfg.max_rungs; ++m) {
            BigFloat tm = BigFloat(cfg.t0, prec) * BigFloat::pow2(-2 * m, prec);
            RungResult r = rung(dir * BigComplex(tm, BigFloat(prec)));
            cancel = cancel || r.cancellation;
            cond = cond || r.condition;
            if (!r.ok) {
                ok = false;
                err = r.error + " at rung " + std::to_string(m);
                break;
            }
            std::string tdesc = tm.to_string(4);
            if (ray.angle != 0.0)
                tdesc += "*" + std::string(ray.angle > 0 ? "exp(i*pi/4)" : "exp(-i*pi/4)");
            trace.push_back({tdesc, r.residual.to_string(6), r.residual.to_double()});
            res.push_back(r.residual);
            worst = r.worst;
            bool decreasing = res.size() < 2 || res.back() < res[res.size() - 2] || res.back() <= floor;
            if (m + 1 >= cfg.rungs && (res.back() < tol || !decreasing))
                break;
        }
        if (ok) {
            for (std::size_t m = std::max(1, cfg.monotone_from); m < res.size(); ++m)
                if (!(res[m] < res[m - 1]) && !(res[m] <= floor && res[m - 1] <= floor)) {
                    ok = false;
                    err = "residual does not decrease at rung " + std::to_string(m);
                    break;
                }
            if (ok && !(res.back() < tol)) {
                ok = false;
                err = "final residual " + res.back().to_string(6) + " above tolerance";
            }
        }
        out.trace = std::move(trace);
        out.cancellation = cancel;
        out.condition_warning = cond;
        out.ray = ray.name;
        if (ok) {
            out.pass = true;
            out.detail = notes.str() + "ladder of " + std::to_string(out.trace.size()) + " rungs";
            return out;
        }
        out.offending = worst;
        out.detail = notes.str() + err;
    }
    return out;
}

Verdict check_degeneration(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                           const LadderConfig& cfg, std::uint64_t seed)
{
    Verdict v;
    if (source.dim() != target.dim() || int(claim.basis.size()) != source.dim()) {
        v.status = Verdict::Status::Inapplicable;
        v.notes.push_back("dimension mismatch");
        return v;
    }
    ExactOutcome ex = check_exact(claim, source, target, seed);
    NumericOutcome nu = check_numeric(claim, source, target, cfg, seed);
    v.trace = nu.trace;
    if (ex.applicable) {
        v.mode = "exact, " + ex.detail;
        if (ex.pass) {
            v.status = Verdict::Status::VerifiedExact;
            if (!nu.pass)
                v.notes.push_back("numeric ladder does not confirm: " + nu.detail);
            else
                v.notes.push_back("numeric ladder agrees along the " + nu.ray);
        } else {
            v.status = Verdict::Status::Failed;
            v.offending = ex.offending;
            v.notes.push_back(ex.detail);
        }
        return v;
    }
    v.notes.push_back(ex.detail);
    v.mode = "numeric, " + nu.ray;
    if (nu.pass) {
        v.status = Verdict::Status::VerifiedNumeric;
        v.notes.push_back(nu.detail);
    } else {
        v.status = Verdict::Status::Failed;
        v.offending = nu.offending;
        v.notes.push_back(nu.detail);
        BigFloat eps = BigFloat::pow2(-long(cfg.precision), cfg.precision) * BigFloat(16L, cfg.precision);
        v.precision_bound = nu.cancellation || nu.condition_warning || BigFloat(cfg.tolerance, cfg.precision) < eps;
        if (v.precision_bound)
            v.notes.push_back("precision-bound");
    }
    return v;
}

int orbit_dim(const ExactTensor& t)
{
    return t.dim() * t.dim() - derivations(t).dim();
}

ClosureDim family_closure_dim(const AlgebraSC& family, std::uint64_t seed, int samples)
{
    ClosureDim out;
    int n = family.dim();
    std::mt19937_64 rng(seed);
    std::vector<Tensor<RatFun>> partials;
    for (const auto& p : family.params()) {
        Tensor<RatFun> d(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (!family.constants()(i, j, k).is_zero())
                        d(i, j, k) = family.constants()(i, j, k).derivative(p);
        partials.push_back(std::move(d));
    }
    for (int s = 0; s < samples; ++s) {
        auto pv = random_params(family.params(), rng);
        ExactTensor t = family.at(pv);
        Matrix<Cyclo12> m = derivation_system(t).transpose();
        for (const auto& d : partials) {
            Vec<Cyclo12> row(std::size_t(n) * n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (!d(i, j, k).is_zero())
                            row[(i * n + j) * n + k] = d(i, j, k).eval(pv);
            m.append_row(row);
        }
        int r = rank(m);
        out.samples.push_back(r);
        if (r != out.samples.front())
            out.consistent = false;
        out.value = std::max(out.value, r);
    }
    return out;
}

namespace {

// basis evaluates and is invertible at the sample point
bool basis_regular(const DegenerationClaim& claim, const std::map<std::string, Cyclo12>& env)
{
    const mpfr_prec_t prec = 128;
    int n = int(claim.basis.size());
    std::map<std::string, BigComplex> cenv;
    for (const auto& [k, v] : env)
        cenv.emplace(k, to_complex(v, prec));
    try {
        Matrix<BigComplex> b(n, n, BigComplex(prec));
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a)
                if (!claim.basis[i][a].is_zero_literal())
                    b(i, a) = eval_expr(claim.basis[i][a], cenv, prec).value;
        Vec<BigComplex> e(n, BigComplex(prec));
        e[0] = BigComplex(Rational(1), prec);
        auto sol = solve_numeric(b, e, prec);
        return sol.x && !sol.condition_warning;
    } catch (const std::domain_error&) {
        return false;
    }
}

}

DerCheck der_monotonicity(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                          std::uint64_t seed)
{
    DerCheck out;
    out.proper = claim.source != claim.target;
    bool indexed = !claim.source_index.empty();
    auto formal = free_symbols(claim, source, target);
    out.family = indexed || !claim.sampled.empty() || !formal.empty() || source.is_parametric()
        || target.is_parametric();
    auto src_at = [&](const std::map<std::string, Cyclo12>& env) {
        ParamValues pv;
        for (const auto& p : source.params())
            pv[p] = claim.source_index.count(p) ? eval_exact(claim.source_index.at(p), env) : env.at(p);
        Tensor<RatFun> t = relabel(source.constants(), claim.source_relabel);
        return AlgebraSC(source.name(), t, source.params()).at(pv);
    };
    auto tgt_at = [&](const std::map<std::string, Cyclo12>& env) {
        ParamValues pv;
        for (const auto& p : target.params())
            pv[p] = claim.target_params.count(p) ? eval_exact(claim.target_params.at(p), env) : env.at(p);
        return target.at(pv);
    };
    if (!out.family) {
        int a = derivations(src_at({})).dim(), b = derivations(tgt_at({})).dim();
        out.dims.push_back({a, b});
        out.pass = out.proper ? a < b : a == b;
        out.detail = "dim Der " + std::to_string(a) + " -> " + std::to_string(b);
        if (!out.proper)
            out.detail += " (not proper, skipped)";
        return out;
    }
    std::vector<Rational> candidates;
    for (int q = 1; q <= 9; ++q)
        for (int p = -9; p <= 9; ++p) {
            if (p == 0)
                continue;
            Rational r(p, q);
            r.canonicalize();
            if (std::find(candidates.begin(), candidates.end(), r) == candidates.end())
                candidates.push_back(r);
        }
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::ostringstream os;
    out.pass = true;
    int found = 0;
    for (const auto& tv : candidates) {
        if (found == 3)
            break;
        std::map<std::string, Cyclo12> env;
        env["t"] = Cyclo12(tv);
        for (const auto& a : claim.sampled)
            env[a] = Cyclo12(sample_value(rng));
        for (const auto& s : formal)
            env[s] = Cyclo12(sample_value(rng));
        try {
            for (const auto& [a, e] : claim.aux)
                env[a] = eval_exact(e, env);
            if (!basis_regular(claim, env))
                continue;
            int a = derivations(src_at(env)).dim(), b = derivations(tgt_at(env)).dim();
            out.dims.push_back({a, b});
            bool ok = indexed ? a <= b : a < b;
            out.pass = out.pass && ok;
            os << (found ? "; " : "") << "t = " << tv << ": " << a << " -> " << b;
            ++found;
        } catch (const NotExact&) {
        } catch (const std::domain_error&) {
        }
    }
    if (found < 3) {
        out.pass = false;
        os << "; only " << found << " exact sample points";
    }
    out.detail = os.str();
    return out;
}

}
