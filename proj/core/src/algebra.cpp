#include "antiassoc/algebra.hpp"
#include "antiassoc/cohomology.hpp"

#include <sstream>

namespace antiassoc {

ExactTensor AlgebraSC::at(const ParamValues& values) const
{
    int n = dim();
    ExactTensor t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const RatFun& c = c_(i, j, k);
                if (c.is_zero())
                    continue;
                t(i, j, k) = c.symbols().empty() ? c.num().constant_term() / c.den().constant_term()
                                                 : c.eval(values);
            }
    return t;
}

AlgebraSC AlgebraSC::substitute(const std::map<std::string, RatFun>& values, std::vector<std::string> params) const
{
    int n = dim();
    Tensor<RatFun> t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!c_(i, j, k).is_zero())
                    t(i, j, k) = c_(i, j, k).substitute(values);
    return AlgebraSC(name_, std::move(t), std::move(params));
}

IdentityReport check_antiassociative(const AlgebraSC& a)
{
    IdentityReport rep;
    for (auto& [ijk, r] : antiassociator_residuals(a.constants())) {
        Violation v{ijk[0], ijk[1], ijk[2], {}};
        for (const auto& x : r)
            v.residual.push_back(x.to_string());
        rep.violations.push_back(std::move(v));
    }
    rep.pass = rep.violations.empty();
    return rep;
}

NilpotencyReport check_nilpotency4(const AlgebraSC& a, std::uint64_t seed)
{
    NilpotencyReport rep;
    if (!a.is_parametric()) {
        rep.dims = power_chain(a.at());
        rep.pass = rep.dims.a4 == 0;
        return rep;
    }
    // generic dims over the parameter field, plus sampled members
    rep.dims = power_chain(a.constants());
    rep.pass = rep.dims.a4 == 0;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < 3; ++s) {
        auto pc = power_chain(a.at(random_params(a.params(), rng)));
        rep.pass = rep.pass && pc.a4 == 0;
        rep.samples.push_back(pc);
    }
    return rep;
}

std::string Fingerprint::to_string() const
{
    std::ostringstream os;
    os << "dim=" << dim << " ann=" << ann << " A2=" << a2 << " A3=" << a3 << " A4=" << a4 << " lann=" << left_ann
       << " rann=" << right_ann << " der=" << der << " Z2=" << z2 << " H2=" << h2 << " ann^A2=" << ann_a2;
    return os.str();
}

Fingerprint fingerprint(const ExactTensor& t)
{
    Fingerprint f;
    int n = t.dim();
    f.dim = n;
    auto ann = annihilator(t);
    f.ann = ann.dim();
    auto full = Subspace<Cyclo12>::full(n);
    auto a2 = product_space(t, full, full);
    auto pc = power_chain(t);
    f.a2 = pc.a2;
    f.a3 = pc.a3;
    f.a4 = pc.a4;
    f.left_ann = annihilator(t, 1).dim();
    f.right_ann = annihilator(t, 2).dim();
    f.der = derivations(t).dim();
    auto z2 = compute_Z2(t);
    f.z2 = z2.dim();
    f.h2 = z2.dim() - compute_B2(t).dim();
    f.ann_a2 = intersect(ann, a2).dim();
    return f;
}

FamilyFingerprint fingerprint(const AlgebraSC& a, std::uint64_t seed, int samples)
{
    FamilyFingerprint out;
    if (!a.is_parametric()) {
        out.samples.push_back({{}, fingerprint(a.at())});
        return out;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto p = random_params(a.params(), rng);
        out.samples.push_back({p, fingerprint(a.at(p))});
        if (!(out.samples.back().second == out.samples.front().second))
            out.generic = false;
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng, int bound)
{
    std::uniform_int_distribution<int> num(-bound * bound, bound * bound);
    std::uniform_int_distribution<int> den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

ParamValues random_params(const std::vector<std::string>& params, std::mt19937_64& rng)
{
    ParamValues v;
    for (const auto& p : params) {
        Rational q;
        // avoid the small special values where ranks typically drop
        do
            q = random_rational(rng);
        while (q == 0 || q == 1 || q == -1 || q == 2 || q == -2 || q == Rational(1, 2) || q == Rational(-1, 2));
        v[p] = Cyclo12(q);
    }
    return v;
}

Matrix<Cyclo12> random_invertible(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-2, 2);
    for (;;) {
        Matrix<Cyclo12> g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g(i, j) = d(rng);
        if (rank(g) == n)
            return g;
    }
}

AlgebraSC random_basis_change(const AlgebraSC& a, const Matrix<Cyclo12>& g)
{
    int n = a.dim();
    Matrix<RatFun> gr(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gr(i, j) = RatFun(g(i, j));
    return AlgebraSC(a.name(), basis_change(a.constants(), gr), a.params());
}

}
