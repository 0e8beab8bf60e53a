#include "properties.hpp"

#include "antiassoc/degeneration.hpp"

#include <random>
#include <sstream>

namespace antiassoc::props {

namespace {

Rational nonzero_rational(std::mt19937_64& rng)
{
    Rational q;
    do
        q = random_rational(rng, 9);
    while (q == 0);
    return q;
}

Cyclo12 random_cyclo(std::mt19937_64& rng)
{
    return Cyclo12(random_rational(rng, 5), random_rational(rng, 5), random_rational(rng, 5), random_rational(rng, 5));
}

Cyclo12 nonzero_cyclo(std::mt19937_64& rng)
{
    Cyclo12 x;
    do
        x = random_cyclo(rng);
    while (x.is_zero());
    return x;
}

void fail(PropertyResult& r, const std::string& what)
{
    if (r.pass)
        r.detail = what;
    r.pass = false;
}

template <class F, class Gen, class GenNonzero>
void field_axioms(PropertyResult& r, int triples, Gen gen, GenNonzero nonzero)
{
    for (int k = 0; k < triples && r.pass; ++k, ++r.cases) {
        F a = gen(), b = gen(), c = gen(), d = nonzero();
        if (!((a + b) + c == a + (b + c)))
            fail(r, "additive associativity");
        if (!((a * b) * c == a * (b * c)))
            fail(r, "multiplicative associativity");
        if (!(a * (b + c) == a * b + a * c))
            fail(r, "distributivity");
        if (!(a + b == b + a) || !(a * b == b * a))
            fail(r, "commutativity");
        if (!(a - a == F(0)) || !(a + F(0) == a) || !(a * F(1) == a))
            fail(r, "identities");
        if (!(d * (F(1) / d) == F(1)) || !((a / d) * d == a))
            fail(r, "inverse");
    }
}

// random expression over t, u without fractional powers
Expr random_tree(std::mt19937_64& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, 9);
    int k = pick(rng);
    if (depth == 0 || k < 3) {
        if (k % 3 == 0)
            return Expr::symbol("t");
        if (k % 3 == 1)
            return Expr::symbol("u");
        return Expr::number(nonzero_rational(rng));
    }
    Expr a = random_tree(rng, depth - 1);
    switch (k) {
    case 3:
        return Expr::neg(a);
    case 4:
        return Expr::pow(a, Rational(std::uniform_int_distribution<int>(-2, 3)(rng)));
    case 5:
        return Expr::binary(Expr::Kind::Add, a, random_tree(rng, depth - 1));
    case 6:
        return Expr::binary(Expr::Kind::Sub, a, random_tree(rng, depth - 1));
    case 7:
    case 8:
        return Expr::binary(Expr::Kind::Mul, a, random_tree(rng, depth - 1));
    default:
        return Expr::binary(Expr::Kind::Div, a, random_tree(rng, depth - 1));
    }
}

void collect(const Corpus& c, std::vector<Expr>& out)
{
    for (const auto& a : c.algebras)
        for (const auto& p : a.products)
            out.push_back(p.value);
    for (const auto& h : c.h2_tables)
        out.insert(out.end(), h.generators.begin(), h.generators.end());
    for (const auto& e : c.extensions) {
        out.insert(out.end(), e.cocycles.begin(), e.cocycles.end());
        for (const auto& [k, v] : e.base_params)
            out.push_back(v);
    }
    for (const auto& s : c.alpha_sets) {
        out.insert(out.end(), s.set.nablas.begin(), s.set.nablas.end());
        for (const auto& sh : s.set.shapes) {
            for (const auto& row : sh.matrix)
                out.insert(out.end(), row.begin(), row.end());
            out.insert(out.end(), sh.formulas.begin(), sh.formulas.end());
        }
        for (const auto& r : s.reductions) {
            for (const auto* m : {&r.rc.params, &r.rc.alpha_values, &r.rc.phi_values})
                for (const auto& [k, v] : *m)
                    out.push_back(v);
            out.insert(out.end(), r.rc.theta_in.begin(), r.rc.theta_in.end());
            out.insert(out.end(), r.rc.expected.begin(), r.rc.expected.end());
        }
    }
    for (const auto& d : c.degenerations) {
        for (const auto& row : d.claim.basis)
            out.insert(out.end(), row.begin(), row.end());
        for (const auto* m : {&d.claim.source_index, &d.claim.target_params, &d.claim.aux})
            for (const auto& [k, v] : *m)
                out.push_back(v);
    }
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, int rows, int cols)
{
    std::uniform_int_distribution<int> zero(0, 3);
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (zero(rng) != 0)
                m(i, j) = random_rational(rng, 4);
    return m;
}

// low rank on purpose so kernels and intersections are nontrivial
Subspace<Rational> random_subspace(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> k(0, n);
    int r = k(rng);
    if (r == 0)
        return Subspace<Rational>(n);
    return Subspace<Rational>::span(random_matrix(rng, r, n));
}

ExactTensor instance(const AlgebraRecord& a, std::mt19937_64& rng)
{
    return a.algebra.at(random_params(a.params, rng));
}

Matrix<Cyclo12> der_matrix(const Vec<Cyclo12>& d, int n)
{
    Matrix<Cyclo12> m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m(a, b) = d[a * n + b];
    return m;
}

}

PropertyResult field_axioms_rational(std::uint64_t seed, int triples)
{
    PropertyResult r{"field axioms over Q"};
    std::mt19937_64 rng(seed);
    field_axioms<Rational>(r, triples, [&] { return random_rational(rng, 9); }, [&] { return nonzero_rational(rng); });
    return r;
}

PropertyResult field_axioms_cyclo12(std::uint64_t seed, int triples)
{
    PropertyResult r{"field axioms over Q(zeta12)"};
    std::mt19937_64 rng(seed);
    field_axioms<Cyclo12>(r, triples, [&] { return random_cyclo(rng); }, [&] { return nonzero_cyclo(rng); });
    return r;
}

PropertyResult cyclotomic_identities()
{
    PropertyResult r{"i and w relations"};
    Cyclo12 i = Cyclo12::imag_unit(), w = Cyclo12::omega(), z = Cyclo12::zeta();
    r.cases = 6;
    if (!(i * i == Cyclo12(-1)))
        fail(r, "i^2 != -1");
    if (!(w.pow(3) == Cyclo12(1)) || w == Cyclo12(1))
        fail(r, "w is not a primitive cube root");
    if (!(Cyclo12(1) + w + w * w == Cyclo12()))
        fail(r, "1 + w + w^2 != 0");
    if (!(z.pow(12) == Cyclo12(1)) || z.pow(6) == Cyclo12(1) || z.pow(4) == Cyclo12(1))
        fail(r, "zeta is not a primitive 12th root");
    if (!(z.pow(3) == i) || !(z.pow(4) == w))
        fail(r, "zeta powers");
    return r;
}

PropertyResult eval_consistency(std::uint64_t seed, int trees)
{
    PropertyResult r{"numeric evaluation agrees with exact evaluation"};
    std::mt19937_64 rng(seed);
    const mpfr_prec_t prec = 256;
    BigFloat rel = BigFloat::pow2(-200, prec);
    for (int k = 0; k < trees && r.pass; ++k) {
        Expr e = random_tree(rng, 8);
        Rational tv = nonzero_rational(rng), uv = nonzero_rational(rng);
        Cyclo12 exact;
        NumericValue num;
        try {
            exact = eval_exact(e, {{"t", Cyclo12(tv)}, {"u", Cyclo12(uv)}});
            num = eval_expr(e, {{"t", BigComplex(tv, prec)}, {"u", BigComplex(uv, prec)}}, prec);
        } catch (const std::domain_error&) {
            continue;
        }
        if (num.cancellation)
            continue;
        BigComplex want = to_complex(exact, prec);
        BigFloat scale = want.abs();
        if (scale < BigFloat(1L, prec))
            scale = BigFloat(1L, prec);
        if (!((num.value - want).abs() <= rel * scale))
            fail(r, "mismatch on " + print_expr(e));
        RatFun f = to_ratfun(e);
        if (!(f.eval({{"t", Cyclo12(tv)}, {"u", Cyclo12(uv)}}) == exact))
            fail(r, "rational function mismatch on " + print_expr(e));
        ++r.cases;
    }
    return r;
}

PropertyResult parse_print_roundtrip(const Corpus& c)
{
    PropertyResult r{"parse(print(e)) = e on corpus expressions"};
    std::vector<Expr> all;
    collect(c, all);
    for (const auto& e : all) {
        ++r.cases;
        std::string text = print_expr(e);
        if (!(parse_expr(text) == e))
            fail(r, "round trip changed " + text);
    }
    return r;
}

PropertyResult kernel_reconstruction(std::uint64_t seed, int matrices)
{
    PropertyResult r{"kernel and rank reconstruction"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 12);
    for (int k = 0; k < matrices && r.pass; ++k, ++r.cases) {
        int rows = size(rng), cols = size(rng);
        Matrix<Rational> m = random_matrix(rng, rows, cols);
        if (k % 3 == 0 && rows > 1)
            for (int j = 0; j < cols; ++j)
                m(rows - 1, j) = m(0, j) * 3;
        auto ker = kernel(m);
        if (rank(m) + ker.dim() != cols)
            fail(r, "rank + nullity != cols");
        for (int v = 0; v < ker.dim(); ++v)
            for (const auto& x : m.apply(ker.vector(v)))
                if (!is_zero(x))
                    fail(r, "m * kernel vector != 0");
    }
    return r;
}

PropertyResult subspace_dimensions(std::uint64_t seed, int pairs)
{
    PropertyResult r{"intersection and sum dimensions"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 8);
    for (int k = 0; k < pairs && r.pass; ++k, ++r.cases) {
        int n = size(rng);
        auto a = random_subspace(rng, n), b = random_subspace(rng, n);
        auto i = intersect(a, b), s = sum(a, b);
        if (!a.contains(i) || !b.contains(i))
            fail(r, "intersection not contained in both");
        if (!s.contains(a) || !s.contains(b))
            fail(r, "sum does not contain both");
        if (a.dim() + b.dim() != s.dim() + i.dim())
            fail(r, "dim a + dim b != dim(a+b) + dim(a^b)");
    }
    return r;
}

PropertyResult subspace_canonical(std::uint64_t seed, int samples)
{
    PropertyResult r{"canonical subspace bases"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 8);
    for (int k = 0; k < samples && r.pass; ++k, ++r.cases) {
        int n = size(rng), m = size(rng);
        Matrix<Rational> a = random_matrix(rng, m, n);
        // mix the rows by a random invertible transformation
        Matrix<Rational> g;
        do
            g = random_matrix(rng, m, m);
        while (rank(g) != m);
        if (!(Subspace<Rational>::span(a) == Subspace<Rational>::span(g * a)))
            fail(r, "same row space, different basis");
    }
    return r;
}

PropertyResult basis_change_invariance(const Corpus& c, std::uint64_t seed, int per_algebra)
{
    PropertyResult r{"basis change keeps identities, fingerprint and orbit dim"};
    std::mt19937_64 rng(seed);
    for (const auto& a : c.algebras) {
        ExactTensor t = instance(a, rng);
        Fingerprint f = fingerprint(t);
        int od = orbit_dim(t);
        for (int k = 0; k < per_algebra; ++k, ++r.cases) {
            ExactTensor u = basis_change(t, random_invertible(a.dim, rng));
            if (!antiassociator_residuals(u).empty())
                fail(r, a.id + ": antiassociativity lost");
            if (!(fingerprint(u) == f))
                fail(r, a.id + ": fingerprint changed");
            if (orbit_dim(u) != od)
                fail(r, a.id + ": orbit dim changed");
        }
    }
    return r;
}

PropertyResult derivations_lie(const Corpus& c, std::uint64_t seed)
{
    PropertyResult r{"Der is closed under commutators"};
    std::mt19937_64 rng(seed);
    for (const auto& a : c.algebras) {
        ExactTensor t = instance(a, rng);
        int n = a.dim;
        auto der = derivations(t);
        std::vector<Matrix<Cyclo12>> ds;
        for (int k = 0; k < der.dim(); ++k)
            ds.push_back(der_matrix(der.vector(k), n));
        for (std::size_t p = 0; p < ds.size(); ++p)
            for (std::size_t q = p + 1; q < ds.size(); ++q, ++r.cases) {
                Matrix<Cyclo12> x = ds[p] * ds[q], y = ds[q] * ds[p];
                Vec<Cyclo12> br(n * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        br[i * n + j] = x(i, j) - y(i, j);
                if (!der.contains(br))
                    fail(r, a.id + ": commutator leaves Der");
            }
    }
    return r;
}

PropertyResult annihilator_ideal(const Corpus& c, std::uint64_t seed)
{
    PropertyResult r{"Ann is an ideal killed by A"};
    std::mt19937_64 rng(seed);
    for (const auto& a : c.algebras) {
        ExactTensor t = instance(a, rng);
        int n = a.dim;
        auto ann = annihilator(t);
        for (int k = 0; k < ann.dim(); ++k) {
            ++r.cases;
            for (int j = 0; j < n; ++j) {
                auto e = basis_vector<Cyclo12>(n, j);
                for (const auto& v : {multiply(t, ann.vector(k), e), multiply(t, e, ann.vector(k))})
                    for (const auto& x : v)
                        if (!is_zero(x))
                            fail(r, a.id + ": A Ann + Ann A != 0");
            }
        }
        // one-sided annihilators contain the two-sided one
        if (!annihilator(t, 1).contains(ann) || !annihilator(t, 2).contains(ann))
            fail(r, a.id + ": one-sided annihilators too small");
    }
    return r;
}

PropertyResult aut_action_preserves(const Corpus& c, std::uint64_t seed, int per_family)
{
    PropertyResult r{"automorphisms preserve Z2 and B2"};
    std::mt19937_64 rng(seed);
    for (const auto& s : c.alpha_sets) {
        const auto& rec = c.at(s.set.family);
        ParamValues pv = random_params(rec.params, rng);
        ExactTensor t = rec.algebra.at(pv);
        int n = rec.dim;
        auto z2 = compute_Z2(t);
        auto b2 = compute_B2(t);
        for (const auto& shape : s.set.shapes) {
            int done = 0;
            for (int attempt = 0; done < per_family && attempt < 10 * per_family; ++attempt) {
                std::map<std::string, Cyclo12> env(pv.begin(), pv.end());
                for (const auto& row : shape.matrix)
                    for (const auto& e : row)
                        for (const auto& sym : e.symbols())
                            if (!env.count(sym))
                                env[sym] = Cyclo12(random_rational(rng, 3));
                Matrix<Cyclo12> phi(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        phi(i, j) = eval_exact(shape.matrix[i][j], env);
                if (rank(phi) != n)
                    continue;
                ++done;
                ++r.cases;
                if (!is_automorphism(t, phi)) {
                    fail(r, s.set.family + "/" + shape.label + ": sampled matrix is not an automorphism");
                    continue;
                }
                for (int k = 0; k < z2.dim(); ++k)
                    if (!z2.contains(aut_action(t, phi, z2.vector(k))))
                        fail(r, s.set.family + ": Z2 not preserved");
                for (int k = 0; k < b2.dim(); ++k)
                    if (!b2.contains(aut_action(t, phi, b2.vector(k))))
                        fail(r, s.set.family + ": B2 not preserved");
            }
            if (done < per_family)
                fail(r, s.set.family + "/" + shape.label + ": too few invertible samples");
        }
    }
    return r;
}

PropertyResult moved_roundtrip(const Corpus& c, std::uint64_t seed, int samples)
{
    PropertyResult r{"moved constants round trip through the inverse basis"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, c.algebras.size() - 1);
    for (int k = 0; k < samples && r.pass; ++k, ++r.cases) {
        const auto& a = c.algebras[pick(rng)];
        ExactTensor t = instance(a, rng);
        Matrix<Cyclo12> b = random_invertible(a.dim, rng);
        auto back = moved_constants(moved_constants(t, b), *inverse(b));
        if (!(back == t))
            fail(r, a.id + ": round trip changed constants");
    }
    return r;
}

std::vector<PropertyResult> all_properties(const Corpus& c, std::uint64_t seed)
{
    return {field_axioms_rational(seed),
            field_axioms_cyclo12(seed + 1),
            cyclotomic_identities(),
            eval_consistency(seed + 2),
            parse_print_roundtrip(c),
            kernel_reconstruction(seed + 3),
            subspace_dimensions(seed + 4),
            subspace_canonical(seed + 5),
            basis_change_invariance(c, seed + 6),
            derivations_lie(c, seed + 7),
            annihilator_ideal(c, seed + 8),
            aut_action_preserves(c, seed + 9),
            moved_roundtrip(c, seed + 10)};
}

}
