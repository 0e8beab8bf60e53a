#include "antiassoc/degeneration.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace antiassoc;

namespace {

const DegenerationClaim& claim(const std::string& id)
{
    for (const auto& d : fixtures::corpus().degenerations)
        if (d.claim.id == id)
            return d.claim;
    throw std::out_of_range(id);
}

Verdict check(const DegenerationClaim& c, const LadderConfig& cfg = {})
{
    const auto& corpus = fixtures::corpus();
    return check_degeneration(c, corpus.at(c.source).algebra, corpus.at(c.target).algebra, cfg, 7);
}

DegenerationClaim identity_claim(const std::string& id, int n)
{
    DegenerationClaim c;
    c.id = id + ">" + id;
    c.source = c.target = id;
    c.basis.assign(n, std::vector<Expr>(n, parse_expr("0")));
    for (int i = 0; i < n; ++i)
        c.basis[i][i] = parse_expr("1");
    return c;
}

}

TEST_SUITE("degeneration")
{
    TEST_CASE("moved constants")
    {
        auto t = fixtures::tensor("A5.10");
        CHECK(moved_constants(t, Matrix<Cyclo12>::identity(5)) == t);
        // E_i = s e_i scales every constant by s
        Matrix<Cyclo12> s(5, 5);
        for (int k = 0; k < 5; ++k)
            s(k, k) = Cyclo12(3);
        auto m = moved_constants(t, s);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    CHECK(m(i, j, k) == t(i, j, k) * Cyclo12(3));
        CHECK_THROWS_AS(moved_constants(t, Matrix<Cyclo12>(5, 5)), std::domain_error);
    }

    TEST_CASE("symbolic moved constants of a short-form row")
    {
        // basis (e1, e2, e4, t e3, e5) on the split 5-dim algebra
        const auto& c = claim("A5.2>A5.1");
        Matrix<RatFun> b(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                b(i, j) = to_ratfun(c.basis[i][j]);
        auto m = moved_constants(fixtures::corpus().at("A5.2").algebra.constants(), b);
        auto target = fixtures::corpus().at("A5.1").algebra.constants();
        int differing = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    if (!(m(i, j, k) == target(i, j, k))) {
                        ++differing;
                        CHECK(m(i, j, k).substitute({{"t", RatFun(0)}}) == target(i, j, k));
                    }
        CHECK(differing == 1);
    }

    TEST_CASE("four-dim rows verify exactly")
    {
        for (const char* id : {"A4.3>A4.2", "A4.2>A4.1"}) {
            auto v = check(claim(id));
            CHECK_MESSAGE(v.status == Verdict::Status::VerifiedExact, id);
        }
    }

    TEST_CASE("printed basis without the relabelling fails")
    {
        DegenerationClaim c = claim("A4.3>A4.2");
        c.source_relabel.clear();
        auto v = check(c);
        CHECK(v.status == Verdict::Status::Failed);
    }

    TEST_CASE("parametrized index verifies exactly")
    {
        auto v = check(claim("A5.14>A5.15"));
        CHECK(v.status == Verdict::Status::VerifiedExact);
    }

    TEST_CASE("fractional powers clear by substitution")
    {
        auto ex = check_exact(claim("A5.19>A5.17"), fixtures::corpus().at("A5.19").algebra,
                              fixtures::corpus().at("A5.17").algebra, 1);
        CHECK(ex.applicable);
        CHECK(ex.pass);
        CHECK(ex.substitution == 12);
    }

    TEST_CASE("square roots of polynomials go numeric")
    {
        const auto& c = claim("A5.26>A5.28");
        auto ex = check_exact(c, fixtures::corpus().at("A5.26").algebra, fixtures::corpus().at("A5.28").algebra, 1);
        CHECK_FALSE(ex.applicable);
        auto v = check(c);
        CHECK(v.status == Verdict::Status::VerifiedNumeric);
        REQUIRE(v.trace.size() >= 13);
        CHECK(v.trace.back().value < 1e-8);
        for (std::size_t k = 4; k < v.trace.size(); ++k)
            CHECK(v.trace[k].value < v.trace[k - 1].value);
    }

    TEST_CASE("identity basis")
    {
        auto v = check(identity_claim("A5.10", 5));
        CHECK(v.status == Verdict::Status::VerifiedExact);
    }

    TEST_CASE("wrong target fails with offending entries")
    {
        DegenerationClaim c = claim("A4.2>A4.1");
        c.target = "A4.3";
        auto v = check(c);
        CHECK(v.status == Verdict::Status::Failed);
        CHECK_FALSE(v.offending.empty());
    }

    TEST_CASE("tolerance below the working precision")
    {
        LadderConfig cfg;
        cfg.precision = 64;
        cfg.tolerance = 1e-30;
        auto v = check(claim("A5.26>A5.28"), cfg);
        CHECK(v.status == Verdict::Status::Failed);
        CHECK(v.precision_bound);
    }

    TEST_CASE("exact verdicts also pass the numeric ladder")
    {
        const auto& corpus = fixtures::corpus();
        for (const auto& d : corpus.degenerations) {
            const auto& c = d.claim;
            if (c.numeric_only)
                continue;
            auto src = corpus.at(c.source).algebra;
            auto tgt = corpus.at(c.target).algebra;
            auto ex = check_exact(c, src, tgt, 5);
            if (!ex.applicable || !ex.pass)
                continue;
            auto num = check_numeric(c, src, tgt, LadderConfig{}, 5);
            CHECK_MESSAGE(num.pass, (c.id + ": " + num.detail));
        }
    }

    TEST_CASE("orbit dimensions")
    {
        CHECK(orbit_dim(fixtures::tensor("A5.10")) == 20);
        CHECK(orbit_dim(fixtures::tensor("A4.3")) == 12);
        CHECK(orbit_dim(fixtures::zero_algebra(4).at()) == 0);
        std::mt19937_64 rng(3);
        auto t = fixtures::tensor("A5.21");
        CHECK(orbit_dim(basis_change(t, random_invertible(5, rng))) == orbit_dim(t));
    }

    TEST_CASE("family closure dimensions")
    {
        const auto& c = fixtures::corpus();
        CHECK(family_closure_dim(c.at("V3+2").algebra, 1).value == 24);
        CHECK(family_closure_dim(c.at("V4+1").algebra, 1).value == 20);
        CHECK(family_closure_dim(c.at("A5.14").algebra, 1).value == 20);
        CHECK(family_closure_dim(c.at("A5.26").algebra, 1).value == 20);
    }

    TEST_CASE("derivation dimension grows along degenerations")
    {
        const auto& corpus = fixtures::corpus();
        for (const char* id : {"A5.2>A5.1", "A5.19>A5.18"}) {
            const auto& c = claim(id);
            auto r = der_monotonicity(c, corpus.at(c.source).algebra, corpus.at(c.target).algebra, 1);
            CHECK(r.pass);
            CHECK(r.proper);
            CHECK_FALSE(r.family);
            REQUIRE(r.dims.size() == 1);
            CHECK(r.dims[0].first < r.dims[0].second);
        }
        auto same = identity_claim("A5.10", 5);
        auto r = der_monotonicity(same, corpus.at("A5.10").algebra, corpus.at("A5.10").algebra, 1);
        CHECK_FALSE(r.proper);
        CHECK(r.pass);
    }

    TEST_CASE("family rows sample three indices")
    {
        const auto& corpus = fixtures::corpus();
        const auto& c = claim("A5.26>A5.28");
        auto r = der_monotonicity(c, corpus.at(c.source).algebra, corpus.at(c.target).algebra, 1);
        CHECK(r.family);
        CHECK(r.dims.size() == 3);
        CHECK(r.pass);
    }
}
