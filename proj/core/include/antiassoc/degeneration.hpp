#pragma once

#include "antiassoc/algebra.hpp"
#include "antiassoc/expr.hpp"

#include <array>

namespace antiassoc {

struct DegenerationClaim {
    std::string id;
    std::string location;
    std::string source, target;
    // source parameter -> expression in t and auxiliary symbols
    std::map<std::string, Expr> source_index;
    // target parameter -> expression; unlisted target parameters stay formal
    std::map<std::string, Expr> target_params;
    // auxiliary symbols with fixed exact values, e.g. h = w
    std::map<std::string, Expr> aux;
    // auxiliary symbols sampled at random rationals, e.g. L
    std::vector<std::string> sampled;
    // source basis relabelling, one-based: new e_i = old e_{perm[i]}
    std::vector<int> source_relabel;
    std::vector<std::vector<Expr>> basis;
    bool numeric_only = false;
};

// E_i E_j = sum_k c'(i,j,k) E_k with E_i = sum_a basis(i,a) e_a
template <class F>
Tensor<F> moved_constants(const Tensor<F>& t, const Matrix<F>& basis)
{
    int n = t.dim();
    auto inv = inverse(basis.transpose());
    if (!inv)
        throw std::domain_error("singular basis");
    Tensor<F> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<F> v = inv->apply(multiply(t, basis.row(i), basis.row(j)));
            for (int k = 0; k < n; ++k)
                out(i, j, k) = v[k];
        }
    return out;
}

Tensor<RatFun> relabel(const Tensor<RatFun>& t, const std::vector<int>& perm);

struct LadderConfig {
    mpfr_prec_t precision = default_precision;
    double tolerance = 1e-8;
    Rational t0 = Rational(1, 100);
    int rungs = 13;
    int max_rungs = 64;
    int monotone_from = 3;
};

struct ResidualPoint {
    std::string t;
    std::string residual;
    double value = 0;
};

struct Verdict {
    enum class Status { VerifiedExact, VerifiedNumeric, Failed, Inapplicable };
    Status status = Status::Failed;
    std::string mode;
    std::vector<ResidualPoint> trace;
    std::vector<std::string> notes;
    std::vector<std::array<int, 3>> offending;
    bool precision_bound = false;
};

std::string to_string(Verdict::Status s);

struct ExactOutcome {
    bool applicable = false;
    bool pass = false;
    unsigned long substitution = 1;
    std::string detail;
    std::vector<std::array<int, 3>> offending;
};

struct NumericOutcome {
    bool pass = false;
    std::string ray;
    std::vector<ResidualPoint> trace;
    bool cancellation = false;
    bool condition_warning = false;
    std::string detail;
    std::vector<std::array<int, 3>> offending;
};

ExactOutcome check_exact(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                         std::uint64_t seed);
NumericOutcome check_numeric(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                             const LadderConfig& cfg, std::uint64_t seed);
Verdict check_degeneration(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                           const LadderConfig& cfg, std::uint64_t seed);

int orbit_dim(const ExactTensor& t);

struct ClosureDim {
    int value = 0;
    std::vector<int> samples;
    bool consistent = true;
};

// rank of the tangent map of GL(n) x parameters at sampled parameter points, max over samples
ClosureDim family_closure_dim(const AlgebraSC& family, std::uint64_t seed, int samples = 3);

struct DerCheck {
    bool proper = true;
    bool family = false;
    bool pass = false;
    std::vector<std::pair<int, int>> dims;
    std::string detail;
};

DerCheck der_monotonicity(const DegenerationClaim& claim, const AlgebraSC& source, const AlgebraSC& target,
                          std::uint64_t seed);

}
