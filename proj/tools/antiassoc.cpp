#include "antiassoc/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace antiassoc;

namespace {

std::string products(const AlgebraSC& a)
{
    std::ostringstream os;
    int n = a.dim();
    bool any = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string rhs;
            for (int k = 0; k < n; ++k) {
                const auto& c = a.constants()(i, j, k);
                if (c.is_zero())
                    continue;
                std::string s = c.to_string();
                std::string term = s == "1" ? "" : s == "-1" ? "-" : "(" + s + ")*";
                term += "e" + std::to_string(k + 1);
                if (!rhs.empty() && term[0] != '-')
                    rhs += " + ";
                else if (!rhs.empty())
                    rhs += " ";
                rhs += term;
            }
            if (rhs.empty())
                continue;
            os << "  e" << i + 1 << " e" << j + 1 << " = " << rhs << "\n";
            any = true;
        }
    if (!any)
        os << "  (zero product)\n";
    return os.str();
}

template <class F>
std::string cocycle_text(const Cocycle<F>& th, int n)
{
    std::string out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& c = th[i * n + j];
            if (is_zero(c))
                continue;
            std::ostringstream os;
            os << c;
            std::string s = os.str();
            std::string d = "D" + std::to_string(i + 1) + std::to_string(j + 1);
            std::string term = s == "1" ? d : s == "-1" ? "-" + d : "(" + s + ")*" + d;
            if (!out.empty() && term[0] != '-')
                out += " + ";
            else if (!out.empty())
                out += " ";
            out += term;
        }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const RatFun& r)
{
    return os << r.to_string();
}

int show(const Corpus& c, const std::string& id, std::uint64_t seed)
{
    const auto& a = c.at(id);
    std::cout << a.id << "  " << a.name << "  dim " << a.dim << "  " << a.kind;
    if (!a.params.empty()) {
        std::cout << "  params";
        for (const auto& p : a.params)
            std::cout << " " << p;
    }
    std::cout << "\n" << products(a.algebra);
    auto fp = fingerprint(a.algebra, claim_seed(seed, "fp:" + id));
    std::cout << "fingerprint " << fp.value().to_string();
    if (a.algebra.is_parametric())
        std::cout << (fp.generic ? "  (stable over samples)" : "  (varies over samples)");
    std::cout << "\n";
    return 0;
}

int h2(const Corpus& c, const std::string& id)
{
    const auto& a = c.at(id);
    auto h = compute_H2(a.algebra.constants());
    std::cout << "H2(" << id << "): dim Z2 = " << h.z2.dim() << ", dim B2 = " << h.b2.dim() << ", dim H2 = " << h.h2_dim()
              << "\n";
    for (const auto& r : h.h2_reps)
        std::cout << "  [" << cocycle_text(r, a.dim) << "]\n";
    for (const auto& t : c.h2_tables)
        if (t.algebra == id) {
            std::cout << "listed:";
            for (const auto& g : t.generators)
                std::cout << "  [" << print_expr(g) << "]";
            std::cout << "\n";
        }
    return 0;
}

int extend(const Corpus& c, const std::string& id, const std::vector<std::string>& exprs)
{
    const auto& a = c.at(id);
    std::vector<Cocycle<RatFun>> cocycles;
    for (const auto& e : exprs) {
        auto th = parse_cocycle(e, a.dim, a.params);
        if (!is_cocycle(a.algebra.constants(), th)) {
            std::cerr << "not a cocycle: " << e << "\n";
            return 1;
        }
        cocycles.push_back(std::move(th));
    }
    bool ts = check_Ts(a.algebra.constants(), cocycles);
    AlgebraSC ext(id + "+ext", central_extension(a.algebra.constants(), cocycles), a.params);
    std::cout << (ts ? "non-split" : "has an annihilator component") << " extension of dimension " << ext.dim()
              << "\n"
              << products(ext);
    for (const auto& b : c.algebras)
        if (b.dim == ext.dim() && b.params == ext.params() && b.algebra.constants() == ext.constants())
            std::cout << "matches " << b.id << " verbatim\n";
    if (!ext.is_parametric()) {
        auto fp = fingerprint(ext.at());
        std::cout << "fingerprint " << fp.to_string() << "\n";
        for (const auto& b : c.algebras)
            if (b.dim == ext.dim() && !b.algebra.is_parametric() && fingerprint(b.algebra.at()) == fp)
                std::cout << "same invariants as " << b.id << "\n";
    }
    return 0;
}

int degen(const Corpus& c, const std::string& id, const RunConfig& cfg)
{
    for (const auto& d : c.degenerations) {
        if (d.claim.id != id)
            continue;
        LadderConfig ladder;
        ladder.precision = cfg.precision;
        ladder.tolerance = cfg.tolerance;
        auto v = check_degeneration(d.claim, c.at(d.claim.source).algebra, c.at(d.claim.target).algebra, ladder,
                                    claim_seed(cfg.seed, id));
        std::cout << id << ": " << to_string(v.status) << " (" << v.mode << ")\n";
        for (const auto& n : v.notes)
            std::cout << "  " << n << "\n";
        for (const auto& p : v.trace)
            std::cout << "  t = " << p.t << "  residual " << p.residual << "\n";
        if (v.precision_bound)
            std::cout << "  failure is precision-bound\n";
        auto dc = der_monotonicity(d.claim, c.at(d.claim.source).algebra, c.at(d.claim.target).algebra,
                                   claim_seed(cfg.seed, "der:" + id));
        std::cout << "  Der check: " << (dc.pass ? "pass" : "fail") << ", " << dc.detail << "\n";
        return v.status == Verdict::Status::Failed || v.status == Verdict::Status::Inapplicable ? 1 : 0;
    }
    std::cerr << "unknown degeneration claim '" << id << "'\n";
    return 2;
}

int dims(const Corpus& c, std::uint64_t seed)
{
    for (const auto& a : c.algebras) {
        if (a.algebra.is_parametric()) {
            auto cd = family_closure_dim(a.algebra, claim_seed(seed, "dims:" + a.id));
            std::cout << std::left << std::setw(8) << a.id << " closure " << cd.value << "\n";
        } else
            std::cout << std::left << std::setw(8) << a.id << " orbit   " << orbit_dim(a.algebra.at()) << "\n";
    }
    return 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of antiassociative algebra classifications"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.corpus_path = ANTIASSOC_DEFAULT_CORPUS;
    app.add_option("--corpus", cfg.corpus_path, "Corpus JSON file")->envname("ANTIASSOC_CORPUS");
    app.add_option("--precision", cfg.precision, "Binary precision of the numeric ladder")
        ->envname("ANTIASSOC_PRECISION")
        ->check(CLI::Range(64, 1 << 20));
    app.add_option("--tol", cfg.tolerance, "Numeric residual tolerance")->envname("ANTIASSOC_TOL");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->envname("ANTIASSOC_JOBS")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Report format")
        ->envname("ANTIASSOC_FORMAT")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Random seed")->envname("ANTIASSOC_SEED");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites, "Suite to run (repeatable)")->envname("ANTIASSOC_SUITE");
    std::string id;
    auto* show_cmd = app.add_subcommand("show", "Print an algebra and its invariants");
    show_cmd->add_option("id", id)->required();
    auto* h2_cmd = app.add_subcommand("h2", "Compute the second cohomology of an algebra");
    h2_cmd->add_option("id", id)->required();
    auto* ext_cmd = app.add_subcommand("extend", "Build a central extension");
    std::vector<std::string> cocycles;
    ext_cmd->add_option("id", id)->required();
    ext_cmd->add_option("--cocycle", cocycles, "Cocycle in Dij notation (repeatable)")->required();
    auto* degen_cmd = app.add_subcommand("degen", "Check one degeneration claim");
    degen_cmd->add_option("claim", id)->required();
    auto* dims_cmd = app.add_subcommand("dims", "Orbit and closure dimensions of every algebra");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!suites.empty())
        cfg.suites = suites;
    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    }
    if (verify->parsed()) {
        auto rep = run(cfg);
        std::cout << (cfg.format == "json" ? render_json(rep) : render_text(rep));
        if (rep.exit_code == 2)
            std::cerr << rep.error << "\n";
        return rep.exit_code;
    }
    Corpus corpus;
    try {
        corpus = load_corpus(cfg.corpus_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    try {
        if (show_cmd->parsed())
            return show(corpus, id, cfg.seed);
        if (h2_cmd->parsed())
            return h2(corpus, id);
        if (ext_cmd->parsed())
            return extend(corpus, id, cocycles);
        if (degen_cmd->parsed())
            return degen(corpus, id, cfg);
        if (dims_cmd->parsed())
            return dims(corpus, cfg.seed);
    } catch (const CorpusError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
