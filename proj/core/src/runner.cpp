#include "antiassoc/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace antiassoc {

using Status = ClaimResult::Status;

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

int RunReport::count(Status s) const
{
    return int(std::count_if(results.begin(), results.end(), [&](const ClaimResult& r) { return r.status == s; }));
}

std::vector<const ClaimResult*> RunReport::select(const std::string& suite, const std::string& check) const
{
    std::vector<const ClaimResult*> out;
    for (const auto& r : results)
        if (r.suite == suite && (check.empty() || r.check == check))
            out.push_back(&r);
    return out;
}

std::vector<std::string> expand_suites(const std::vector<std::string>& suites)
{
    std::set<std::string> want;
    for (const auto& s : suites) {
        if (s == "all")
            want.insert(suite_names().begin(), suite_names().end());
        else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end())
            want.insert(s);
        else
            throw std::invalid_argument("unknown suite '" + s + "'");
    }
    std::vector<std::string> out;
    for (const auto& s : suite_names())
        if (want.count(s))
            out.push_back(s);
    return out;
}

void validate_config(const RunConfig& cfg)
{
    if (cfg.precision < 64)
        throw std::invalid_argument("precision must be at least 64 bits");
    if (!(cfg.tolerance > 0 && cfg.tolerance < 1))
        throw std::invalid_argument("tolerance must lie in (0, 1)");
    if (cfg.jobs < 1)
        throw std::invalid_argument("jobs must be positive");
    if (cfg.format != "text" && cfg.format != "json")
        throw std::invalid_argument("format must be text or json");
    if (expand_suites(cfg.suites).empty())
        throw std::invalid_argument("no suite selected");
}

std::uint64_t claim_seed(std::uint64_t seed, const std::string& id)
{
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h ^ (h >> 29);
}

namespace {

using Task = std::function<ClaimResult()>;

ClaimResult make(const std::string& suite, const std::string& check, const std::string& id, const std::string& loc)
{
    ClaimResult r;
    r.suite = suite;
    r.check = check;
    r.id = id;
    r.location = loc;
    return r;
}

Task guarded(ClaimResult proto, std::function<void(ClaimResult&)> body)
{
    return [proto = std::move(proto), body = std::move(body)]() {
        ClaimResult r = proto;
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = Status::Fail;
            r.detail = std::string("error: ") + e.what();
        }
        return r;
    };
}

Status pass_if(bool b)
{
    return b ? Status::Pass : Status::Fail;
}

std::map<std::string, RatFun> ratfun_env(const std::map<std::string, Expr>& m)
{
    std::map<std::string, RatFun> out;
    for (const auto& [k, e] : m)
        out.emplace(k, to_ratfun(e));
    return out;
}

void identity_tasks(const Corpus& c, std::vector<Task>& tasks)
{
    for (const auto& a : c.algebras)
        tasks.push_back(guarded(make("identities", "identity", a.id, a.provenance.location), [&a](ClaimResult& r) {
            auto id = check_antiassociative(a.algebra);
            auto nil = check_nilpotency4(a.algebra);
            std::ostringstream os;
            if (id.pass)
                os << "antiassociative";
            else
                os << id.violations.size() << " antiassociativity violations, first at e" << id.violations[0].i + 1
                   << ",e" << id.violations[0].j + 1 << ",e" << id.violations[0].k + 1;
            os << "; dims A2/A3/A4 = " << nil.dims.a2 << "/" << nil.dims.a3 << "/" << nil.dims.a4;
            if (!nil.samples.empty())
                os << " (" << nil.samples.size() << " sampled parameter points)";
            r.mode = a.algebra.is_parametric() ? "generic" : "exact";
            r.status = pass_if(id.pass && nil.pass);
            r.detail = os.str();
        }));
}

void cohomology_tasks(const Corpus& c, std::uint64_t seed, std::vector<Task>& tasks)
{
    for (const auto& h : c.h2_tables)
        tasks.push_back(guarded(make("cohomology", "h2", h.algebra, h.provenance.location), [&c, &h](ClaimResult& r) {
            const auto& base = c.at(h.algebra);
            const auto& t = base.algebra.constants();
            auto spaces = compute_H2(t);
            std::vector<Cocycle<RatFun>> gens;
            std::string bad;
            for (std::size_t k = 0; k < h.generators.size(); ++k) {
                gens.push_back(parse_cocycle(h.generators[k], base.dim));
                if (!is_cocycle(t, gens.back()) && bad.empty())
                    bad = print_expr(h.generators[k]);
            }
            bool indep = bad.empty() && classes_independent(spaces.b2, gens);
            std::ostringstream os;
            os << "dim Z2 = " << spaces.z2.dim() << ", dim B2 = " << spaces.b2.dim() << ", dim H2 = " << spaces.h2_dim()
               << ", listed " << gens.size();
            if (!bad.empty())
                os << "; not a cocycle: " << bad;
            else if (!indep)
                os << "; listed classes are dependent modulo B2";
            r.mode = "exact";
            r.status = pass_if(bad.empty() && indep && spaces.h2_dim() == int(gens.size()));
            r.detail = os.str();
        }));
    for (const auto& ts : c.ts_empty)
        tasks.push_back(guarded(make("cohomology", "ts-empty", ts.algebra, ts.provenance.location),
                                [&c, &ts, seed](ClaimResult& r) {
                                    auto rep = probe_Ts_empty(c.at(ts.algebra).algebra, 10000,
                                                              claim_seed(seed, "ts:" + ts.algebra));
                                    r.mode = "exact";
                                    r.status = pass_if(rep.certificate && rep.counterexamples == 0);
                                    r.detail = rep.detail;
                                }));
}

void extension_tasks(const Corpus& c, std::uint64_t seed, std::vector<Task>& tasks)
{
    for (const auto& e : c.extensions)
        tasks.push_back(guarded(make("extensions", "extension", e.id, e.provenance.location), [&c, &e](ClaimResult& r) {
            const auto& base = c.at(e.base);
            const auto& target = c.at(e.expected);
            auto env = ratfun_env(e.base_params);
            std::vector<std::string> params;
            for (const auto& p : base.params)
                if (!env.count(p))
                    params.push_back(p);
            AlgebraSC a = env.empty() ? base.algebra : base.algebra.substitute(env, params);
            std::vector<Cocycle<RatFun>> cocycles;
            for (const auto& ex : e.cocycles) {
                auto th = parse_cocycle(ex, base.dim);
                if (!env.empty())
                    for (auto& x : th)
                        x = x.substitute(env);
                if (!is_cocycle(a.constants(), th)) {
                    r.status = Status::Fail;
                    r.detail = "not a cocycle: " + print_expr(ex);
                    return;
                }
                cocycles.push_back(std::move(th));
            }
            bool ts = check_Ts(a.constants(), cocycles);
            auto ext = central_extension(a.constants(), cocycles);
            std::vector<std::string> diffs;
            const auto& want = target.algebra.constants();
            int n = ext.dim();
            if (want.dim() != n)
                diffs.push_back("dimension");
            else
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            if (!(ext(i, j, k) == want(i, j, k)))
                                diffs.push_back("c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ","
                                                + std::to_string(k + 1) + ") = " + ext(i, j, k).to_string()
                                                + " expected " + want(i, j, k).to_string());
            std::ostringstream os;
            os << e.base << " + " << cocycles.size() << " cocycle" << (cocycles.size() > 1 ? "s" : "") << " -> "
               << e.expected;
            os << (ts ? "; no annihilator component" : "; has an annihilator component");
            if (!diffs.empty()) {
                os << "; " << diffs.size() << " constants differ, first " << diffs.front();
            } else
                os << "; constants match";
            r.mode = "exact";
            r.status = pass_if(ts && diffs.empty());
            r.detail = os.str();
        }));

    // pairwise distinctness of the classified algebras by invariants
    std::map<int, std::vector<const AlgebraRecord*>> by_dim;
    for (const auto& a : c.algebras)
        if (a.classified)
            by_dim[a.dim].push_back(&a);
    for (const auto& [dim, list] : by_dim)
        tasks.push_back(guarded(make("extensions", "distinct", "dim " + std::to_string(dim), "classification lists"),
                                [list, seed, dim](ClaimResult& r) {
                                    std::map<std::string, std::vector<std::string>> groups;
                                    for (const auto* a : list) {
                                        auto fp = fingerprint(a->algebra, claim_seed(seed, "fp:" + a->id), 3);
                                        groups[fp.value().to_string()].push_back(a->id);
                                    }
                                    std::ostringstream os;
                                    int clashes = 0;
                                    for (const auto& [fp, ids] : groups)
                                        if (ids.size() > 1) {
                                            os << (clashes++ ? "; " : "") << "{";
                                            for (std::size_t k = 0; k < ids.size(); ++k)
                                                os << (k ? ", " : "") << ids[k];
                                            os << "}";
                                        }
                                    r.mode = "invariants";
                                    if (clashes == 0) {
                                        r.status = Status::Pass;
                                        r.detail = std::to_string(list.size()) + " algebras, all fingerprints distinct";
                                    } else {
                                        r.status = Status::Inconclusive;
                                        r.detail = std::to_string(groups.size()) + " fingerprint classes for "
                                            + std::to_string(list.size()) + " algebras; shared: " + os.str();
                                    }
                                    (void)dim;
                                }));
}

void alpha_tasks(const Corpus& c, std::vector<Task>& tasks)
{
    for (const auto& a : c.alpha_sets) {
        const auto& base = c.at(a.set.family);
        for (const auto& shape : a.set.shapes)
            for (std::size_t k = 0; k < shape.formulas.size(); ++k) {
                std::string id = a.set.family + "/" + shape.label + "/" + a.set.alphas[k] + "*";
                tasks.push_back(guarded(make("alpha", "formula", id, a.provenance.location),
                                        [&a, &base, label = shape.label, k](ClaimResult& r) {
                                            AlphaFormulaSet one = a.set;
                                            one.shapes.clear();
                                            for (const auto& s : a.set.shapes)
                                                if (s.label == label)
                                                    one.shapes.push_back(s);
                                            auto rep = verify_alpha_formulas(base.algebra, one);
                                            r.mode = "exact";
                                            if (!rep.errors.empty()) {
                                                r.status = Status::Fail;
                                                r.detail = rep.errors.front();
                                                return;
                                            }
                                            for (const auto& ch : rep.checks)
                                                if (ch.index == int(k) + 1) {
                                                    r.status = pass_if(ch.pass);
                                                    r.detail = ch.pass ? "identity holds"
                                                                       : "residual " + ch.residual;
                                                    return;
                                                }
                                            r.status = Status::Fail;
                                            r.detail = "formula not checked";
                                        }));
            }
        for (const auto& red : a.reductions)
            tasks.push_back(guarded(make("alpha", "reduction", red.rc.id, red.provenance.location),
                                    [&a, &base, &red](ClaimResult& r) {
                                        auto rep = verify_reduction(base.algebra, a.set, red.rc);
                                        r.mode = "exact";
                                        r.status = pass_if(rep.pass);
                                        r.detail = rep.detail;
                                    }));
    }
}

void degeneration_tasks(const Corpus& c, const RunConfig& cfg, std::vector<Task>& tasks)
{
    LadderConfig ladder;
    ladder.precision = cfg.precision;
    ladder.tolerance = cfg.tolerance;
    for (const auto& d : c.degenerations) {
        tasks.push_back(guarded(make("degenerations", "degeneration", d.claim.id, d.provenance.location),
                                [&c, &d, ladder, seed = cfg.seed](ClaimResult& r) {
                                    auto v = check_degeneration(d.claim, c.at(d.claim.source).algebra,
                                                                c.at(d.claim.target).algebra, ladder,
                                                                claim_seed(seed, d.claim.id));
                                    r.mode = v.mode;
                                    r.status = pass_if(v.status == Verdict::Status::VerifiedExact
                                                       || v.status == Verdict::Status::VerifiedNumeric);
                                    r.trace = v.trace;
                                    r.precision_bound = v.precision_bound;
                                    std::ostringstream os;
                                    os << to_string(v.status);
                                    for (const auto& n : v.notes)
                                        os << "; " << n;
                                    if (!v.offending.empty()) {
                                        os << "; offending";
                                        for (std::size_t k = 0; k < v.offending.size() && k < 4; ++k)
                                            os << " c(" << v.offending[k][0] + 1 << "," << v.offending[k][1] + 1 << ","
                                               << v.offending[k][2] + 1 << ")";
                                    }
                                    if (v.precision_bound)
                                        os << "; precision-bound";
                                    r.detail = os.str();
                                }));
        tasks.push_back(guarded(make("degenerations", "der", d.claim.id, d.provenance.location),
                                [&c, &d, seed = cfg.seed](ClaimResult& r) {
                                    auto dc = der_monotonicity(d.claim, c.at(d.claim.source).algebra,
                                                               c.at(d.claim.target).algebra,
                                                               claim_seed(seed, "der:" + d.claim.id));
                                    r.mode = dc.family ? "sampled" : "exact";
                                    r.status = pass_if(dc.pass);
                                    r.detail = dc.detail;
                                }));
    }
}

int algebra_dim(const AlgebraRecord& a, std::uint64_t seed, std::string& how)
{
    if (a.algebra.is_parametric()) {
        auto cd = family_closure_dim(a.algebra, seed);
        how = "closure";
        if (!cd.consistent)
            how += " (samples disagree)";
        return cd.value;
    }
    how = "orbit";
    return orbit_dim(a.algebra.at());
}

void dimension_tasks(const Corpus& c, std::uint64_t seed, std::vector<Task>& tasks)
{
    for (const auto& o : c.orbit_dims)
        tasks.push_back(guarded(make("dimensions", o.kind, o.id, o.provenance.location), [&c, &o, seed](ClaimResult& r) {
            const auto& a = c.at(o.algebra);
            int got = 0;
            std::ostringstream os;
            if (o.kind == "closure") {
                auto cd = family_closure_dim(a.algebra, claim_seed(seed, o.id));
                got = cd.value;
                os << "closure dim " << got << " (samples";
                for (int s : cd.samples)
                    os << " " << s;
                os << ")";
            } else {
                got = orbit_dim(a.algebra.at());
                os << "orbit dim " << got << " = " << a.dim * a.dim << " - dim Der";
            }
            os << ", expected " << o.expected;
            r.mode = "exact";
            r.status = pass_if(got == o.expected);
            r.detail = os.str();
        }));
    for (const auto& comp : c.components)
        tasks.push_back(guarded(make("dimensions", "components", comp.id, comp.provenance.location),
                                [&c, &comp, seed](ClaimResult& r) {
                                    int best = 0;
                                    std::ostringstream os;
                                    for (const auto& id : comp.components) {
                                        std::string how;
                                        int d = algebra_dim(c.at(id), claim_seed(seed, comp.id + ":" + id), how);
                                        best = std::max(best, d);
                                        os << id << " " << how << " " << d << "; ";
                                    }
                                    int count = int(comp.components.size());
                                    os << "max " << best << " (expected " << comp.expected_dim << "), " << count
                                       << " components (expected " << comp.expected_count << ")";
                                    r.mode = "exact";
                                    r.status = pass_if(best == comp.expected_dim && count == comp.expected_count);
                                    r.detail = os.str();
                                }));
}

bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit((unsigned char)a[i2]))
                ++i2;
            while (j2 < b.size() && std::isdigit((unsigned char)b[j2]))
                ++j2;
            long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
            if (x != y)
                return x < y;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

int suite_index(const std::string& s)
{
    const auto& v = suite_names();
    return int(std::find(v.begin(), v.end(), s) - v.begin());
}

}

RunReport run(const Corpus& corpus, const RunConfig& cfg)
{
    validate_config(cfg);
    RunReport rep;
    rep.config = cfg;
    rep.config.suites = expand_suites(cfg.suites);
    std::vector<Task> tasks;
    for (const auto& s : rep.config.suites) {
        if (s == "identities")
            identity_tasks(corpus, tasks);
        else if (s == "cohomology")
            cohomology_tasks(corpus, cfg.seed, tasks);
        else if (s == "extensions")
            extension_tasks(corpus, cfg.seed, tasks);
        else if (s == "alpha")
            alpha_tasks(corpus, tasks);
        else if (s == "degenerations")
            degeneration_tasks(corpus, cfg, tasks);
        else if (s == "dimensions")
            dimension_tasks(corpus, cfg.seed, tasks);
    }
    rep.results.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();)
            rep.results[k] = tasks[k]();
    };
    int jobs = std::max(1, std::min<int>(cfg.jobs, int(tasks.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    std::stable_sort(rep.results.begin(), rep.results.end(), [](const ClaimResult& a, const ClaimResult& b) {
        int sa = suite_index(a.suite), sb = suite_index(b.suite);
        if (sa != sb)
            return sa < sb;
        if (a.check != b.check)
            return a.check < b.check;
        return natural_less(a.id, b.id);
    });
    rep.exit_code = rep.count(Status::Fail) > 0 ? 1 : 0;
    return rep;
}

RunReport run(const RunConfig& cfg)
{
    validate_config(cfg);
    Corpus corpus;
    try {
        corpus = load_corpus(cfg.corpus_path);
    } catch (const std::exception& e) {
        RunReport rep;
        rep.config = cfg;
        rep.exit_code = 2;
        rep.error = e.what();
        return rep;
    }
    return run(corpus, cfg);
}

std::string render_text(const RunReport& r)
{
    std::ostringstream os;
    if (!r.error.empty()) {
        os << "corpus error: " << r.error << "\n";
        return os.str();
    }
    std::string suite;
    for (const auto& c : r.results) {
        if (c.suite != suite) {
            suite = c.suite;
            os << "== " << suite << "\n";
        }
        std::string st = to_string(c.status);
        for (auto& ch : st)
            ch = char(std::toupper((unsigned char)ch));
        os << std::left << std::setw(13) << st << std::setw(13) << c.check << std::setw(22) << c.id << c.detail;
        if (!c.location.empty())
            os << "  [" << c.location << "]";
        os << "\n";
        if (c.status == Status::Fail)
            for (const auto& p : c.trace)
                os << "      t = " << p.t << "  residual " << p.residual << "\n";
    }
    os << "summary: " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, "
       << r.count(Status::Inconclusive) << " inconclusive\n";
    return os.str();
}

std::string render_json(const RunReport& r)
{
    using json = nlohmann::ordered_json;
    json doc;
    doc["report_version"] = report_format_version;
    doc["corpus_version"] = corpus_format_version;
    doc["config"] = {{"corpus", r.config.corpus_path},
                     {"suites", r.config.suites},
                     {"precision", r.config.precision},
                     {"tolerance", r.config.tolerance},
                     {"seed", r.config.seed}};
    if (!r.error.empty())
        doc["error"] = r.error;
    json results = json::array();
    for (const auto& c : r.results) {
        json j{{"suite", c.suite}, {"check", c.check}, {"id", c.id}, {"location", c.location},
               {"status", to_string(c.status)}, {"mode", c.mode}, {"detail", c.detail}};
        if (!c.trace.empty()) {
            json t = json::array();
            for (const auto& p : c.trace)
                t.push_back({{"t", p.t}, {"residual", p.residual}});
            j["trace"] = t;
        }
        if (c.precision_bound)
            j["precision_bound"] = true;
        results.push_back(j);
    }
    doc["results"] = results;
    doc["summary"] = {{"pass", r.count(Status::Pass)},
                      {"fail", r.count(Status::Fail)},
                      {"inconclusive", r.count(Status::Inconclusive)},
                      {"exit_code", r.exit_code}};
    return doc.dump(2) + "\n";
}

}
