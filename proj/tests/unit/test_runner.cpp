#include "antiassoc/runner.hpp"
#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>

using namespace antiassoc;
using Status = ClaimResult::Status;

namespace {

RunConfig config(std::vector<std::string> suites)
{
    RunConfig cfg;
    cfg.corpus_path = ANTIASSOC_TEST_CORPUS;
    cfg.suites = std::move(suites);
    return cfg;
}

}

TEST_SUITE("runner")
{
    TEST_CASE("config validation")
    {
        RunConfig cfg = config({"all"});
        CHECK_NOTHROW(validate_config(cfg));
        cfg.precision = 32;
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
        cfg = config({"all"});
        cfg.tolerance = 1.5;
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
        cfg.tolerance = 0;
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
        cfg = config({"nonsense"});
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
        cfg = config({"all"});
        cfg.jobs = 0;
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
        cfg = config({"all"});
        cfg.format = "xml";
        CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    }

    TEST_CASE("suite expansion keeps a fixed order")
    {
        CHECK(expand_suites({"all"}) == suite_names());
        CHECK(expand_suites({"dimensions", "identities", "dimensions"})
              == std::vector<std::string>{"identities", "dimensions"});
    }

    TEST_CASE("claim seeds are stable and distinct")
    {
        CHECK(claim_seed(1, "A5.10") == claim_seed(1, "A5.10"));
        CHECK(claim_seed(1, "A5.10") != claim_seed(2, "A5.10"));
        CHECK(claim_seed(1, "A5.10") != claim_seed(1, "A5.11"));
    }

    TEST_CASE("identities suite covers every algebra")
    {
        auto rep = run(fixtures::corpus(), config({"identities"}));
        CHECK(rep.exit_code == 0);
        CHECK(rep.select("identities").size() == fixtures::corpus().algebras.size());
        CHECK(rep.count(Status::Fail) == 0);
    }

    TEST_CASE("text report has one line per claim")
    {
        auto rep = run(fixtures::corpus(), config({"dimensions"}));
        std::string text = render_text(rep);
        std::size_t lines = std::count(text.begin(), text.end(), '\n');
        // one header, one line per result, one summary
        CHECK(lines == rep.results.size() + 2);
        CHECK(text.find("dim A5.10") != std::string::npos);
    }

    TEST_CASE("json report is deterministic across job counts")
    {
        auto a = config({"identities", "extensions", "dimensions"});
        auto b = a;
        b.jobs = 3;
        std::string ja = render_json(run(fixtures::corpus(), a));
        std::string jb = render_json(run(fixtures::corpus(), b));
        CHECK(ja == jb);
        auto doc = nlohmann::json::parse(ja);
        CHECK(doc["report_version"] == report_format_version);
        CHECK(doc["summary"]["fail"] == 0);
        CHECK(doc["results"].size() > 50);
    }

    TEST_CASE("results are sorted by natural id order")
    {
        auto rep = run(fixtures::corpus(), config({"identities"}));
        std::vector<std::string> ids;
        for (const auto& r : rep.results)
            ids.push_back(r.id);
        auto n41 = std::find(ids.begin(), ids.end(), "N4.1");
        auto n410 = std::find(ids.begin(), ids.end(), "N4.10");
        auto n42 = std::find(ids.begin(), ids.end(), "N4.2");
        CHECK(n41 < n42);
        CHECK(n42 < n410);
    }

    TEST_CASE("perturbed structure constant fails the named record")
    {
        std::ifstream in(ANTIASSOC_TEST_CORPUS);
        auto doc = nlohmann::ordered_json::parse(in);
        for (auto& a : doc["algebras"])
            if (a["id"] == "A5.10")
                a["products"][0][2] = "2*" + a["products"][0][2].get<std::string>();
        Corpus c = parse_corpus(doc.dump());
        auto rep = run(c, config({"identities", "extensions"}));
        CHECK(rep.exit_code == 1);
        bool named = false;
        for (const auto& r : rep.results)
            if (r.status == Status::Fail)
                named = named || (r.id + r.detail).find("A5.10") != std::string::npos;
        CHECK(named);
    }

    TEST_CASE("unreachable tolerance is flagged as precision bound")
    {
        auto cfg = config({"degenerations"});
        cfg.precision = 64;
        cfg.tolerance = 1e-30;
        auto rep = run(fixtures::corpus(), cfg);
        CHECK(rep.exit_code == 1);
        int bound = 0;
        for (const auto* r : rep.select("degenerations", "degeneration"))
            if (r->status == Status::Fail) {
                CHECK_MESSAGE(r->precision_bound, r->id);
                ++bound;
            }
        CHECK(bound > 0);
    }

    TEST_CASE("missing corpus exits with 2")
    {
        auto cfg = config({"identities"});
        cfg.corpus_path = "/nonexistent.json";
        auto rep = run(cfg);
        CHECK(rep.exit_code == 2);
        CHECK_FALSE(rep.error.empty());
    }
}
