#pragma once

#include "antiassoc/corpus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace antiassoc {

constexpr int report_format_version = 1;

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "cohomology", "extensions",
                                                "alpha",      "degenerations", "dimensions"};
    return names;
}

struct RunConfig {
    std::string corpus_path;
    std::vector<std::string> suites{"all"};
    mpfr_prec_t precision = default_precision;
    double tolerance = 1e-8;
    int jobs = 1;
    std::string format = "text";
    std::uint64_t seed = 20211;
};

// throws std::invalid_argument naming the offending field
void validate_config(const RunConfig& cfg);
std::vector<std::string> expand_suites(const std::vector<std::string>& suites);

struct ClaimResult {
    enum class Status { Pass, Fail, Inconclusive };
    std::string suite;
    std::string check;
    std::string id;
    std::string location;
    Status status = Status::Fail;
    std::string mode;
    std::string detail;
    std::vector<ResidualPoint> trace;
    bool precision_bound = false;
};

std::string to_string(ClaimResult::Status s);

struct RunReport {
    RunConfig config;
    std::vector<ClaimResult> results;
    int exit_code = 0;
    std::string error;

    int count(ClaimResult::Status s) const;
    std::vector<const ClaimResult*> select(const std::string& suite, const std::string& check = {}) const;
};

// stable per-claim seed
std::uint64_t claim_seed(std::uint64_t seed, const std::string& id);

RunReport run(const RunConfig& cfg);
RunReport run(const Corpus& corpus, const RunConfig& cfg);

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);

}
