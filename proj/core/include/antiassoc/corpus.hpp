#pragma once

#include "antiassoc/algebra.hpp"
#include "antiassoc/cohomology.hpp"
#include "antiassoc/degeneration.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace antiassoc {

constexpr int corpus_format_version = 1;

class CorpusError : public std::runtime_error {
public:
    CorpusError(std::string where, const std::string& msg)
        : std::runtime_error(where + ": " + msg), path(std::move(where)) {}
    std::string path;
};

struct Provenance {
    std::string kind;
    std::string location;
};

struct Product {
    int i = 0, j = 0;
    Expr value;
};

struct AlgebraRecord {
    std::string id;
    std::string name;
    std::string kind;
    int dim = 0;
    std::vector<std::string> params;
    std::vector<Product> products;
    std::string split_of;
    bool classified = false;
    Provenance provenance;
    AlgebraSC algebra;
};

struct H2Table {
    std::string algebra;
    std::vector<Expr> generators;
    Provenance provenance;
};

struct ExtensionRecord {
    std::string id;
    std::string base;
    std::map<std::string, Expr> base_params;
    std::vector<Expr> cocycles;
    std::string expected;
    Provenance provenance;
};

struct TsEmptyRecord {
    std::string algebra;
    Provenance provenance;
};

struct ReductionRecord {
    ReductionCase rc;
    Provenance provenance;
};

struct AlphaRecord {
    AlphaFormulaSet set;
    std::vector<ReductionRecord> reductions;
    Provenance provenance;
};

struct DegenerationRecord {
    DegenerationClaim claim;
    std::string table;
    Provenance provenance;
};

struct OrbitDimRecord {
    std::string id;
    std::string algebra;
    std::string kind;
    int expected = 0;
    Provenance provenance;
};

struct ComponentRecord {
    std::string id;
    int dim = 0;
    std::vector<std::string> components;
    int expected_dim = 0;
    int expected_count = 0;
    Provenance provenance;
};

struct Corpus {
    int format_version = corpus_format_version;
    std::vector<AlgebraRecord> algebras;
    std::vector<H2Table> h2_tables;
    std::vector<ExtensionRecord> extensions;
    std::vector<TsEmptyRecord> ts_empty;
    std::vector<AlphaRecord> alpha_sets;
    std::vector<DegenerationRecord> degenerations;
    std::vector<OrbitDimRecord> orbit_dims;
    std::vector<ComponentRecord> components;

    const AlgebraRecord* find(const std::string& id) const;
    const AlgebraRecord& at(const std::string& id) const;
};

Corpus load_corpus(const std::string& path);
Corpus parse_corpus(const std::string& json_text, const std::string& origin = "<memory>");
std::string serialize_corpus(const Corpus& c);
// structural equality of every record, expressions compared as trees
bool corpus_equal(const Corpus& a, const Corpus& b);

struct RecordCheck {
    std::string record;
    bool pass = false;
    std::string detail;
};

std::vector<RecordCheck> validate_corpus(const Corpus& c);

AlgebraSC build_algebra(const std::string& id, int dim, const std::vector<std::string>& params,
                        const std::vector<Product>& products);
// A + C with the new basis vector annihilating everything
AlgebraSC split_extension(const AlgebraSC& a, const std::string& id);

}
