#include "antiassoc/corpus.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace antiassoc {

using json = nlohmann::ordered_json;

const AlgebraRecord* Corpus::find(const std::string& id) const
{
    for (const auto& a : algebras)
        if (a.id == id)
            return &a;
    return nullptr;
}

const AlgebraRecord& Corpus::at(const std::string& id) const
{
    if (auto a = find(id))
        return *a;
    throw CorpusError(id, "unknown algebra id");
}

AlgebraSC build_algebra(const std::string& id, int dim, const std::vector<std::string>& params,
                        const std::vector<Product>& products)
{
    AlgebraSC a(id, dim, params);
    std::vector<std::string> names;
    for (int k = 1; k <= dim; ++k)
        names.push_back("e" + std::to_string(k));
    for (const auto& p : products) {
        auto coeffs = linear_coefficients(p.value, names);
        for (int k = 0; k < dim; ++k)
            if (!coeffs[k].is_zero())
                a.set(p.i - 1, p.j - 1, k, a.constants()(p.i - 1, p.j - 1, k) + coeffs[k]);
    }
    return a;
}

AlgebraSC split_extension(const AlgebraSC& a, const std::string& id)
{
    int n = a.dim();
    Tensor<RatFun> t(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t(i, j, k) = a.constants()(i, j, k);
    return AlgebraSC(id, std::move(t), a.params());
}

namespace {

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& msg) const
    {
        throw CorpusError(origin_ + ":" + where, msg);
    }

    const json& field(const json& j, const std::string& where, const char* key) const
    {
        if (!j.is_object() || !j.contains(key))
            fail(where, std::string("missing field '") + key + "'");
        return j.at(key);
    }

    std::string str(const json& j, const std::string& where, const char* key) const
    {
        const json& v = field(j, where, key);
        if (!v.is_string())
            fail(where + "." + key, "expected a string");
        return v.get<std::string>();
    }

    std::string opt_str(const json& j, const char* key) const
    {
        return j.contains(key) && j.at(key).is_string() ? j.at(key).get<std::string>() : std::string();
    }

    int integer(const json& j, const std::string& where, const char* key) const
    {
        const json& v = field(j, where, key);
        if (!v.is_number_integer())
            fail(where + "." + key, "expected an integer");
        return v.get<int>();
    }

    std::vector<std::string> strings(const json& j, const std::string& where, const char* key, bool required) const
    {
        std::vector<std::string> out;
        if (!j.contains(key)) {
            if (required)
                fail(where, std::string("missing field '") + key + "'");
            return out;
        }
        const json& v = j.at(key);
        if (!v.is_array())
            fail(where + "." + key, "expected an array");
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_string())
                fail(where + "." + key + "[" + std::to_string(k) + "]", "expected a string");
            out.push_back(v[k].get<std::string>());
        }
        return out;
    }

    Expr expr(const std::string& text, const std::string& where,
              const std::optional<std::set<std::string>>& syms = std::nullopt) const
    {
        try {
            return parse_expr(text, syms);
        } catch (const ParseError& e) {
            fail(where, std::string("parse error ") + e.what() + " in \"" + text + "\"");
        }
    }

    std::vector<Expr> exprs(const json& j, const std::string& where, const char* key,
                            const std::optional<std::set<std::string>>& syms = std::nullopt) const
    {
        std::vector<Expr> out;
        auto texts = strings(j, where, key, true);
        for (std::size_t k = 0; k < texts.size(); ++k)
            out.push_back(expr(texts[k], where + "." + key + "[" + std::to_string(k) + "]", syms));
        return out;
    }

    std::map<std::string, Expr> expr_map(const json& j, const std::string& where, const char* key) const
    {
        std::map<std::string, Expr> out;
        if (!j.contains(key))
            return out;
        const json& v = j.at(key);
        if (!v.is_object())
            fail(where + "." + key, "expected an object");
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!it.value().is_string())
                fail(where + "." + key + "." + it.key(), "expected a string");
            out.emplace(it.key(), expr(it.value().get<std::string>(), where + "." + key + "." + it.key()));
        }
        return out;
    }

    Provenance provenance(const json& j, const std::string& where) const
    {
        const json& p = field(j, where, "provenance");
        Provenance out{str(p, where + ".provenance", "kind"), str(p, where + ".provenance", "location")};
        if (out.kind != "quoted" && out.kind != "reconstructed")
            fail(where + ".provenance.kind", "must be 'quoted' or 'reconstructed'");
        return out;
    }

    const json& array(const json& j, const std::string& where, const char* key) const
    {
        const json& v = field(j, where, key);
        if (!v.is_array())
            fail(where + "." + key, "expected an array");
        return v;
    }

private:
    std::string origin_;
};

std::string label(const char* section, std::size_t k)
{
    return std::string(section) + "[" + std::to_string(k) + "]";
}

std::set<std::string> basis_symbols(int dim, const std::vector<std::string>& params)
{
    std::set<std::string> s(params.begin(), params.end());
    for (int k = 1; k <= dim; ++k)
        s.insert("e" + std::to_string(k));
    return s;
}

}

Corpus parse_corpus(const std::string& text, const std::string& origin)
{
    Reader rd(origin);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        rd.fail("$", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        rd.fail("$", "top level must be an object");
    Corpus c;
    c.format_version = rd.integer(doc, "$", "format_version");
    if (c.format_version != corpus_format_version)
        rd.fail("$.format_version", "unsupported version " + std::to_string(c.format_version));

    const json& algs = rd.array(doc, "$", "algebras");
    std::set<std::string> ids;
    for (std::size_t k = 0; k < algs.size(); ++k) {
        const json& a = algs[k];
        std::string where = label("algebras", k);
        AlgebraRecord r;
        r.id = rd.str(a, where, "id");
        where += "(" + r.id + ")";
        if (!ids.insert(r.id).second)
            rd.fail(where, "duplicate algebra id");
        r.name = rd.opt_str(a, "name");
        r.kind = rd.str(a, where, "kind");
        r.dim = rd.integer(a, where, "dim");
        if (r.dim < 0 || r.dim > 9)
            rd.fail(where + ".dim", "dimension out of range");
        r.params = rd.strings(a, where, "params", false);
        r.split_of = rd.opt_str(a, "split_of");
        r.classified = a.contains("classified") && a.at("classified").is_boolean() && a.at("classified").get<bool>();
        r.provenance = rd.provenance(a, where);
        if (a.contains("products")) {
            const json& ps = rd.array(a, where, "products");
            auto syms = basis_symbols(r.dim, r.params);
            for (std::size_t m = 0; m < ps.size(); ++m) {
                std::string pw = where + ".products[" + std::to_string(m) + "]";
                const json& p = ps[m];
                if (!p.is_array() || p.size() != 3 || !p[0].is_number_integer() || !p[1].is_number_integer()
                    || !p[2].is_string())
                    rd.fail(pw, "expected [i, j, \"expression\"]");
                Product pr{p[0].get<int>(), p[1].get<int>(), rd.expr(p[2].get<std::string>(), pw, syms)};
                if (pr.i < 1 || pr.i > r.dim || pr.j < 1 || pr.j > r.dim)
                    rd.fail(pw, "index out of range");
                r.products.push_back(std::move(pr));
            }
        }
        if (!r.split_of.empty() && !r.products.empty())
            rd.fail(where, "split algebras take their products from the base");
        c.algebras.push_back(std::move(r));
    }
    for (auto& r : c.algebras) {
        if (r.split_of.empty()) {
            try {
                r.algebra = build_algebra(r.id, r.dim, r.params, r.products);
            } catch (const std::exception& e) {
                rd.fail("algebras(" + r.id + ")", e.what());
            }
        }
    }
    std::set<std::string> built;
    for (const auto& r : c.algebras)
        if (r.split_of.empty())
            built.insert(r.id);
    for (bool progress = true; progress;) {
        progress = false;
        for (auto& r : c.algebras) {
            if (built.count(r.id) || !built.count(r.split_of))
                continue;
            const AlgebraRecord* base = c.find(r.split_of);
            if (base->dim + 1 != r.dim)
                rd.fail("algebras(" + r.id + ").split_of", "dimension mismatch");
            r.params = base->params;
            r.algebra = split_extension(base->algebra, r.id);
            built.insert(r.id);
            progress = true;
        }
    }
    for (const auto& r : c.algebras) {
        if (built.count(r.id))
            continue;
        if (!c.find(r.split_of))
            rd.fail("algebras(" + r.id + ").split_of", "dangling id '" + r.split_of + "'");
        rd.fail("algebras(" + r.id + ").split_of", "cyclic split chain");
    }
    auto need = [&](const std::string& id, const std::string& where) -> const AlgebraRecord& {
        const AlgebraRecord* a = c.find(id);
        if (!a)
            rd.fail(where, "dangling id '" + id + "'");
        return *a;
    };

    if (doc.contains("h2_tables")) {
        const json& hs = rd.array(doc, "$", "h2_tables");
        for (std::size_t k = 0; k < hs.size(); ++k) {
            std::string where = label("h2_tables", k);
            H2Table h;
            h.algebra = rd.str(hs[k], where, "algebra");
            const auto& base = need(h.algebra, where + ".algebra");
            auto syms = basis_symbols(0, base.params);
            for (int i = 1; i <= base.dim; ++i)
                for (int j = 1; j <= base.dim; ++j)
                    syms.insert("D" + std::to_string(i) + std::to_string(j));
            h.generators = rd.exprs(hs[k], where, "generators", syms);
            h.provenance = rd.provenance(hs[k], where);
            c.h2_tables.push_back(std::move(h));
        }
    }
    if (doc.contains("extension_specs")) {
        const json& es = rd.array(doc, "$", "extension_specs");
        for (std::size_t k = 0; k < es.size(); ++k) {
            std::string where = label("extension_specs", k);
            ExtensionRecord e;
            e.id = rd.str(es[k], where, "id");
            where += "(" + e.id + ")";
            e.base = rd.str(es[k], where, "base");
            e.expected = rd.str(es[k], where, "expected");
            const auto& base = need(e.base, where + ".base");
            const auto& target = need(e.expected, where + ".expected");
            auto syms = basis_symbols(0, target.params);
            syms.insert(base.params.begin(), base.params.end());
            for (int i = 1; i <= base.dim; ++i)
                for (int j = 1; j <= base.dim; ++j)
                    syms.insert("D" + std::to_string(i) + std::to_string(j));
            e.base_params = rd.expr_map(es[k], where, "base_params");
            e.cocycles = rd.exprs(es[k], where, "cocycles", syms);
            e.provenance = rd.provenance(es[k], where);
            if (base.dim + int(e.cocycles.size()) != target.dim)
                rd.fail(where, "base dimension plus cocycle count differs from the target dimension");
            c.extensions.push_back(std::move(e));
        }
    }
    if (doc.contains("ts_empty")) {
        const json& ts = rd.array(doc, "$", "ts_empty");
        for (std::size_t k = 0; k < ts.size(); ++k) {
            std::string where = label("ts_empty", k);
            TsEmptyRecord t{rd.str(ts[k], where, "algebra"), rd.provenance(ts[k], where)};
            need(t.algebra, where + ".algebra");
            c.ts_empty.push_back(std::move(t));
        }
    }
    if (doc.contains("alpha_formula_sets")) {
        const json& as = rd.array(doc, "$", "alpha_formula_sets");
        for (std::size_t k = 0; k < as.size(); ++k) {
            const json& a = as[k];
            std::string where = label("alpha_formula_sets", k);
            AlphaRecord r;
            r.set.family = rd.str(a, where, "family");
            where += "(" + r.set.family + ")";
            const auto& base = need(r.set.family, where + ".family");
            auto dsyms = basis_symbols(0, base.params);
            for (int i = 1; i <= base.dim; ++i)
                for (int j = 1; j <= base.dim; ++j)
                    dsyms.insert("D" + std::to_string(i) + std::to_string(j));
            r.set.nablas = rd.exprs(a, where, "nablas", dsyms);
            r.set.alphas = rd.strings(a, where, "alphas", true);
            r.provenance = rd.provenance(a, where);
            const json& shapes = rd.array(a, where, "automorphisms");
            for (std::size_t m = 0; m < shapes.size(); ++m) {
                std::string sw = where + ".automorphisms[" + std::to_string(m) + "]";
                AutomorphismShape s;
                s.label = rd.str(shapes[m], sw, "label");
                const json& mat = rd.array(shapes[m], sw, "matrix");
                if (int(mat.size()) != base.dim)
                    rd.fail(sw + ".matrix", "wrong number of rows");
                for (std::size_t i = 0; i < mat.size(); ++i) {
                    std::vector<Expr> row;
                    if (!mat[i].is_array() || int(mat[i].size()) != base.dim)
                        rd.fail(sw + ".matrix", "wrong row length");
                    for (std::size_t j = 0; j < mat[i].size(); ++j) {
                        if (!mat[i][j].is_string())
                            rd.fail(sw + ".matrix", "expected strings");
                        row.push_back(rd.expr(mat[i][j].get<std::string>(), sw + ".matrix"));
                    }
                    s.matrix.push_back(std::move(row));
                }
                s.formulas = rd.exprs(shapes[m], sw, "formulas");
                r.set.shapes.push_back(std::move(s));
            }
            if (a.contains("reductions")) {
                const json& rs = rd.array(a, where, "reductions");
                for (std::size_t m = 0; m < rs.size(); ++m) {
                    std::string rw = where + ".reductions[" + std::to_string(m) + "]";
                    ReductionRecord rr;
                    rr.rc.id = rd.str(rs[m], rw, "id");
                    rr.rc.shape = rd.str(rs[m], rw, "automorphism");
                    rr.rc.params = rd.expr_map(rs[m], rw, "params");
                    rr.rc.alpha_values = rd.expr_map(rs[m], rw, "alpha_values");
                    rr.rc.phi_values = rd.expr_map(rs[m], rw, "substitution");
                    rr.rc.theta_in = rd.exprs(rs[m], rw, "theta");
                    rr.rc.expected = rd.exprs(rs[m], rw, "expected");
                    rr.provenance = rd.provenance(rs[m], rw);
                    r.reductions.push_back(std::move(rr));
                }
            }
            c.alpha_sets.push_back(std::move(r));
        }
    }
    if (doc.contains("degeneration_claims")) {
        const json& ds = rd.array(doc, "$", "degeneration_claims");
        std::set<std::string> seen;
        for (std::size_t k = 0; k < ds.size(); ++k) {
            const json& d = ds[k];
            std::string where = label("degeneration_claims", k);
            DegenerationRecord r;
            auto& cl = r.claim;
            cl.id = rd.str(d, where, "id");
            where += "(" + cl.id + ")";
            if (!seen.insert(cl.id).second)
                rd.fail(where, "duplicate claim id");
            r.table = rd.str(d, where, "table");
            cl.source = rd.str(d, where, "source");
            cl.target = rd.str(d, where, "target");
            const auto& src = need(cl.source, where + ".source");
            const auto& tgt = need(cl.target, where + ".target");
            if (src.dim != tgt.dim)
                rd.fail(where, "source and target dimensions differ");
            cl.source_index = rd.expr_map(d, where, "source_index");
            cl.target_params = rd.expr_map(d, where, "target_params");
            cl.aux = rd.expr_map(d, where, "aux");
            cl.sampled = rd.strings(d, where, "sampled", false);
            cl.numeric_only = d.contains("numeric_only") && d.at("numeric_only").is_boolean()
                && d.at("numeric_only").get<bool>();
            if (d.contains("source_relabel")) {
                const json& p = rd.array(d, where, "source_relabel");
                for (const auto& x : p)
                    cl.source_relabel.push_back(x.get<int>());
                auto sorted = cl.source_relabel;
                std::sort(sorted.begin(), sorted.end());
                for (int i = 0; i < int(sorted.size()); ++i)
                    if (sorted[i] != i + 1 || int(sorted.size()) != src.dim)
                        rd.fail(where + ".source_relabel", "not a permutation");
            }
            for (const auto& [p, e] : cl.source_index)
                if (std::find(src.params.begin(), src.params.end(), p) == src.params.end())
                    rd.fail(where + ".source_index", "source has no parameter '" + p + "'");
            for (const auto& [p, e] : cl.target_params)
                if (std::find(tgt.params.begin(), tgt.params.end(), p) == tgt.params.end())
                    rd.fail(where + ".target_params", "target has no parameter '" + p + "'");
            std::set<std::string> syms{"t"};
            syms.insert(src.params.begin(), src.params.end());
            syms.insert(tgt.params.begin(), tgt.params.end());
            for (const auto& [a, e] : cl.aux)
                syms.insert(a);
            syms.insert(cl.sampled.begin(), cl.sampled.end());
            const json& rows = rd.array(d, where, "basis");
            if (int(rows.size()) != src.dim)
                rd.fail(where + ".basis", "wrong number of rows");
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].is_array() || int(rows[i].size()) != src.dim)
                    rd.fail(where + ".basis[" + std::to_string(i) + "]", "wrong row length");
                std::vector<Expr> row;
                for (std::size_t j = 0; j < rows[i].size(); ++j)
                    row.push_back(rd.expr(rows[i][j].get<std::string>(),
                                          where + ".basis[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                          syms));
                cl.basis.push_back(std::move(row));
            }
            r.provenance = rd.provenance(d, where);
            cl.location = r.provenance.location;
            c.degenerations.push_back(std::move(r));
        }
    }
    if (doc.contains("orbit_dims")) {
        const json& os = rd.array(doc, "$", "orbit_dims");
        for (std::size_t k = 0; k < os.size(); ++k) {
            std::string where = label("orbit_dims", k);
            OrbitDimRecord r;
            r.id = rd.str(os[k], where, "id");
            r.algebra = rd.str(os[k], where, "algebra");
            r.kind = rd.str(os[k], where, "kind");
            if (r.kind != "orbit" && r.kind != "closure")
                rd.fail(where + ".kind", "must be 'orbit' or 'closure'");
            r.expected = rd.integer(os[k], where, "expected");
            r.provenance = rd.provenance(os[k], where);
            need(r.algebra, where + ".algebra");
            c.orbit_dims.push_back(std::move(r));
        }
    }
    if (doc.contains("components")) {
        const json& cs = rd.array(doc, "$", "components");
        for (std::size_t k = 0; k < cs.size(); ++k) {
            std::string where = label("components", k);
            ComponentRecord r;
            r.id = rd.str(cs[k], where, "id");
            r.dim = rd.integer(cs[k], where, "dim");
            r.components = rd.strings(cs[k], where, "components", true);
            r.expected_dim = rd.integer(cs[k], where, "expected_dim");
            r.expected_count = rd.integer(cs[k], where, "expected_count");
            r.provenance = rd.provenance(cs[k], where);
            for (const auto& id : r.components)
                need(id, where + ".components");
            c.components.push_back(std::move(r));
        }
    }
    return c;
}

Corpus load_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CorpusError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str(), path);
}

namespace {

json prov_json(const Provenance& p)
{
    return json{{"kind", p.kind}, {"location", p.location}};
}

json expr_list(const std::vector<Expr>& es)
{
    json a = json::array();
    for (const auto& e : es)
        a.push_back(print_expr(e));
    return a;
}

json expr_object(const std::map<std::string, Expr>& m)
{
    json o = json::object();
    for (const auto& [k, e] : m)
        o[k] = print_expr(e);
    return o;
}

}

std::string serialize_corpus(const Corpus& c)
{
    json doc;
    doc["format_version"] = c.format_version;
    json algs = json::array();
    for (const auto& a : c.algebras) {
        json j;
        j["id"] = a.id;
        if (!a.name.empty())
            j["name"] = a.name;
        j["kind"] = a.kind;
        j["dim"] = a.dim;
        if (!a.params.empty() && a.split_of.empty())
            j["params"] = a.params;
        if (a.classified)
            j["classified"] = true;
        if (!a.split_of.empty())
            j["split_of"] = a.split_of;
        else {
            json ps = json::array();
            for (const auto& p : a.products)
                ps.push_back(json::array({p.i, p.j, print_expr(p.value)}));
            j["products"] = ps;
        }
        j["provenance"] = prov_json(a.provenance);
        algs.push_back(j);
    }
    doc["algebras"] = algs;
    json hs = json::array();
    for (const auto& h : c.h2_tables)
        hs.push_back({{"algebra", h.algebra}, {"generators", expr_list(h.generators)},
                      {"provenance", prov_json(h.provenance)}});
    doc["h2_tables"] = hs;
    json es = json::array();
    for (const auto& e : c.extensions) {
        json j{{"id", e.id}, {"base", e.base}};
        if (!e.base_params.empty())
            j["base_params"] = expr_object(e.base_params);
        j["cocycles"] = expr_list(e.cocycles);
        j["expected"] = e.expected;
        j["provenance"] = prov_json(e.provenance);
        es.push_back(j);
    }
    doc["extension_specs"] = es;
    json ts = json::array();
    for (const auto& t : c.ts_empty)
        ts.push_back({{"algebra", t.algebra}, {"provenance", prov_json(t.provenance)}});
    doc["ts_empty"] = ts;
    json as = json::array();
    for (const auto& a : c.alpha_sets) {
        json j{{"family", a.set.family}, {"nablas", expr_list(a.set.nablas)}, {"alphas", a.set.alphas}};
        json shapes = json::array();
        for (const auto& s : a.set.shapes) {
            json m = json::array();
            for (const auto& row : s.matrix)
                m.push_back(expr_list(row));
            shapes.push_back({{"label", s.label}, {"matrix", m}, {"formulas", expr_list(s.formulas)}});
        }
        j["automorphisms"] = shapes;
        json rs = json::array();
        for (const auto& r : a.reductions) {
            json rj{{"id", r.rc.id}, {"automorphism", r.rc.shape}};
            if (!r.rc.params.empty())
                rj["params"] = expr_object(r.rc.params);
            rj["alpha_values"] = expr_object(r.rc.alpha_values);
            rj["substitution"] = expr_object(r.rc.phi_values);
            rj["theta"] = expr_list(r.rc.theta_in);
            rj["expected"] = expr_list(r.rc.expected);
            rj["provenance"] = prov_json(r.provenance);
            rs.push_back(rj);
        }
        if (!rs.empty())
            j["reductions"] = rs;
        j["provenance"] = prov_json(a.provenance);
        as.push_back(j);
    }
    doc["alpha_formula_sets"] = as;
    json ds = json::array();
    for (const auto& d : c.degenerations) {
        const auto& cl = d.claim;
        json j{{"id", cl.id}, {"table", d.table}, {"source", cl.source}, {"target", cl.target}};
        if (!cl.source_index.empty())
            j["source_index"] = expr_object(cl.source_index);
        if (!cl.target_params.empty())
            j["target_params"] = expr_object(cl.target_params);
        if (!cl.aux.empty())
            j["aux"] = expr_object(cl.aux);
        if (!cl.sampled.empty())
            j["sampled"] = cl.sampled;
        if (!cl.source_relabel.empty())
            j["source_relabel"] = cl.source_relabel;
        if (cl.numeric_only)
            j["numeric_only"] = true;
        json rows = json::array();
        for (const auto& row : cl.basis)
            rows.push_back(expr_list(row));
        j["basis"] = rows;
        j["provenance"] = prov_json(d.provenance);
        ds.push_back(j);
    }
    doc["degeneration_claims"] = ds;
    json os = json::array();
    for (const auto& o : c.orbit_dims)
        os.push_back({{"id", o.id}, {"algebra", o.algebra}, {"kind", o.kind}, {"expected", o.expected},
                      {"provenance", prov_json(o.provenance)}});
    doc["orbit_dims"] = os;
    json cs = json::array();
    for (const auto& r : c.components)
        cs.push_back({{"id", r.id}, {"dim", r.dim}, {"components", r.components}, {"expected_dim", r.expected_dim},
                      {"expected_count", r.expected_count}, {"provenance", prov_json(r.provenance)}});
    doc["components"] = cs;
    return doc.dump(1) + "\n";
}

namespace {

bool same(const Provenance& a, const Provenance& b)
{
    return a.kind == b.kind && a.location == b.location;
}

}

bool corpus_equal(const Corpus& a, const Corpus& b)
{
    if (a.format_version != b.format_version || a.algebras.size() != b.algebras.size()
        || a.h2_tables.size() != b.h2_tables.size() || a.extensions.size() != b.extensions.size()
        || a.ts_empty.size() != b.ts_empty.size() || a.alpha_sets.size() != b.alpha_sets.size()
        || a.degenerations.size() != b.degenerations.size() || a.orbit_dims.size() != b.orbit_dims.size()
        || a.components.size() != b.components.size())
        return false;
    for (std::size_t k = 0; k < a.algebras.size(); ++k) {
        const auto &x = a.algebras[k], &y = b.algebras[k];
        if (x.id != y.id || x.name != y.name || x.kind != y.kind || x.dim != y.dim || x.params != y.params
            || x.split_of != y.split_of || x.classified != y.classified || !same(x.provenance, y.provenance)
            || x.products.size() != y.products.size())
            return false;
        for (std::size_t m = 0; m < x.products.size(); ++m)
            if (x.products[m].i != y.products[m].i || x.products[m].j != y.products[m].j
                || x.products[m].value != y.products[m].value)
                return false;
    }
    for (std::size_t k = 0; k < a.h2_tables.size(); ++k)
        if (a.h2_tables[k].algebra != b.h2_tables[k].algebra
            || a.h2_tables[k].generators != b.h2_tables[k].generators
            || !same(a.h2_tables[k].provenance, b.h2_tables[k].provenance))
            return false;
    for (std::size_t k = 0; k < a.extensions.size(); ++k) {
        const auto &x = a.extensions[k], &y = b.extensions[k];
        if (x.id != y.id || x.base != y.base || x.base_params != y.base_params || x.cocycles != y.cocycles
            || x.expected != y.expected || !same(x.provenance, y.provenance))
            return false;
    }
    for (std::size_t k = 0; k < a.ts_empty.size(); ++k)
        if (a.ts_empty[k].algebra != b.ts_empty[k].algebra || !same(a.ts_empty[k].provenance, b.ts_empty[k].provenance))
            return false;
    for (std::size_t k = 0; k < a.alpha_sets.size(); ++k) {
        const auto &x = a.alpha_sets[k], &y = b.alpha_sets[k];
        if (x.set.family != y.set.family || x.set.nablas != y.set.nablas || x.set.alphas != y.set.alphas
            || x.set.shapes.size() != y.set.shapes.size() || x.reductions.size() != y.reductions.size()
            || !same(x.provenance, y.provenance))
            return false;
        for (std::size_t m = 0; m < x.set.shapes.size(); ++m)
            if (x.set.shapes[m].label != y.set.shapes[m].label || x.set.shapes[m].matrix != y.set.shapes[m].matrix
                || x.set.shapes[m].formulas != y.set.shapes[m].formulas)
                return false;
        for (std::size_t m = 0; m < x.reductions.size(); ++m) {
            const auto &r = x.reductions[m].rc, &s = y.reductions[m].rc;
            if (r.id != s.id || r.shape != s.shape || r.params != s.params || r.alpha_values != s.alpha_values
                || r.phi_values != s.phi_values || r.theta_in != s.theta_in || r.expected != s.expected
                || !same(x.reductions[m].provenance, y.reductions[m].provenance))
                return false;
        }
    }
    for (std::size_t k = 0; k < a.degenerations.size(); ++k) {
        const auto &x = a.degenerations[k], &y = b.degenerations[k];
        const auto &p = x.claim, &q = y.claim;
        if (x.table != y.table || !same(x.provenance, y.provenance) || p.id != q.id || p.source != q.source
            || p.target != q.target || p.source_index != q.source_index || p.target_params != q.target_params
            || p.aux != q.aux || p.sampled != q.sampled || p.source_relabel != q.source_relabel
            || p.numeric_only != q.numeric_only || p.basis != q.basis)
            return false;
    }
    for (std::size_t k = 0; k < a.orbit_dims.size(); ++k) {
        const auto &x = a.orbit_dims[k], &y = b.orbit_dims[k];
        if (x.id != y.id || x.algebra != y.algebra || x.kind != y.kind || x.expected != y.expected
            || !same(x.provenance, y.provenance))
            return false;
    }
    for (std::size_t k = 0; k < a.components.size(); ++k) {
        const auto &x = a.components[k], &y = b.components[k];
        if (x.id != y.id || x.dim != y.dim || x.components != y.components || x.expected_dim != y.expected_dim
            || x.expected_count != y.expected_count || !same(x.provenance, y.provenance))
            return false;
    }
    return true;
}

std::vector<RecordCheck> validate_corpus(const Corpus& c)
{
    std::vector<RecordCheck> out;
    for (const auto& a : c.algebras) {
        auto id = check_antiassociative(a.algebra);
        auto nil = check_nilpotency4(a.algebra);
        RecordCheck r{"algebra " + a.id, id.pass && nil.pass, {}};
        std::ostringstream os;
        if (!id.pass) {
            const auto& v = id.violations.front();
            os << id.violations.size() << " antiassociativity violations, first at (" << v.i + 1 << "," << v.j + 1
               << "," << v.k + 1 << ")";
        } else
            os << "antiassociative";
        os << "; dim A2 = " << nil.dims.a2 << ", dim A3 = " << nil.dims.a3 << ", dim A4 = " << nil.dims.a4;
        r.detail = os.str();
        out.push_back(std::move(r));
    }
    for (const auto& h : c.h2_tables) {
        const auto& base = c.at(h.algebra);
        RecordCheck r{"h2 " + h.algebra, true, "all generators are cocycles"};
        for (std::size_t k = 0; k < h.generators.size(); ++k) {
            auto th = parse_cocycle(h.generators[k], base.dim);
            if (!is_cocycle(base.algebra.constants(), th)) {
                r.pass = false;
                r.detail = "generator " + std::to_string(k + 1) + " (" + print_expr(h.generators[k])
                    + ") violates the cocycle condition";
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}
