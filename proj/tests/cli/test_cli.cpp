#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome sh(const std::string& args, const std::string& env = {})
{
    std::string cmd = env + " " + ANTIASSOC_CLI + " " + args + " 2>&1";
    Outcome o;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        o.out.append(buf.data(), n);
    int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

std::string temp_corpus(const std::string& name, const nlohmann::ordered_json& doc)
{
    auto path = std::filesystem::temp_directory_path() / ("antiassoc_" + name + ".json");
    std::ofstream(path) << doc.dump(1);
    return path.string();
}

nlohmann::ordered_json raw()
{
    std::ifstream in(ANTIASSOC_TEST_CORPUS);
    return nlohmann::ordered_json::parse(in);
}

const std::string corpus = std::string("--corpus ") + ANTIASSOC_TEST_CORPUS;

}

TEST_CASE("verify passes on the bundled corpus")
{
    auto o = sh(corpus + " verify --suite identities --suite dimensions");
    CHECK(o.code == 0);
    CHECK(o.out.find("summary:") != std::string::npos);
    CHECK(o.out.find("FAIL") == std::string::npos);
}

TEST_CASE("perturbed constant exits with 1 naming the record")
{
    auto doc = raw();
    for (auto& a : doc["algebras"])
        if (a["id"] == "A5.21")
            a["products"][0][2] = "3*" + a["products"][0][2].get<std::string>();
    auto path = temp_corpus("perturbed", doc);
    auto o = sh("--corpus " + path + " verify --suite identities --suite extensions");
    CHECK(o.code == 1);
    CHECK(o.out.find("FAIL") != std::string::npos);
    CHECK(o.out.find("A5.21") != std::string::npos);
}

TEST_CASE("low precision with a tiny tolerance exits with 1")
{
    auto o = sh(corpus + " --precision 64 --tol 1e-30 verify --suite degenerations");
    CHECK(o.code == 1);
    CHECK(o.out.find("precision-bound") != std::string::npos);
}

TEST_CASE("corpus errors exit with 2")
{
    auto o = sh("--corpus /nonexistent.json verify");
    CHECK(o.code == 2);
    auto doc = raw();
    for (auto& d : doc["degeneration_claims"])
        if (d["id"] == "A5.10>A5.4")
            d["target"] = "A5.99";
    o = sh("--corpus " + temp_corpus("dangling", doc) + " verify");
    CHECK(o.code == 2);
    CHECK(o.out.find("A5.10>A5.4") != std::string::npos);
}

TEST_CASE("bad arguments exit with 2")
{
    CHECK(sh(corpus + " --precision 32 verify").code == 2);
    CHECK(sh(corpus + " --tol 2 verify").code == 2);
    CHECK(sh(corpus + " verify --suite nonsense").code == 2);
    CHECK(sh(corpus + " --format yaml verify").code == 2);
}

TEST_CASE("json output is byte identical across runs and job counts")
{
    auto a = sh(corpus + " --format json --seed 5 verify --suite cohomology --suite alpha");
    auto b = sh(corpus + " --format json --seed 5 --jobs 4 verify --suite cohomology --suite alpha");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["config"]["seed"] == 5);
}

TEST_CASE("environment overrides")
{
    auto o = sh(corpus + " verify", "ANTIASSOC_SUITE=dimensions ANTIASSOC_FORMAT=json");
    CHECK(o.code == 0);
    auto doc = nlohmann::json::parse(o.out);
    for (const auto& r : doc["results"])
        CHECK(r["suite"] == "dimensions");
}

TEST_CASE("show, h2, extend, degen, dims")
{
    auto o = sh(corpus + " show A5.10");
    CHECK(o.code == 0);
    CHECK(o.out.find("der=5") != std::string::npos);

    o = sh(corpus + " h2 N4.1");
    CHECK(o.code == 0);
    CHECK(o.out.find("H2 = 9") != std::string::npos);

    o = sh(corpus + " extend N3.1 --cocycle \"(D12-D21)+D13\"");
    CHECK(o.code == 0);
    CHECK(o.out.find("A4.2") != std::string::npos);

    o = sh(corpus + " degen 'A4.3>A4.2'");
    CHECK(o.code == 0);
    CHECK(o.out.find("verified-exact") != std::string::npos);

    o = sh(corpus + " dims");
    CHECK(o.code == 0);
    CHECK(o.out.find("24") != std::string::npos);

    CHECK(sh(corpus + " show A9.9").code == 2);
}
