#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_run.hpp"
#include "pentacover/graph6.hpp"
#include "pentacover/perm.hpp"

using namespace pentacover;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("build then aut on K_6") {
    TempFile f("cli_k6.g6");
    auto b = run({"build", "--family", "k6", "-o", f.path});
    CHECK(b.code == 0);
    auto a = run({"aut", f.path});
    CHECK(a.code == 0);
    CHECK(a.out.find("|Aut| = 720") != std::string::npos);
}

TEST_CASE("build cd11 and aut --json reports 1320 with A_5 stabilizer") {
    TempFile f("cli_cd11.g6");
    CHECK(run({"build", "--family", "cd", "--m", "11", "-o", f.path}).code == 0);
    auto a = run({"aut", f.path, "--json"});
    CHECK(a.code == 0);
    CHECK(a.out.find("\"order\": 1320") != std::string::npos);
    CHECK(a.out.find("\"stabilizer\": \"A_5\"") != std::string::npos);
    CHECK(a.out.find("\"s\": 2") != std::string::npos);
}

TEST_CASE("iso distinguishes families and accepts sparse6") {
    TempFile f1("cli_i12.s6"), f2("cli_k66.g6"), f3("cli_i12b.g6");
    CHECK(run({"build", "--family", "i12", "--format", "sparse6", "-o", f1.path}).code == 0);
    CHECK(run({"build", "--family", "k66-6k2", "-o", f2.path}).code == 0);
    CHECK(run({"build", "--family", "i12", "-o", f3.path}).code == 0);
    auto r = run({"iso", f1.path, f2.path});
    CHECK(r.code == 0);
    CHECK(r.out == "not isomorphic\n");
    auto r2 = run({"iso", f1.path, f3.path});
    CHECK(r2.code == 0);
    CHECK(r2.out == "isomorphic\n");
}

TEST_CASE("solve-eq1") {
    auto r = run({"solve-eq1", "--m", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 4 5 9") != std::string::npos);
    auto r2 = run({"solve-eq1", "--m", "7"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("no roots") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and side conditions are named") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "--family", "k6"}).code == 2); // missing -o
    auto r = run({"build", "--family", "cgd1", "--m", "1", "--p", "7", "--e", "2", "-o", "x.g6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("5 | (p-1)") != std::string::npos);
}

TEST_CASE("quotient with canonical subgroup maps cgd4(1,5) onto K_{5,5}") {
    TempFile cover("cli_cgd4.g6"), quot("cli_quot.g6"), k55("cli_k55.g6");
    CHECK(run({"build", "--family", "cgd4", "--m", "1", "--p", "5", "-o", cover.path}).code == 0);
    auto q = run({"quotient", cover.path, "--subgroup", "canonical", "--family", "cgd4", "--m",
                  "1", "--p", "5", "-o", quot.path});
    CHECK(q.code == 0);
    CHECK(run({"build", "--family", "k55", "-o", k55.path}).code == 0);
    auto r = run({"iso", quot.path, k55.path});
    CHECK(r.out == "isomorphic\n");
}

TEST_CASE("quotient with a subgroup file") {
    TempFile cover("cli_cd55.g6"), sub("cli_sub.txt"), quot("cli_quot55.g6");
    CHECK(run({"build", "--family", "cd", "--m", "55", "-o", cover.path}).code == 0);
    // right multiplication by a^11 in Dih(Z_55): ranks (v, flip) -> flip*55 + v
    std::vector<int> img(110);
    for (int flip = 0; flip < 2; ++flip)
        for (int v = 0; v < 55; ++v) {
            int t = flip ? (v + 55 - 11) % 55 : (v + 11) % 55;
            img[flip * 55 + v] = flip * 55 + t;
        }
    {
        std::ofstream f(sub.path);
        f << perms_to_text({Perm(img)});
    }
    auto q = run({"quotient", cover.path, "--subgroup", sub.path, "-o", quot.path});
    CHECK(q.code == 0);
    Graph qg = read_graph_file(quot.path);
    CHECK(qg.vertex_count() == 22);
}

TEST_CASE("verify-cover json") {
    TempFile cover("cli_vc.g6");
    CHECK(run({"build", "--family", "cgd5", "--m", "1", "--p", "11", "-o", cover.path}).code == 0);
    auto r = run({"verify-cover", cover.path, "--family", "cgd5", "--m", "1", "--p", "11",
                  "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"checks_passed\": true") != std::string::npos);
    CHECK(r.out.find("\"quotient_order\": 22") != std::string::npos);
}

TEST_CASE("catalog lists the families") {
    auto r = run({"catalog"});
    CHECK(r.code == 0);
    for (const char* name : {"cgd1", "cgd4", "cd", "k6", "g120"})
        CHECK(r.out.find(name) != std::string::npos);
}
