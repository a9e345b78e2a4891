// End-to-end checks of the command-line front end against the golden
// corpus: byte-identical reports, stable exit codes, command round-trips.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef QTORIC_CLI_PATH
#error "QTORIC_CLI_PATH must be defined by the build"
#endif
#ifndef QTORIC_GOLDEN_DIR
#error "QTORIC_GOLDEN_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string command = std::string(QTORIC_CLI_PATH) + " " + args;
    std::string out;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        out.append(buf, got);
    const int rc = pclose(pipe);
    return RunResult{WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string golden(const std::string& rel)
{
    return std::string(QTORIC_GOLDEN_DIR) + "/" + rel;
}

const std::vector<std::pair<std::string, std::string>> kCorpus = {
    {"cp1", "not_commutative"},       {"cp2", "not_commutative"},
    {"cp3", "commutative"},           {"cp4", "not_commutative"},
    {"cp5", "not_commutative"},       {"delta1_delta3", "not_commutative"},
    {"blockdiag_b_b", "commutative"}, {"bkn_k1_n2", "not_commutative"},
    {"bkn_k1_n3", "not_commutative"}, {"bkn_k2_n2", "commutative"},
    {"bkn_k2_n3", "commutative"},     {"bkn_k3_n2", "not_commutative"},
    {"bkn_k3_n3", "not_commutative"}, {"bkn_k4_n2", "commutative"},
    {"bkn_k4_n3", "commutative"},
};

}  // namespace

TEST_CASE("decide reproduces every golden report byte for byte")
{
    for (const auto& [name, verdict] : kCorpus) {
        CAPTURE(name);
        const RunResult r = run("decide --matrix " + golden("inputs/" + name + ".json"));
        CHECK(r.status == 0);
        CHECK(r.out == slurp(golden("expected/" + name + ".decide.json")));
        CHECK(r.out.find("\"verdict\": \"" + verdict + "\"") != std::string::npos);
    }
}

TEST_CASE("reports are byte-identical across repeated runs")
{
    const std::string args = "decide --matrix " + golden("inputs/bkn_k3_n3.json");
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("family-gen output feeds decide and cohomology")
{
    const RunResult gen = run("family-gen --k 2 --n 2");
    REQUIRE(gen.status == 0);
    // Round-trip through a temp file.
    const std::string tmp = "cli_roundtrip_matrix.json";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << gen.out;
    }
    const RunResult decided = run("decide --matrix " + tmp);
    CHECK(decided.status == 0);
    CHECK(decided.out.find("\"verdict\": \"commutative\"") != std::string::npos);
    const RunResult cohom = run("cohomology --matrix " + tmp + " --ranks");
    CHECK(cohom.status == 0);
    CHECK(cohom.out.find("\"relations\"") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("normalize output re-parses as a standard form for sq2")
{
    const RunResult norm = run("normalize --matrix " + golden("inputs/bkn_k1_n2.json"));
    REQUIRE(norm.status == 0);
    CHECK(norm.out.find("\"standard_form\"") != std::string::npos);

    // Feed the emitted standard form straight back into sq2.
    const auto pos = norm.out.find("\"standard_form\": ");
    REQUIRE(pos != std::string::npos);
    // Extract the object by brace counting.
    size_t start = norm.out.find('{', pos);
    size_t depth = 0, end = start;
    for (size_t i = start; i < norm.out.size(); ++i) {
        if (norm.out[i] == '{')
            ++depth;
        if (norm.out[i] == '}' && --depth == 0) {
            end = i;
            break;
        }
    }
    std::string form = norm.out.substr(start, end - start + 1);
    for (auto& c : form)
        if (c == '\n')
            c = ' ';
    const RunResult sq2 = run("sq2 --standard-form '" + form + "'");
    CHECK(sq2.status == 0);
    CHECK(sq2.out.find("\"all_zero\": false") != std::string::npos);
}

TEST_CASE("exit codes follow the contract")
{
    SUBCASE("verdict content does not affect the status")
    {
        CHECK(run("decide --matrix " + golden("inputs/cp4.json")).status == 0);
        CHECK(run("decide --matrix " + golden("inputs/cp3.json")).status == 0);
    }
    SUBCASE("malformed JSON is status 2")
    {
        CHECK(run("decide --matrix '{broken'").status == 2);
        CHECK(run("decide --matrix no_such_file.json").status == 2);
    }
    SUBCASE("unknown flags are rejected with status 2")
    {
        CHECK(run("decide --frobnicate 1").status == 2);
    }
    SUBCASE("invalid matrix is status 3 with the failing simplex reported")
    {
        const std::string bad =
            R"('{"n":3,"m":4,"entries":[[1,0,0,1],[0,1,0,1],[0,0,1,0]],)"
            R"("polytope":{"type":"simplex_product","factors":[3]}}')";
        const RunResult r = run("validate --matrix " + bad);
        CHECK(r.status == 3);
        CHECK(r.out.find("\"valid\": false") != std::string::npos);
        CHECK(r.out.find("\"first_failing_simplex\"") != std::string::npos);
        CHECK(run("decide --matrix " + bad).status == 3);
    }
}

TEST_CASE("rank command on an inline presentation")
{
    const std::string pres =
        R"('{"n":1,"relations":[{"mod2":false,"n":1,"terms":[{"exp":[4],"coef":"1"}]}]}')";
    const RunResult r = run("rank --presentation " + pres + " --degree 6");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"rank\": 1") != std::string::npos);
    const RunResult table = run("rank --presentation " + pres);
    CHECK(table.status == 0);
    CHECK(table.out.find("\"total_through_top\": 4") != std::string::npos);
}

TEST_CASE("family-iso and family-invariants stay stable")
{
    const RunResult iso = run("family-iso --k 3 --l 3 --n 2");
    CHECK(iso.status == 0);
    CHECK(iso.out.find("\"isomorphic\": true") != std::string::npos);
    const RunResult not_iso = run("family-iso --k 2 --l 4 --n 3");
    CHECK(not_iso.status == 0);
    CHECK(not_iso.out.find("\"isomorphic\": false") != std::string::npos);
    CHECK(not_iso.out.find("exact_equations_force_c_zero\": true") != std::string::npos);

    const RunResult inv = run("family-invariants --k 1 --n 2 --bound 2");
    CHECK(inv.status == 0);
    CHECK(inv.out.find("\"rank\": 1") != std::string::npos);
    CHECK(inv.out.find("\"method\": \"proof_shaped\"") != std::string::npos);
}
