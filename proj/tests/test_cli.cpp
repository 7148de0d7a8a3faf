#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pcr/matrix_io.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = std::string(PCR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" +
                       name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

const std::string kHamming = "0001111\n0110011\n1010101\n";

}  // namespace

TEST_CASE("pw reports the Hamming pseudoweights") {
    auto path = write_temp("cli_hamming74.txt", kHamming);
    auto res = run("pw --in " + path + " --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.output);
    CHECK(doc["n"] == 7);
    CHECK(doc["num_rays"] == 42);
    CHECK(doc["d"] == 3);
    CHECK(doc["channels"]["awgnc"]["wmin"] == "3");
    CHECK(doc["channels"]["bec"]["wmin"] == "3");
    CHECK(doc["channels"]["bsc"]["wmin"] == "2");
    CHECK(doc["channels"]["maxfrac"]["wmin"] == "2");

    auto csv = run("pw --in " + path + " --format csv");
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.output.find("awgnc,3,") != std::string::npos);
}

TEST_CASE("pw accepts alist input") {
    // the same Hamming matrix in alist form round-trips through the library
    auto m = pcr::read_matrix_file(write_temp("cli_h2.txt", kHamming));
    auto alist_path = write_temp("cli_hamming74.alist", pcr::write_alist(m));
    CHECK(pcr::read_matrix_file(alist_path) == m);

    auto res = run("pw --in " + alist_path + " --format json");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.output)["channels"]["awgnc"]["wmin"] == "3");
}

TEST_CASE("classify matches the library results") {
    auto path = write_temp("cli_hamming74.txt", kHamming);
    auto res = run("classify --in " + path + " --channel bsc --format json");
    REQUIRE(res.exit_code == 0);
    json doc = json::parse(res.output);
    REQUIRE(doc.is_array());
    CHECK(doc[0]["rho"] == 4);
    CHECK(doc[0]["class"] == 1);
    CHECK(doc[0]["attaining_count"] == 1);

    // all four channels by default
    auto all = run("classify --in " + path + " --format csv");
    REQUIRE(all.exit_code == 0);
    CHECK(std::count(all.output.begin(), all.output.end(), '\n') == 5);
}

TEST_CASE("survey prints counts and rows") {
    auto res = run("survey --nmax 6 --channel bsc --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("n,k,count") == 0);
    CHECK(res.output.find("6,2,3") != std::string::npos);  // three [6,2] codes
    CHECK(res.output.find("n,k,d,channel,rho,class,witness") != std::string::npos);
}

TEST_CASE("cyclic-scan emits the flagged [21,11,6] row") {
    auto res = run("cyclic-scan --nmax 21 --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.find("n,h,k,w,connected,mu2,bound,d,flagged") == 0);
    CHECK(res.output.find(",11,5,1,4.000000000,6.000000000,6,1") != std::string::npos);
}

TEST_CASE("output is byte-identical across thread counts") {
    auto one = run("cyclic-scan --nmax 25 --threads 1 --format csv");
    auto many = run("cyclic-scan --nmax 25 --threads 8 --format csv");
    REQUIRE(one.exit_code == 0);
    REQUIRE(many.exit_code == 0);
    CHECK(one.output == many.output);

    auto s1 = run("survey --nmax 6 --channel awgnc --threads 1 --format json");
    auto s8 = run("survey --nmax 6 --channel awgnc --threads 8 --format json");
    CHECK(s1.output == s8.output);
}

TEST_CASE("--out writes the report to a file") {
    auto path = write_temp("cli_hamming74.txt", kHamming);
    std::string out = write_temp("cli_report.json", "");
    auto res = run("pw --in " + path + " --format json --out " + out);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.empty());
    std::ifstream f(out);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(json::parse(buf.str())["channels"]["awgnc"]["wmin"] == "3");
}

TEST_CASE("exit codes") {
    // 2: parse error with file, line and column
    auto bad_path = write_temp("cli_bad.alist", "7 3\nx y\n");
    auto bad = run("pw --in " + bad_path);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find(bad_path + ":2:1") != std::string::npos);

    // 3: budget exceeded
    auto path = write_temp("cli_hamming74.txt", kHamming);
    auto capped = run("classify --in " + path + " --channel bsc --rho-cap 3");
    CHECK(capped.exit_code == 3);

    // unreadable input counts as a parse error at 1:1
    CHECK(run("pw --in /nonexistent/matrix.txt").exit_code == 2);
    // 1: everything else (bad flags)
    CHECK(run("pw --no-such-flag").exit_code == 1);
    CHECK(run("lemma-checks --fixtures 5 --seed 3").exit_code == 0);
}
