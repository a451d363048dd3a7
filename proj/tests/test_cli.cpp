#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string command = std::string(BHT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("charpoly subcommand emits JSON coefficient strings") {
    auto r = run_cli("charpoly -t -1,-1 -s +1");
    CHECK(r.status == 0);
    CHECK(r.output == "[\"2\",\"2\",\"1\"]\n");

    r = run_cli("charpoly -t 0");
    CHECK(r.status == 0);
    CHECK(r.output == "[\"0\",\"1\"]\n");

    r = run_cli("charpoly -t -1,-1,-1,-1 -s +1");
    CHECK(r.status == 0);
    CHECK(r.output == "[\"8\",\"12\",\"9\",\"4\",\"1\"]\n");

    r = run_cli("charpoly -t -1,-1,-1,-1 --route coeffs");
    CHECK(r.output == "[\"8\",\"12\",\"9\",\"4\",\"1\"]\n");
    r = run_cli("charpoly -t -1,-1,-1,-1 --route hessenberg");
    CHECK(r.output == "[\"8\",\"12\",\"9\",\"4\",\"1\"]\n");
}

TEST_CASE("charpoly rejects malformed entry lists") {
    CHECK(run_cli("charpoly -t 1,bogus").status != 0);
    CHECK(run_cli("charpoly -t 1,2 -s 3").status != 0);
    CHECK(run_cli("charpoly").status != 0);
}

TEST_CASE("maxheight CSV stream") {
    auto r = run_cli("maxheight --nmax 10");
    CHECK(r.status == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "n,tau,mu");
    CHECK(lines[1] == "1,1,1");
    CHECK(lines[2] == "2,2,1");
    CHECK(lines[5] == "5,28,1");
    CHECK(lines[10] == "10,2528,3");
}

TEST_CASE("sequences CSV") {
    auto r = run_cli("sequences --kind ratios --nmax 3");
    CHECK(r.status == 0);
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "n,ratio");
    CHECK(lines[2].substr(0, 6) == "2,0.91");  // log(5/2)

    r = run_cli("sequences --kind fibword --nmax 5");
    lines = lines_of(r.output);
    REQUIRE(lines.size() == 7);
    CHECK(lines[1] == "0,0");
    CHECK(lines[3] == "2,1");
    CHECK(lines[6] == "5,0");

    r = run_cli("sequences --kind mu --nmax 10");
    lines = lines_of(r.output);
    CHECK(lines[0] == "n,mu,mu_formula");
    CHECK(lines[1] == "3,1,1");
    CHECK(lines[8] == "10,3,3");

    CHECK(run_cli("sequences --kind bogus --nmax 5").status != 0);
}

TEST_CASE("compositions subcommand") {
    auto r = run_cli("compositions -n 5");
    CHECK(r.status == 0);
    CHECK(r.output == "t1^5 + 4*t1^3*t2 + 3*t1^2*t3 + 3*t1*t2^2 + 2*t1*t4 + 2*t2*t3 + t5\n");

    r = run_cli("compositions -n 3 --list");
    auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "t1^3 + 2*t1*t2 + t3");
    CHECK(lines[1] == "1+1+1");
    CHECK(lines[2] == "1+2");
    CHECK(lines[3] == "2+1");
    CHECK(lines[4] == "3");
}

TEST_CASE("spectra subcommand writes image and grid files") {
    auto base = temp_path("bht_cli_spectra_n2");
    auto r = run_cli("spectra -n 2 --width 65 --height 65 -o " + base.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("in_window=18") != std::string::npos);
    CHECK(std::filesystem::exists(base.string() + ".pgm"));
    CHECK(std::filesystem::exists(base.string() + ".csv"));

    // 9 members of degree 2: 18 hits in the all-containing default window
    std::ifstream csv(base.string() + ".csv");
    long long total = 0;
    std::string line;
    while (std::getline(csv, line)) {
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) total += std::stoll(cell);
    }
    CHECK(total == 18);

    for (const char* ext : {".pgm", ".png", ".csv"})
        std::filesystem::remove(base.string() + ext);

    CHECK(run_cli("spectra -n 15 -o " + base.string()).status != 0);
}

TEST_CASE("verify quick level reports and exits cleanly") {
    auto json_path = temp_path("bht_cli_verify.json");
    auto r = run_cli("verify --level quick --json " + json_path.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("[PASS]") != std::string::npos);
    CHECK(r.output.find("[FAIL]") == std::string::npos);

    std::ifstream json(json_path);
    std::stringstream content;
    content << json.rdbuf();
    CHECK(content.str().find("\"passed\": true") != std::string::npos);
    std::filesystem::remove(json_path);

    CHECK(run_cli("verify --level bogus").status != 0);
}
