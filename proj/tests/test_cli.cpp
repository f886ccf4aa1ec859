#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run spm(const std::string& args) {
    static int counter = 0;
    auto path = std::filesystem::temp_directory_path() / ("spm-cli-" + std::to_string(++counter) + ".out");
    std::string cmd = std::string(SPM_CLI) + " " + args + " > " + path.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) v.push_back(nlohmann::json::parse(line));
    return v;
}

const std::string kData = std::string("--dataset ") + SPM_DATASET;

}  // namespace

TEST_CASE("sums poisson") {
    Run r = spm("sums poisson --rmax 30");
    CHECK(r.code == 0);
    int blocks = 0;
    for (const auto& j : lines(r.out)) {
        CHECK(j["pass"].get<bool>());
        if (j["case"].get<std::string>().rfind("poisson-r", 0) == 0) ++blocks;
    }
    CHECK(blocks == 30);
}

TEST_CASE("sieve verify") {
    Run r = spm("sieve verify --classical --trials 1000 --seed 7");
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() >= 1000);
}

TEST_CASE("moment sixth") {
    Run r = spm("moment sixth " + kData + " --grid 10,15,20,25,30");
    CHECK(r.code == 0);
    bool fitted = false;
    for (const auto& j : lines(r.out))
        if (j["measured"].contains("fitted_exponent") && j["measured"]["fitted_exponent"].is_number()) fitted = true;
    CHECK(fitted);
}

TEST_CASE("second moment agrees with the sixth for the d3 model") {
    Run r = spm("moment second " + kData + " --grid 10,20");
    CHECK(r.code == 0);
    int cross = 0;
    for (const auto& j : lines(r.out))
        if (j["case"].get<std::string>().find("second-vs-sixth") != std::string::npos) {
            ++cross;
            CHECK(j["pass"].get<bool>());
        }
    CHECK(cross == 2);
}

TEST_CASE("reports are reproducible") {
    Run a = spm("sieve verify --classical --trials 50 --seed 3");
    Run b = spm("sieve verify --classical --trials 50 --seed 3");
    Run c = spm("sieve verify --classical --trials 50 --seed 4");
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("output options") {
    Run csv = spm("sums kloosterman --cmax 5 --csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("suite,case_id,inputs,measured,bound,pass,gating", 0) == 0);
    auto path = std::filesystem::temp_directory_path() / "spm-cli-report.jsonl";
    Run to_file = spm("sums ramanujan --rmax 20 --out " + path.string());
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(!lines(ss.str()).empty());
}

TEST_CASE("exit codes") {
    CHECK(spm("frobnicate").code == 2);
    CHECK(spm("sums nothing").code == 2);
    CHECK(spm("sums poisson --rmax").code == 2);
    CHECK(spm("sums poisson --tol-scale 2").code == 2);
    CHECK(spm("coeffs load --dataset /nonexistent/maass.jsonl").code == 3);
    CHECK(spm("sums poisson --rmax 12 --out /nonexistent/dir/report.jsonl").code == 3);
    // tightening every bound a billionfold turns rounding into failures
    CHECK(spm("sums poisson --rmax 12 --tol-scale 1e-9").code == 1);
}
