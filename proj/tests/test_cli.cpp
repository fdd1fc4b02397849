#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult locring(const std::string& args) {
    const std::string cmd = std::string(LOCRING_CLI) + " " + args + " 2>&1";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("locring_cli_" + name);
}

}  // namespace

TEST(Cli, EmbedBinary) {
    const CliResult r = locring(R"(embed --field F2 --poly "x^2+x+1" --power 2)");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "U = x^2+1\n"));
    EXPECT_TRUE(contains(r.out, "certificate: ok"));
}

TEST(Cli, EmbedRational) {
    const CliResult r = locring(R"(embed --field Q --poly "x^2-2" --power 2)");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "Q_1 = -(1/4)*x\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "certificate: ok"));
}

TEST(Cli, EmbedInseparableIsAnInputError) {
    const CliResult r = locring(R"cmd(embed --field "F2(t)" --poly "x^2+t" --power 2)cmd");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.out, "NotSeparable"));
}

TEST(Cli, Digits) {
    const std::string base = R"(digits --field F2 --poly "x^2+x+1" --power 2 --element )";
    EXPECT_EQ(locring(base + "x").out, "[x, 1]\n");
    EXPECT_EQ(locring(base + "0").out, "[0, 0]\n");
    EXPECT_EQ(locring(base + "\"x^2+x+1\"").out, "[0, 1]\n");
}

TEST(Cli, LiftTrueVerdict) {
    const CliResult r = locring(R"(lift --field F3 --p1 "x^2+1" --p2 "x^2+x+2" --power 3)");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "Q_f = x+2\n"));
    EXPECT_TRUE(contains(r.out, "verdict: true\n"));
}

TEST(Cli, LiftFrobeniusHasKernelWitness) {
    const CliResult r = locring(R"(lift --field F2 --p1 "x^3+x+1" --p2 "x^3+x+1" --q "x^2" --power 2)");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "S_f = x^3+x+1\n"));
    EXPECT_TRUE(contains(r.out, "verdict: false\n"));
    EXPECT_TRUE(contains(r.out, "kernel witness: x^3+x+1\n"));
}

TEST(Cli, LiftDegreeMismatch) {
    const CliResult r = locring(R"(lift --field F3 --p1 "x^2+1" --p2 "x^3+2*x+1" --power 2)");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(contains(r.out, "DegreeMismatch"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(locring("").status, 2);
    EXPECT_EQ(locring("frobnicate").status, 2);
    EXPECT_EQ(locring(R"(embed --field G5 --poly "x" --power 1)").status, 2);
    EXPECT_EQ(locring(R"(embed --field F5 --poly "x^2+" --power 1)").status, 2);
}

TEST(Cli, FindIso) {
    const CliResult r = locring(R"(find-iso --field F3 --p1 "x^2+1" --p2 "x^2+x+2" --power 2)");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "certified"));
}

TEST(Cli, JsonRoundTripsThroughCheck) {
    const CliResult r = locring(R"(lift --field F3 --p1 "x^2+1" --p2 "x^2+x+2" --power 2 --json)");
    ASSERT_EQ(r.status, 0) << r.out;
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["verdict"], true);
    EXPECT_EQ(report["morphism"]["q_image"], "x+2");

    const auto path = temp_file("lift.json");
    std::ofstream(path) << r.out;
    const CliResult c = locring("check --morphism " + path.string());
    EXPECT_EQ(c.status, 0) << c.out;
    EXPECT_TRUE(contains(c.out, "kernel dimension: 0")) << c.out;
    std::filesystem::remove(path);
}

TEST(Cli, CheckReportsBrokenMorphisms) {
    const auto ill = temp_file("ill.json");
    std::ofstream(ill) << R"({"source":{"p":"x^2+1","n":1,"field":"F3"},"target":{"p":"x^2+x+2","n":1,"field":"F3"},)"
                       << R"("sigma":"id","q_image":"x"})";
    EXPECT_EQ(locring("check --morphism " + ill.string()).status, 1);

    // X -> P does not respect the source modulus of F4 -> F2[x]/(x^2+x+1)^2
    const auto law = temp_file("law.json");
    std::ofstream(law) << R"({"source":{"p":"x^2+x+1","n":1,"field":"F2"},"target":{"p":"x^2+x+1","n":2,"field":"F2"},)"
                       << R"("sigma":"id","q_image":"x^2+x+1"})";
    const CliResult r = locring("check --morphism " + law.string());
    EXPECT_EQ(r.status, 1) << r.out;
    EXPECT_TRUE(contains(r.out, "not well defined")) << r.out;

    EXPECT_EQ(locring("check --morphism /nonexistent/file.json").status, 2);
    std::filesystem::remove(ill);
    std::filesystem::remove(law);
}

TEST(Cli, SurveyRowsAreConsistent) {
    const CliResult r = locring("survey --field F3 --max-degree 2 --max-power 3");
    EXPECT_EQ(r.status, 0) << r.out;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "field,sigma,p1,p2,degree,n,q_f,s_f,verdict,kernel_dim");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        ASSERT_EQ(cols.size(), 10u) << line;
        EXPECT_EQ(cols[8] == "true", cols[9] == "0") << line;
    }
    // 3*3 linear pairs and 3*3 quadratic pairs, three powers each
    EXPECT_EQ(rows, 54);
}

TEST(Cli, SurveyFrobeniusRowsOnlyWithSigma) {
    const CliResult plain = locring("survey --field F2 --max-degree 3 --max-power 2");
    const CliResult frob = locring("survey --field F2 --max-degree 3 --max-power 2 --sigma frob");
    EXPECT_EQ(plain.status, 0);
    EXPECT_EQ(frob.status, 0) << frob.out;
    EXPECT_FALSE(contains(plain.out, ",false,"));
    EXPECT_TRUE(contains(frob.out, "x^3+x+1,x^3+x+1,3,2,x^2,x^3+x+1,false,")) << frob.out;
}

TEST(Cli, DemoInseparable) {
    const CliResult r = locring("demo-inseparable");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "P' = 0\n"));
}

TEST(Cli, Deterministic) {
    for (const char* args : {"survey --field F2 --max-degree 3 --max-power 3 --all",
                             R"(lift --field F3 --p1 "x^2+1" --p2 "x^2+x+2" --power 3 --json)",
                             R"(embed --field Q --poly "x^3-x-1" --power 3)"}) {
        EXPECT_EQ(locring(args).out, locring(args).out) << args;
    }
}
