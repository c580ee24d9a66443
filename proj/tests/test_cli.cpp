#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(WEYLSHEAF_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const std::string& args) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    return nlohmann::json::parse(r.out);
}

} // namespace

TEST(Cli, CountTotals) {
    const auto r = run("enumerate F4 --count");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("F4: total 37"), std::string::npos) << r.out;
    EXPECT_EQ(json_of("count E8 --format json")["total"], 166);
    EXPECT_EQ(json_of("count E8+E8 --format json")["total"], 27556);
}

TEST(Cli, RelativeGroupOfE7OverD4) {
    const auto j = json_of("relative E7 --levi 2,3,4,5 --format json");
    EXPECT_EQ(j["relative"], "C3");
    EXPECT_EQ(j["levi"], "D4");
    ASSERT_EQ(j["generators"].size(), 3u);
    EXPECT_EQ(j["generators"][0]["h"], 1);
    EXPECT_EQ(j["generators"][2]["h"], 7);
    std::vector<int> orders;
    for (const auto& o : j["orders"]) orders.push_back(o["order"].get<int>());
    EXPECT_EQ(orders, (std::vector<int>{3, 2, 4}));
    const auto text = run("relative E7 --levi 2,3,4,5 --normalizer");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("C3"), std::string::npos);
}

TEST(Cli, CuspidalLabels) {
    const auto j = json_of("cuspidal E8 --format json");
    EXPECT_EQ(j["count"], 13);
    EXPECT_EQ(j["labels"].size(), 13u);
    EXPECT_EQ(json_of("cuspidal A5 --format json")["count"], 0);
}

TEST(Cli, EnumerateFormats) {
    const auto j = json_of("enumerate G2 --format json");
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 10u);
    EXPECT_EQ(j[0]["ambient"], "G2");
    const auto csv = run("enumerate B2 --format csv");
    EXPECT_EQ(csv.code, 0);
    std::istringstream in(csv.out);
    std::string line;
    int rows = 0;
    std::getline(in, line);
    EXPECT_EQ(line, "ambient,J,levi,zeta,relative,epsilon");
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 6);
    EXPECT_NE(csv.out.find("B2,1 2,B2,-1,1,1"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("enumerate X9").code, 1);
    EXPECT_EQ(run("relative F4 --levi 9").code, 1);
    EXPECT_EQ(run("mset Q8").code, 1);
    EXPECT_EQ(run("nosuchcommand").code, 1);
    EXPECT_EQ(run("--bound 10 mset S5").code, 2);
    EXPECT_EQ(run("--table-bound 5 mset S5").code, 2);
    EXPECT_EQ(run("mset S4").code, 0);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "weylsheaf_cli_out.json";
    std::filesystem::remove(path);
    const auto r = run("--out " + path.string() + " cuspidal G2 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    ASSERT_TRUE(f.good());
    const auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["count"], 4);
    std::filesystem::remove(path);
}

TEST(Cli, EnumerationIsDeterministic) {
    const auto a = run("enumerate E8 --format json");
    const auto b = run("enumerate E8 --format json");
    EXPECT_EQ(a.code, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out).size(), 166u);
}

TEST(Cli, VerifyPasses) {
    const auto r = run("verify --max-rank 6");
    EXPECT_EQ(r.code, 0) << r.out;
}
