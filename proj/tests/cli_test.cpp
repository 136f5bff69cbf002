#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using motivec::cli::run_args;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& text)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST(Cli, QuadricPoincare)
{
    auto r = run_args({"--space", "quadric:3", "--theory", "chow", "--mode", "poincare"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1 1 1 2 1 1 1\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DefaultsAreChowMotive)
{
    auto r = run_args({"--space", "P:2"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "L^0 + L^1 + L^2\n");
}

TEST(Cli, PointK0Groups)
{
    auto r = run_args({"--space", "point", "--theory", "k0", "--mode", "groups"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("rank 1"), std::string::npos);

    auto j = json::parse(run_args({"--space", "point", "--theory", "k0", "--mode", "groups", "--format", "json"}).out);
    EXPECT_EQ(j["groups"], json::parse(R"({"0":1})"));
}

TEST(Cli, GrassmannianGroupsJson)
{
    auto r = run_args({"--space", "Gr:2,4", "--theory", "chow", "--mode", "groups", "--format", "json"});
    ASSERT_EQ(r.exit_code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["groups"], json::parse(R"({"0":1,"1":1,"2":2,"3":1,"4":1})"));
    EXPECT_EQ(j["dim"], 4);
    EXPECT_EQ(j["theory"], "chow");
    EXPECT_EQ(j["space"], "Gr:2,4");
    EXPECT_EQ(j["twists"], json::parse("[0,1,2,2,3,4]"));
    EXPECT_EQ(j["poincare"], json::parse("[1,1,2,1,1]"));
    EXPECT_FALSE(j.contains("duality_ok"));
}

TEST(Cli, JsonIsKeySortedAndDeterministic)
{
    const std::vector<std::string> args{"--space", "quadric:2", "--mode", "dual", "--format", "json"};
    auto a = run_args(args), b = run_args(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("\"dim\""), 1u);
    auto j = json::parse(a.out);
    EXPECT_EQ(j["duality_ok"], true);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_LT(a.out.find("\"dim\""), a.out.find("\"duality_ok\""));
    EXPECT_LT(a.out.find("\"duality_ok\""), a.out.find("\"groups\""));
}

TEST(Cli, DualText)
{
    auto r = run_args({"--space", "P:3", "--mode", "dual"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("duality: ok"), std::string::npos);
}

TEST(Cli, UniversalTruncationSources)
{
    auto a = run_args({"--space", "P:2", "--theory", "universal:3", "--mode", "groups", "--format", "json"});
    auto b = run_args({"--space", "P:2", "--theory", "universal", "--truncation", "3", "--mode", "groups", "--format",
                       "json"});
    auto c = run_args({"--space", "P:2", "--theory", "universal", "--mode", "groups", "--format", "json"}, "3");
    ASSERT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(json::parse(a.out)["theory"], "universal:3");
    EXPECT_EQ(json::parse(a.out)["groups"]["0"], 4);
}

TEST(Cli, UsageErrorsExitOne)
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--space", "P:x"},
             {"--space", "Gr:3,2"},
             {"--space", "torus"},
             {"--theory", "mgl"},
             {"--theory", "universal"},
             {"--theory", "chow", "--truncation", "2"},
             {"--theory", "universal:3", "--truncation", "4"},
             {"--mode", "bogus"},
             {"--file", "/nonexistent/space.txt"},
         }) {
        auto r = run_args(args);
        EXPECT_EQ(r.exit_code, 1) << args[0] << " " << args[1];
        EXPECT_TRUE(r.out.empty());
        EXPECT_FALSE(r.err.empty());
    }
    EXPECT_EQ(run_args({"--theory", "universal"}, "abc").exit_code, 1);
}

TEST(Cli, DslFile)
{
    auto path = write_temp("motivec_cli_test.space",
                           "space line { cell { base = point; rank = 1; codim = 0 }\n"
                           "             cell { base = point; rank = 0; codim = 1 } }\n"
                           "space q { cell { base = line; rank = 1; codim = 0 } cell { base = line; rank = 0; codim = 1 } }\n");
    auto r = run_args({"--file", path, "--space", "q", "--mode", "poincare"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "1 2 1\n");
    auto line = run_args({"--file", path, "--space", "line"});
    EXPECT_EQ(line.out, "L^0 + L^1\n");
    auto last = run_args({"--file", path, "--mode", "poincare"});
    EXPECT_EQ(last.out, "1 2 1\n");
    EXPECT_EQ(run_args({"--file", path, "--space", "nope"}).exit_code, 1);
}

TEST(Cli, DslErrorReportsPosition)
{
    auto path = write_temp("motivec_cli_bad.space", "space s {\n  cell { base = point; rank = -1; codim = 0 }\n}\n");
    auto r = run_args({"--file", path});
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find(":2:31:"), std::string::npos) << r.err;
}

TEST(Cli, CheckMode)
{
    auto r = run_args({"--mode", "check"});
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    auto j = json::parse(run_args({"--mode", "check", "--format", "json"}).out);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_GT(j["total"].get<int>(), 40);
}

TEST(Cli, Help)
{
    auto r = run_args({"--help"});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("--space"), std::string::npos);
}
