#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using virg::cli::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "virg");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = virg::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("virg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        unsetenv("VIRG_OUT_DIR");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string config(const json& j, const std::string& name = "config.json") {
        const auto path = dir_ / name;
        std::ofstream(path) << j.dump();
        return path.string();
    }

    fs::path dir_;
};

json rank2_induce() {
    return {{"group", {{"rank", 2}}}, {"b", {0, 1}}, {"window", {{"L", 1}, {"N", 1}, {"top_radius", 2}}}};
}

} // namespace

TEST_F(CliTest, BracketRendersCanonicalForm) {
    const auto r = run({"bracket", "--config", config({{"group", {{"rank", 2}}}}), "--x", "[1,0]", "--y", "[0,1]"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = json::parse(r.out);
    EXPECT_EQ(report["result"]["value"], "(g2-g1)*d[1,1]");
    EXPECT_EQ(report["schema_version"], virg::cli::kSchemaVersion);
    EXPECT_EQ(report["command"], "bracket");
}

TEST_F(CliTest, BracketOfGeneralElements) {
    const json c = {{"group", {{"rank", 1}}}, {"bracket", {{"a", "d[1]"}, {"b", "d[-1]+C"}}}};
    const auto r = run({"bracket", "--config", config(c)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["result"]["value"], "-2*g1*d[0]+(-1/12*g1+1/12*g1^3)*C");
}

TEST_F(CliTest, InduceCsvHasTopRowOfOnes) {
    const auto r = run({"induce", "--config", config(rank2_induce()), "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "level,x1,dim,stable");
    int level0 = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("0,", 0) == 0) {
            ++level0;
            EXPECT_NE(line.find(",1,true"), std::string::npos) << line;
        }
    }
    EXPECT_EQ(level0, 5);
}

TEST_F(CliTest, InduceJsonReportsSupportAndStrings) {
    const auto r = run({"induce", "--config", config(rank2_induce())});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto res = json::parse(r.out)["result"];
    EXPECT_EQ(res["support"], "pattern_A");
    EXPECT_EQ(res["strings"]["g0_1"], "bounded");
    EXPECT_EQ(res["strings"]["b"], "truncated_above");
    EXPECT_TRUE(res["level_bound_holds"].get<bool>());
}

TEST_F(CliTest, VermaDims) {
    const auto r = run({"verma", "--window-L", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto res = json::parse(r.out)["result"];
    EXPECT_EQ(res["dims"], json({1, 1, 2, 3, 5}));
    EXPECT_EQ(res["singular"][0]["raising_condition"], "-2*h");
}

TEST_F(CliTest, VermaWithValuesReportsIrreducibleDims) {
    const json c = {{"bindings", {{"c", "1/2"}, {"h", 0}}}, {"window", {{"L", 6}}}};
    const auto r = run({"verma", "--config", config(c), "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("level,dim,irreducible_dim,stable"), std::string::npos);
    EXPECT_NE(r.out.find("6,11,3,true"), std::string::npos);
}

TEST_F(CliTest, ValidateListsEveryProblem) {
    const json bad = {{"group", {{"rank", 2}, {"generators", {"g1", ""}}}},
                      {"b", {2, 0}},
                      {"window", {{"L", 0}}},
                      {"bindings", {{"alpha", "gamma"}}}};
    const auto r = run({"validate", "--config", config(bad), "--for", "induce"});
    EXPECT_EQ(r.code, virg::cli::validation);
    const auto diags = json::parse(r.out)["diagnostics"].dump();
    EXPECT_NE(diags.find("b not primitive"), std::string::npos);
    EXPECT_NE(diags.find("missing generator name"), std::string::npos);
    EXPECT_NE(diags.find("unbound symbol 'gamma'"), std::string::npos);
    EXPECT_NE(diags.find("L=0 with induce"), std::string::npos);
}

TEST_F(CliTest, HalfBetaIsValidAndIrreducible) {
    const json c = {{"group", {{"rank", 2}}}, {"bindings", {{"alpha", "g1"}, {"beta", "1/2"}}}};
    const auto v = run({"validate", "--config", config(c), "--for", "interseries"});
    EXPECT_EQ(v.code, 0) << v.out;
    const auto r = run({"interseries", "--config", config(c)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(json::parse(r.out)["result"]["reducible"].get<bool>());
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({"frobnicate"}).code, virg::cli::usage);
    EXPECT_EQ(run({}).code, virg::cli::usage);
    EXPECT_EQ(run({"verma", "--format", "xml"}).code, virg::cli::usage);
    EXPECT_EQ(run({"bracket", "--format", "csv", "--x", "[1]", "--y", "[2]"}).code, virg::cli::usage);
    EXPECT_EQ(run({"induce", "--config", (dir_ / "missing.json").string()}).code, virg::cli::validation);
    EXPECT_EQ(run({"verma", "--config", config({{"group", {{"rank", 2}}}})}).code, virg::cli::validation);

    json contradictory = {{"classify",
                           {{"descriptor",
                             {{"group", {{"rank", 2}}},
                              {"flags", {{"is_Z", true}}},
                              {"rows", {{"0", {1, 0}, 1}, {"0", {2, 0}, 1}, {"0", {3, 0}, 1}}}}}}}};
    const auto r = run({"classify", "--config", config(contradictory)});
    EXPECT_EQ(r.code, virg::cli::computation);
    EXPECT_NE(r.err.find("contradictory"), std::string::npos);
}

TEST_F(CliTest, OutputIsDeterministicModuloTiming) {
    const auto path = config(rank2_induce());
    auto a = json::parse(run({"induce", "--config", path, "--seed", "5"}).out);
    auto b = json::parse(run({"induce", "--config", path, "--seed", "5"}).out);
    a.erase("timing_ms");
    b.erase("timing_ms");
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["config"]["seed"], 5);
}

TEST_F(CliTest, WritesToOutputDirectory) {
    const auto out = dir_ / "out";
    const auto r = run({"verma", "--window-L", "3", "--format", "csv", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(out / "verma.csv"));

    const auto env_dir = dir_ / "env";
    setenv("VIRG_OUT_DIR", env_dir.c_str(), 1);
    const auto e = run({"verma", "--window-L", "3"});
    unsetenv("VIRG_OUT_DIR");
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_TRUE(fs::exists(env_dir / "verma.json"));
}

TEST_F(CliTest, ClassifyConsumesEmittedDescriptors) {
    json c = rank2_induce();
    c["window"]["L"] = 2;
    const auto induce = run({"induce", "--config", config(c)});
    ASSERT_EQ(induce.code, 0) << induce.err;
    const json descriptor = json::parse(induce.out)["result"]["descriptor"];
    const auto r = run({"classify", "--config", config({{"classify", {{"descriptor", descriptor}}}}, "d.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto res = json::parse(r.out)["result"];
    EXPECT_EQ(res["case"], "induced_type");
    EXPECT_EQ(res["detected_b"], json({0, 1}));

    json built = {{"group", {{"rank", 2}}}, {"classify", {{"build", "interseries"}}}};
    const auto i = run({"classify", "--config", config(built, "b.json")});
    ASSERT_EQ(i.code, 0) << i.err;
    EXPECT_EQ(json::parse(i.out)["result"]["case"], "intermediate_series");
}
