#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dpe/io.hpp"
#include "golden.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dpecodec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    // Runs the CLI with stdout and stderr captured to files; returns the exit code.
    int run(const std::string& args) const {
        const std::string cmd = std::string(DPECODEC_CLI) + " " + args + " >" + path("stdout.txt") + " 2>" +
                                path("stderr.txt");
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const std::string& name) const {
        std::ifstream in(path(name), std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write(const std::string& name, const nlohmann::json& j) const { dpe::write_json_file(path(name), j); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, WorkedPipeline) {
    write("a.json", dpe::matrix_to_json(golden::sec_input()));
    ASSERT_EQ(run("encode --scheme sec --q 2 --ell 3 --n 15 --in " + path("a.json") + " --out " + path("A.json")), 0);
    EXPECT_EQ(dpe::matrix_from_json(dpe::read_json_file(path("A.json"))).data(), golden::kSecEncoded);
    ASSERT_TRUE(fs::exists(path("A.json.scheme.json")));
    ASSERT_EQ(run("compute --in " + path("A.json") + " --u 1,1,1 --out " + path("c.json")), 0);
    EXPECT_EQ(dpe::vector_from_json(dpe::read_json_file(path("c.json"))).values, golden::kSecCodeword);
    ASSERT_EQ(run("inject --in " + path("c.json") + " --faults '[{\"kind\":\"manual\",\"position\":5,\"delta\":-1}]' --out " +
                  path("y.json") + " --log " + path("log.json")),
              0);
    auto y = golden::kSecCodeword;
    y[5] = 2;
    EXPECT_EQ(dpe::vector_from_json(dpe::read_json_file(path("y.json"))).values, y);
    ASSERT_EQ(run("decode --in " + path("y.json") + " --sidecar " + path("A.json.scheme.json")), 0);
    const auto out = nlohmann::json::parse(slurp("stdout.txt"));
    EXPECT_EQ(out.at("status"), "ok");
    EXPECT_EQ(out.at("prefix").get<std::vector<dpe::Int>>(),
              std::vector<dpe::Int>(golden::kSecCodeword.begin(), golden::kSecCodeword.begin() + 10));
}

TEST_F(Cli, TwoErrorPipelineAndDetection) {
    write("a.json", dpe::matrix_to_json(golden::sec_input()));
    ASSERT_EQ(run("encode --scheme dec --q 2 --ell 3 --p 31 --in " + path("a.json") + " --out " + path("A.json")), 0);
    ASSERT_EQ(run("compute --in " + path("A.json") + " --u 1,1,1 --out " + path("c.json")), 0);
    ASSERT_EQ(run("inject --in " + path("c.json") +
                  " --faults '[{\"kind\":\"manual\",\"position\":5,\"delta\":-1},"
                  "{\"kind\":\"manual\",\"position\":13,\"delta\":1}]' --out " +
                  path("y.json")),
              0);
    EXPECT_EQ(run("decode --in " + path("y.json") + " --sidecar " + path("A.json.scheme.json")), 0);

    // Three errors against the detecting variant: detected, exit code 2.
    ASSERT_EQ(run("encode --scheme dec-ted --q 2 --ell 3 --p 31 --in " + path("a.json") + " --out " + path("B.json")), 0);
    ASSERT_EQ(run("compute --in " + path("B.json") + " --u 1,1,1 --out " + path("d.json")), 0);
    ASSERT_EQ(run("inject --in " + path("d.json") +
                  " --faults '[{\"kind\":\"manual\",\"position\":0,\"delta\":1},"
                  "{\"kind\":\"manual\",\"position\":1,\"delta\":1},{\"kind\":\"manual\",\"position\":2,\"delta\":1}]' "
                  "--out " +
                  path("z.json")),
              0);
    EXPECT_EQ(run("decode --in " + path("z.json") + " --sidecar " + path("B.json.scheme.json")), 2);
    EXPECT_EQ(nlohmann::json::parse(slurp("stdout.txt")).at("status"), "e");
}

TEST_F(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run(""), 1);
    EXPECT_EQ(run("params --scheme nonsense"), 1);
    EXPECT_EQ(run("params --scheme sec --q 2 --n 8"), 1);
    EXPECT_EQ(run("params --scheme sec --q 2 --n 8 --allow-suffix-conflicts"), 0);
    write("bad.json", nlohmann::json{{"length", 2}});
    EXPECT_EQ(run("decode --in " + path("bad.json") + " --sidecar " + path("bad.json")), 1);
    EXPECT_EQ(run("inject --in " + path("missing.json")), 1);
}

TEST_F(Cli, ParamsReportsDerivedValues) {
    ASSERT_EQ(run("params --scheme sec-ded --q 8 --n 13"), 0);
    const auto j = nlohmann::json::parse(slurp("stdout.txt"));
    EXPECT_EQ(j.at("derived").at("redundancy"), 2);
    EXPECT_EQ(j.at("derived").at("locator_check"), "ok");
    EXPECT_EQ(j.at("scheme").at("locators").at("alpha").get<std::vector<dpe::Int>>(), golden::kOctalAlpha);
    ASSERT_EQ(run("params --scheme sec-ded --q 3 --n 12 --variant oddq"), 0);
    const auto odd = nlohmann::json::parse(slurp("stdout.txt"));
    EXPECT_TRUE(odd.at("derived").contains("m_modulus_2n_plus_1"));
    EXPECT_TRUE(odd.at("derived").contains("m_modulus_4n_plus_2"));
}

TEST_F(Cli, AuditExitCodes) {
    EXPECT_EQ(run("audit --scheme sec --q 2 --ell 2 --n 7"), 0);
    EXPECT_TRUE(nlohmann::json::parse(slurp("stdout.txt")).at("pass").get<bool>());
    EXPECT_EQ(run("audit --scheme sec --q 2 --ell 3 --n 31"), 2);
    EXPECT_FALSE(nlohmann::json::parse(slurp("stdout.txt")).at("notes").empty());
}

TEST_F(Cli, DeterministicOutputs) {
    write("c.json", dpe::vector_to_json(dpe::ReadVector(std::vector<dpe::Int>(30, 2)), 4));
    const std::string spec = "'[{\"kind\":\"l1_drift\",\"budget\":4},{\"kind\":\"short_column\",\"count\":2}]'";
    for (const char* tag : {"1", "2"})
        ASSERT_EQ(run("inject --in " + path("c.json") + " --faults " + spec + " --seed 77 --out " + path(std::string("y") + tag) +
                      " --log " + path(std::string("log") + tag)),
                  0);
    EXPECT_EQ(slurp("y1"), slurp("y2"));
    EXPECT_EQ(slurp("log1"), slurp("log2"));
    ASSERT_EQ(run("inject --in " + path("c.json") + " --faults " + spec + " --seed 78 --out " + path("y3")), 0);
    EXPECT_NE(slurp("y1"), slurp("y3"));
}
