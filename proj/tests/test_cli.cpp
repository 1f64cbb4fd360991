// Drives the jband-sim executable end to end: exit codes, eval output, and
// the files written by `run`.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
};

Result sim(const std::string& args) {
    const std::string cmd = std::string(JBAND_SIM_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliRun : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("jband_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& text) {
        const fs::path p = dir_ / "run.cfg";
        std::ofstream(p) << text;
        return p;
    }

    fs::path dir_;
};

TEST(CliEval, PrintsOneNumber) {
    EXPECT_EQ(sim("eval spano c=15 b=0.5 t_k=2").out, "16.5522837397\n");
    EXPECT_EQ(sim("eval geometric N=2 M=1").out, "0.69314718056\n");
    EXPECT_EQ(sim("eval concurrence zeta=2 N=4").out, "0.166666666667\n");
    EXPECT_EQ(sim("eval resonance c=5").out, "62.8318530718\n");
    EXPECT_EQ(sim("eval e_b e1=1 e2=2 T=0.5").out, "2.20710678119\n");
}

TEST(CliEval, ExitCodes) {
    EXPECT_EQ(sim("eval spano c=15 b=0.5 t_k=2").code, 0);
    EXPECT_EQ(sim("eval nosuch x=1").code, 1);
    EXPECT_EQ(sim("eval spano c=15 b=0.5").code, 1);
    EXPECT_EQ(sim("eval spano c=15 b=0.5 t_k=2 q=1").code, 1);
    EXPECT_EQ(sim("eval spano c=15 b=abc t_k=2").code, 1);
    EXPECT_EQ(sim("eval spano c=15 b=0 t_k=2").code, 2);
    EXPECT_EQ(sim("eval bessel n=1 x=-1").code, 2);
    EXPECT_EQ(sim("frobnicate").code, 1);
}

TEST(CliList, NamesEveryExperiment) {
    const Result r = sim("list");
    EXPECT_EQ(r.code, 0);
    for (const char* name : {"fig1a", "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c", "fig3", "fig4", "fig5",
                             "custom"}) {
        EXPECT_NE(r.out.find(std::string(name) + ":"), std::string::npos) << name;
    }
    EXPECT_NE(r.out.find("fig1a: N=200,100,50 a=0 b=0 c=30"), std::string::npos);
}

TEST_F(CliRun, WritesCsvAndSvg) {
    const fs::path cfg = write_config("experiment = fig1a\nsweep_stop = 2\n");
    const Result r = sim("run --config " + cfg.string() + " --out " + dir_.string() + " --svg");
    ASSERT_EQ(r.code, 0);
    const std::string csv = slurp(dir_ / "fig1a.csv");
    EXPECT_EQ(csv.rfind("t,S_N200,S_N100,S_N50,Savg_N200,Savg_N100,Savg_N50\n0,0,0,0,0,0,0\n", 0), 0u);
    const std::string svg = slurp(dir_ / "fig1a.svg");
    std::size_t polylines = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++polylines;
    EXPECT_EQ(polylines, 6u);
}

TEST_F(CliRun, ByteIdenticalReruns) {
    const fs::path cfg = write_config("experiment = fig1a\nout = first.csv\n");
    ASSERT_EQ(sim("run --config " + cfg.string() + " --out " + dir_.string()).code, 0);
    const fs::path cfg2 = write_config("experiment = fig1a\nout = second.csv\n");
    ASSERT_EQ(sim("run --config " + cfg2.string() + " --out " + dir_.string()).code, 0);
    EXPECT_EQ(slurp(dir_ / "first.csv"), slurp(dir_ / "second.csv"));
}

TEST_F(CliRun, ErrorExitCodesLeaveNoOutput) {
    EXPECT_EQ(sim("run --config " + write_config("experiment = fig1a\nbogus = 1\n").string() + " --out " +
                  dir_.string())
                  .code,
              1);
    EXPECT_EQ(sim("run --config " + write_config("experiment = fig1a\nc = 0\n").string() + " --out " + dir_.string())
                  .code,
              2);
    EXPECT_EQ(sim("run --config " + (dir_ / "missing.cfg").string()).code, 3);
    EXPECT_EQ(sim("run --config " + write_config("experiment = fig4\n").string() + " --out " +
                  (dir_ / "no" / "such" / "dir").string())
                  .code,
              3);
    EXPECT_FALSE(fs::exists(dir_ / "fig1a.csv"));
}

}  // namespace
