#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cohomo/cli.hpp"

namespace cohomo::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

TEST(Cli, SolveExample)
{
    const Result r = invoke({"solve", "--psi", "s+1", "--chi", "1", "--a", "0", "--b", "1", "--grid", "-5:5:11"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], "s,g,g_plus,g_minus,residual,bound,window_lo,window_hi,residual_ok,bound_ok");
    EXPECT_EQ(rows[8].substr(0, 5), "2,-1,");
}

TEST(Cli, NegativeOptionValues)
{
    const Result r = invoke({"solve", "--psi", "s+1", "--chi", "1", "--a", "-1", "--b", "-0.5", "--grid", "-2:2:5"});
    EXPECT_EQ(r.code, kSuccess) << r.err;
}

TEST(Cli, BernoulliTable)
{
    const Result r = invoke({"bernoulli", "--r", "3"});
    ASSERT_EQ(r.code, kSuccess);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[1].substr(0, 6), "1,1,6,");
    EXPECT_EQ(rows[2].substr(0, 7), "2,1,30,");
    EXPECT_EQ(rows[3].substr(0, 7), "3,1,42,");
}

TEST(Cli, CheckMapFailure)
{
    const Result r = invoke({"check-map", "--psi", "2*s+1"});
    EXPECT_EQ(r.code, kCertificateFailure);
    const auto rows = lines(r.out);
    ASSERT_GE(rows.size(), 2u);
    EXPECT_EQ(rows[1].rfind("psi1_min_gap,", 0), 0u);
    EXPECT_EQ(rows[1].substr(rows[1].size() - 5), "false");
}

TEST(Cli, CheckMapPass)
{
    EXPECT_EQ(invoke({"check-map", "--psi", "s + 1 + 0.1*sin(s)"}).code, kSuccess);
}

TEST(Cli, ConfigErrors)
{
    EXPECT_EQ(invoke({}).code, kConfigError);
    EXPECT_EQ(invoke({"frobnicate"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--chi", "1"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--psi", "s+", "--chi", "1"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--psi", "s+1", "--chi", "x"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--psi", "s+1", "--chi", "1", "--a", "1", "--b", "0"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--psi", "s+1", "--chi", "1", "--grid", "1:0:3"}).code, kConfigError);
    EXPECT_EQ(invoke({"solve", "--psi", "s+1", "--chi", "1", "--format", "xml"}).code, kConfigError);
    EXPECT_EQ(invoke({"bernoulli", "--r", "0"}).code, kConfigError);
    EXPECT_EQ(invoke({"bounds", "--delta", "-1"}).code, kConfigError);
    EXPECT_EQ(invoke({"probe-class", "--f", "exp(s)", "--kappa"}).code, kConfigError);
}

TEST(Cli, Help)
{
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.code, kSuccess);
    EXPECT_NE(r.out.find("stabilize"), std::string::npos);
    EXPECT_EQ(invoke({"solve", "--help"}).code, kSuccess);
}

TEST(Cli, IterationCap)
{
    const std::vector<std::string> args = {"solve", "--psi", "s+1", "--chi", "1", "--grid", "-50:50:3"};
    EXPECT_EQ(invoke(args).code, kSuccess);
    std::vector<std::string> capped = args;
    capped.insert(capped.end(), {"--max-iter", "10"});
    EXPECT_EQ(invoke(capped).code, kNumericalFailure);

    ::setenv("COHOMO_MAX_ITER", "10", 1);
    EXPECT_EQ(invoke(args).code, kNumericalFailure);
    std::vector<std::string> raised = args;
    raised.insert(raised.end(), {"--max-iter", "1000"});
    EXPECT_EQ(invoke(raised).code, kSuccess);
    ::setenv("COHOMO_MAX_ITER", "ten", 1);
    EXPECT_EQ(invoke(args).code, kConfigError);
    ::unsetenv("COHOMO_MAX_ITER");
}

TEST(Cli, StabilizeCertificate)
{
    const std::vector<std::string> base = {"stabilize", "--psi", "s+1", "--chi", "1", "--y", "0.01*s",
                                           "--add-solution", "--grid", "-10:10:401"};
    std::vector<std::string> ok = base;
    ok.insert(ok.end(), {"--delta", "0.01", "--format", "json"});
    const Result pass = invoke(ok);
    ASSERT_EQ(pass.code, kSuccess) << pass.err;
    const auto doc = nlohmann::json::parse(pass.out);
    EXPECT_EQ(doc["meta"]["status"], "pass");
    EXPECT_EQ(doc["rows"].size(), 401u);

    std::vector<std::string> tight = base;
    tight.insert(tight.end(), {"--delta", "0.001", "--format", "json"});
    const Result fail = invoke(tight);
    EXPECT_EQ(fail.code, kCertificateFailure);
    EXPECT_EQ(nlohmann::json::parse(fail.out)["meta"]["status"], "admissibility_failure");
}

TEST(Cli, JsonShape)
{
    const Result r = invoke({"bounds", "--delta", "exp(-s^2/10)", "--grid", "-3:4:8", "--r", "2", "--format", "json"});
    ASSERT_EQ(r.code, kSuccess) << r.err;
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(doc.begin().key(), "meta");
    EXPECT_EQ(doc["meta"]["tool"], "cohomo");
    EXPECT_EQ(doc["meta"]["version"], kVersion);
    EXPECT_EQ(doc["meta"]["r"], 2);
    ASSERT_EQ(doc["rows"].size(), 8u);
    const auto& row = doc["rows"][0];
    EXPECT_EQ(row.begin().key(), "s");
    EXPECT_TRUE(row["apprx0"].is_null());
    EXPECT_LE(row["approx"].get<double>(), row["apprx1"].get<double>());
}

TEST(Cli, CheckSeqAndProbe)
{
    const Result seq = invoke({"check-seq", "--seq", "factorial^2", "--N", "60"});
    EXPECT_EQ(seq.code, kSuccess) << seq.err;
    EXPECT_NE(seq.out.find("denjoy_carleman_verdict,converging"), std::string::npos);
    const Result fac = invoke({"check-seq", "--seq", "factorial", "--N", "60"});
    EXPECT_NE(fac.out.find("denjoy_carleman_verdict,diverging"), std::string::npos);
    EXPECT_EQ(invoke({"check-seq", "--terms", "1,0.5,0.33,0.25,0.2"}).code, kCertificateFailure);

    EXPECT_EQ(invoke({"probe-class", "--f", "exp(s)", "--K", "0:1"}).code, kSuccess);
    EXPECT_EQ(invoke({"probe-class", "--kappa", "--seq", "factorial^2", "--max-order", "10"}).code, kSuccess);
}

TEST(Cli, OutFileAndDeterminism)
{
    const auto path = std::filesystem::temp_directory_path() / "cohomo_cli_test.csv";
    const std::vector<std::string> args = {"solve", "--psi", "s + 1 + 0.1*sin(s)", "--chi", "cos(s)", "--out",
                                           path.string()};
    ASSERT_EQ(invoke(args).code, kSuccess);
    std::ifstream in(path);
    const std::string first((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(lines(first).size(), 402u);
    ASSERT_EQ(invoke(args).code, kSuccess);
    std::ifstream again(path);
    const std::string second((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    EXPECT_EQ(first, second);
    std::filesystem::remove(path);
}

} // namespace
} // namespace cohomo::cli
