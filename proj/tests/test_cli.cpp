#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "disckit/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = disckit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(DISCKIT_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in) << name;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json payload(const Outcome& o) { return nlohmann::json::parse(o.out).at("payload"); }

}  // namespace

TEST(Cli, ResultantExamples) {
    EXPECT_EQ(run({"resultant", "--f", "t^2+b*t+c", "--g", "2*t+b", "--ring", "ZZ[b,c]", "--var", "t"}).out,
              "-b^2 + 4*c\n");
    const Outcome o = run({"resultant", "--f", "t-2", "--g", "t-5", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(payload(o)["resultant"], "-3");
    EXPECT_EQ(payload(o)["m"], 1);
    const Outcome padded = run({"resultant", "--f", "t-2", "--g", "t-5", "--deg-f", "2", "--format", "json"});
    EXPECT_EQ(payload(padded)["resultant"], "3");
    EXPECT_EQ(payload(padded)["m"], 2);
}

TEST(Cli, ParseErrorShowsCaret) {
    const Outcome o = run({"resultant", "--f", "t^2+*t", "--g", "t"});
    EXPECT_EQ(o.code, disckit::cli::kParseError);
    EXPECT_NE(o.err.find("  t^2+*t\n      ^"), std::string::npos) << o.err;
    const Outcome j = run({"resultant", "--f", "t^2+*t", "--g", "t", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["status"], "error");
    EXPECT_EQ(doc["payload"]["kind"], "parse");
    EXPECT_EQ(doc["payload"]["column"], 5);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, disckit::cli::kParseError);
    EXPECT_EQ(run({"bogus"}).code, disckit::cli::kParseError);
    EXPECT_EQ(run({"resultant", "--f", "t"}).code, disckit::cli::kParseError);
    EXPECT_EQ(run({"resultant", "--f", "t", "--g", "t", "--format", "xml"}).code, disckit::cli::kParseError);
    EXPECT_EQ(run({"resultant", "--f", "t", "--g", "t", "--ring", "Fp(4)"}).code, disckit::cli::kRingError);
    EXPECT_EQ(run({"dims", "--N", "1", "--d", "2", "--k", "1", "--table"}).code, disckit::cli::kRingError);
    EXPECT_EQ(run({"verify", "--d", "6", "--l", "1", "--q", "31"}).code, disckit::cli::kBudgetError);
    EXPECT_EQ(run({"etale", "--p", "2*t+1"}).code, disckit::cli::kRingError);
    EXPECT_EQ(run({"--help"}).code, disckit::cli::kOk);
}

TEST(Cli, Discriminant) {
    const Outcome a = run({"discriminant", "--p", "t^2+t+1", "--ring", "ZZ", "--format", "json"});
    EXPECT_EQ(payload(a)["discriminant"], "3");
    EXPECT_EQ(payload(a)["class"], "neither");
    EXPECT_EQ(run({"discriminant", "--p", "t^2-2*t+1", "--ring", "QQ"}).out,
              "discriminant: 0\nclass: inseparable\n");
    EXPECT_EQ(run({"discriminant", "--p", "t^3+p*t+q", "--ring", "ZZ[p,q]"}).out,
              "discriminant: 4*p^3 + 27*q^2\nclass: neither\n");
    const Outcome nm = run({"discriminant", "--p", "u*t^2+t", "--ring", "QQ[u]", "--format", "json"});
    EXPECT_TRUE(payload(nm)["class"].is_null());
}

TEST(Cli, DiscIdeal) {
    EXPECT_EQ(run({"disc-ideal", "--d", "2", "--l", "1"}).out, "-u1^2 + 4*u0\n");
    const Outcome o = run({"disc-ideal", "--d", "3", "--l", "2", "--format", "json"});
    ASSERT_EQ(payload(o)["generators"].size(), 2u);
    EXPECT_EQ(payload(o)["generators"][1], "-12*u2^2 + 36*u1");
    EXPECT_EQ(run({"disc-ideal", "--d", "2", "--l", "1", "--homogeneous", "--format", "json"}).out,
              golden("disc_ideal_homogeneous_d2.json"));
}

TEST(Cli, EtaleStrataGolden) {
    EXPECT_EQ(run({"etale", "--p", "u*t^2+t", "--ring", "QQ[u]", "--strata", "--format", "json"}).out,
              golden("etale_strata_ut2_t.json"));
    const Outcome m = run({"etale", "--p", "t^2+t+1", "--ring", "ZZ"});
    EXPECT_EQ(m.out, "verdict: mixed\ndiscriminant: 3\n");
    EXPECT_EQ(run({"etale", "--p", "t^2", "--ring", "QQ"}).out, "verdict: ramified\ndiscriminant: 0\n");
}

TEST(Cli, Dims) {
    const Outcome a = run({"dims", "--N", "1", "--d", "3", "--k", "1", "--j", "1", "--i", "0", "--format", "json"});
    EXPECT_EQ(payload(a)["h_ext_jet"], "6");
    const Outcome t = run({"dims", "--N", "1", "--d", "4", "--k", "1", "--table", "--format", "json"});
    const auto rows = payload(t)["rows"];
    std::vector<std::string> dims;
    for (const auto& r : rows) dims.push_back(r["module_dim"]);
    EXPECT_EQ(dims, (std::vector<std::string>{"1", "4", "5"}));
    const Outcome bad = run({"dims", "--N", "1", "--d", "2", "--k", "1", "--table"});
    EXPECT_NE(bad.err.find("d-k-N-1 >= 0"), std::string::npos);
}

TEST(Cli, Verify) {
    const Outcome a = run({"verify", "--d", "2", "--l", "1", "--q", "5", "--format", "json"});
    EXPECT_EQ(payload(a)["ideal_zero_count"], 5);
    EXPECT_EQ(payload(a)["mult_root_count"], 5);
    EXPECT_TRUE(payload(a)["soundness_mismatches"].empty());
    EXPECT_TRUE(payload(a)["completeness_mismatches"].empty());
    const Outcome b = run({"verify", "--d", "3", "--l", "2", "--q", "5"});
    EXPECT_NE(b.out.find("ideal_zero_count: 5\nmult_root_count: 5\n"), std::string::npos);
    EXPECT_EQ(run({"verify", "--d", "4", "--l", "1", "--q", "31"}).code, 0);
}

TEST(Cli, OutputIndependentOfThreadCount) {
    const std::vector<std::string> args{"verify", "--d", "4", "--l", "2", "--q", "11", "--format", "json"};
    setenv("DISCKIT_THREADS", "1", 1);
    const std::string one = run(args).out;
    setenv("DISCKIT_THREADS", "4", 1);
    const std::string four = run(args).out;
    setenv("DISCKIT_THREADS", "zero", 1);
    EXPECT_EQ(run(args).code, disckit::cli::kRingError);
    unsetenv("DISCKIT_THREADS");
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, run(args).out);
}
