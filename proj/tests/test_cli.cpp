#include "hrum/cli.hpp"

#include "hrum/dataset_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using hrum::testing::data_path;
using hrum::testing::load_example;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = hrum::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ReportFoodExample) {
    const auto r = run({"report", data_path("food.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["composing_orders"][0], "p,f,s");
    EXPECT_EQ(j["identification"]["justifications"][0]["weights"], json::array({"3/10", "1/10", "3/5"}));
    EXPECT_EQ(j["identification"]["class"], "Unique");
    EXPECT_EQ(j["degree"]["degree"], 2);
}

TEST(Cli, DetectRumExampleExitsOne) {
    const auto r = run({"detect", data_path("rum_not_harmful.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(json::parse(r.out)["composing_orders"].empty());
}

TEST(Cli, DetectAllListsWitnesses) {
    const auto first = json::parse(run({"detect", data_path("paired.json")}).out);
    EXPECT_EQ(first["count"], 2);
    EXPECT_EQ(first["witness"].size(), 1u);
    const auto all = json::parse(run({"detect", "--all", data_path("paired.json")}).out);
    EXPECT_EQ(all["composing_orders"], json::array({"w,x,y,z", "w,z,y,x"}));
    EXPECT_EQ(all["witness"].size(), 2u);
    EXPECT_EQ(all["witness"][1]["composes"], true);
}

TEST(Cli, SimulateReproducesDictatorTable) {
    const auto r = run({"simulate", "--order", "100,70,50", "--weights", "0.5,0.3,0.2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(hrum::validate(hrum::parse_dataset_json(r.out)), load_example("dictator.json"));
}

TEST(Cli, SimulateCsvAndItems) {
    const auto r = run({"simulate", "--order", "s,f,p", "--items", "p,f,s", "--weights", "1/2,1/2,0", "--format",
                        "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rho = hrum::validate(hrum::parse_dataset_csv(r.out));
    EXPECT_EQ(rho.ground().labels(), (std::vector<std::string>{"p", "f", "s"}));
}

TEST(Cli, SimulateThenReportRoundTrip) {
    const auto sim = run({"simulate", "--order", "c,a,d,b", "--weights", "1/10,2/10,3/10,4/10"});
    ASSERT_EQ(sim.code, 0);
    const auto r = run({"report", "-"}, sim.out);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["composing_orders"], json::array({"c,a,d,b"}));
    EXPECT_EQ(j["identification"]["justifications"][0]["weights"], json::array({"1/10", "1/5", "3/10", "2/5"}));
}

TEST(Cli, ReportIsByteIdenticalAcrossRuns) {
    const auto a = run({"report", data_path("paired.json")});
    const auto b = run({"report", data_path("paired.json")});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, IdentifyAndDegree) {
    const auto id = run({"identify", data_path("paired.json")});
    EXPECT_EQ(id.code, 0);
    EXPECT_EQ(json::parse(id.out)["class"], "TwoStarPaired");
    EXPECT_EQ(json::parse(id.out)["pair_rank"], 2);
    const auto deg = run({"degree", data_path("separation.json")});
    EXPECT_EQ(deg.code, 0);
    EXPECT_EQ(json::parse(deg.out)["degree"], 1);
    EXPECT_EQ(run({"degree", data_path("rum_not_harmful.json")}).code, 1);
    EXPECT_EQ(run({"identify", data_path("rum_not_harmful.json")}).code, 1);
}

TEST(Cli, ClassifySeparationExample) {
    const auto r = run({"classify", data_path("separation.json")});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["harmful"], true);
    EXPECT_EQ(j["rum"], true);
    EXPECT_EQ(j["correlation_max"], "29/20");
    EXPECT_EQ(j["single_peaked"], true);
    EXPECT_EQ(json::parse(run({"classify", "--decimals", "3", data_path("separation.json")}).out)["correlation_max"],
              "1.450");
}

TEST(Cli, ClassifySizeGuardExitsThree) {
    const auto r = run({"classify", "--max-n", "3", data_path("paired.json")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--max-n"), std::string::npos);
}

TEST(Cli, ValidateReportsRowSumWithLine) {
    const auto r = run({"validate", data_path("dictator_misprint.csv")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("dictator_misprint.csv"), std::string::npos);
    EXPECT_NE(r.err.find("line 5"), std::string::npos);
    EXPECT_NE(r.err.find("RowSumViolation"), std::string::npos);
}

TEST(Cli, ValidateGoodFile) {
    const auto r = run({"validate", data_path("food.json")});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["valid"], true);
    EXPECT_EQ(j["menus"], 7);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({"report", data_path("does_not_exist.json")}).code, 2);
    EXPECT_EQ(run({"report", "-"}, "{not json").code, 2);
    EXPECT_EQ(run({"simulate", "--order", "a,b", "--weights", "1/2"}).code, 2);
    EXPECT_EQ(run({"simulate", "--order", "a,b", "--weights", "1/2,1/3"}).code, 2);
    EXPECT_EQ(run({"report", "--tolerance", "-1", data_path("food.json")}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ToleranceFlagStampsMode) {
    const auto r = run({"detect", "--tolerance", "1e-9", data_path("food.json")});
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["mode"]["kind"], "tolerance");
    EXPECT_EQ(j["mode"]["tolerance"], "1/1000000000");
}

TEST(Cli, FormatFlagOverridesExtension) {
    const auto r = run({"validate", "--format", "csv", "-"}, "\"a,b\",a,1/4\n\"a,b\",b,3/4\n");
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
