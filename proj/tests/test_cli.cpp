#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <singular_lab/cli.hpp>
#include <singular_lab/serialize.hpp>
#include <singular_lab/singular_lab.hpp>

#include "fixtures.hpp"

using namespace singular_lab;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
    const Result r = invoke(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

} // namespace

TEST(Cli, CountByM)
{
    const json j = invoke_json({"count", "--k", "3", "--i", "1", "--n", "4", "--by-m"});
    EXPECT_EQ(j["by_m"], (json{{"0", 5}, {"1", 3}, {"-1", 2}}));
    EXPECT_EQ(j["total"], 10);
    const json r = invoke_json({"count", "--k", "3", "--i", "1", "--n", "4", "--by-m", "--restricted"});
    EXPECT_EQ(r["by_m"], j["by_m"]);
}

TEST(Cli, PsiOnLambdaStarFixture)
{
    const json j = invoke_json({"map", "psi", "--k", "5", "--i", "2", "--m", "3", "--input",
                                fixture_path("lambda_star.json")});
    EXPECT_EQ(j["frobenius"], load_fixture("mu.json"));
    EXPECT_EQ(j["weight"], 469 - 5 * 3 - 2 * 3);
    const Partition library = psi_forward(codec::decode_dotted(load_fixture("lambda_star.json")));
    EXPECT_EQ(j["partition"], codec::encode(library));
}

TEST(Cli, AndrewsRoundTripOnFixtures)
{
    const json pi = invoke_json({"map", "andrews", "--k", "5", "--i", "2", "--input",
                                 fixture_path("lambda_star.json")});
    EXPECT_EQ(pi, load_fixture("pi.json"));
    const json back = invoke_json({"map", "andrews-inverse", "--k", "5", "--i", "2", "--input",
                                   fixture_path("pi.json")});
    EXPECT_EQ(back, load_fixture("lambda_star.json"));
    const json inv = invoke_json({"map", "psi-inverse", "--k", "5", "--i", "2", "--m", "3", "--input",
                                  fixture_path("mu.json")});
    EXPECT_EQ(inv, load_fixture("lambda_star.json"));
}

TEST(Cli, TraceMatchesLibrary)
{
    const json j = invoke_json({"trace", "--k", "5", "--i", "2", "--input", fixture_path("lambda_star.json")});
    EXPECT_EQ(j, codec::encode(gamma_trace(codec::decode_dotted(load_fixture("lambda_star.json")))));
    EXPECT_EQ(j["gammas"][0], (json{{"top", {1, 0}}, {"bottom", {2, 0}}}));
}

TEST(Cli, ConvertBothWays)
{
    const json a = invoke_json({"convert", "--input", "[7,5,5,3,2,2,1]"});
    EXPECT_EQ(a["frobenius"], (json{{"top", {6, 3, 2}}, {"bottom", {6, 4, 1}}}));
    EXPECT_EQ(a["rank"], 0);
    const json b = invoke_json({"convert", "--input", R"({"top":[1,0],"bottom":[2,0]})"});
    EXPECT_EQ(b["partition"], (json{2, 2, 1}));
    EXPECT_EQ(b["conjugate"], (json{3, 2}));
}

TEST(Cli, BlocksAndSingularity)
{
    const std::string input =
        R"({"top":[31,28,27,25,22,18,16,14,13,9,8,7,6,4,1,0],"bottom":[30,28,25,24,20,19,16,15,12,11,8,7,4,3,2,0],)"
        R"("top_overline":3,"bottom_overline":6})";
    const json j = invoke_json({"blocks", "--k", "5", "--i", "2", "--configurations", "--input", input});
    EXPECT_EQ(j["pattern"], "EPNPN");
    EXPECT_EQ(j["configuration_count"], 8);
    EXPECT_EQ(j["singular"], true);
    EXPECT_EQ(j["dotted"]["dots"], (json{{"start", "second"}, {"end_block", 2}}));
    EXPECT_EQ(j["configurations"].size(), 8u);
}

TEST(Cli, MapsMatchLibrary)
{
    EXPECT_EQ(invoke_json({"map", "dyson", "--r", "-1", "--input", "[2,2,1]"})["partition"], (json{1, 1, 1}));
    EXPECT_EQ(invoke_json({"map", "dyson-inverse", "--r", "-1", "--input", "[1,1,1]"})["partition"], (json{2, 2, 1}));
    EXPECT_EQ(invoke_json({"map", "shifted-conjugate", "--u", "2", "--input", R"({"top":[6,4],"bottom":[4,3]})"}),
              (json{{"top", {2, 1}}, {"bottom", {8, 6}}}));
    EXPECT_EQ(invoke_json({"map", "shift", "--u", "0", "--input", "[3,1]"}), (json{{"top", {2}}, {"bottom", {1}}}));
    const json w = invoke_json(
        {"map", "wright", "--k", "5", "--i", "2", "--input", R"({"mu1":[37,27,22,7],"mu2":[18,13]})"});
    EXPECT_EQ(w, (json{{"kappa", {30, 25, 25, 15, 10, 10}}, {"m", 2}}));
    const json wi = invoke_json({"map", "wright-inverse", "--k", "5", "--i", "2", "--m", "3", "--input",
                                 "[5,5,5,5,5,5]"});
    EXPECT_EQ(wi["mu1"], (json{17, 12, 7, 2}));
    EXPECT_EQ(wi["mu2"], (json{13}));
}

TEST(Cli, SeriesAndVerify)
{
    const json s = invoke_json({"series", "--k", "3", "--i", "1", "-T", "4"});
    EXPECT_EQ(s["coefficients"], (json{1, 2, 4, 6, 10}));
    const json v = invoke_json({"verify", "--k", "3", "--i", "1", "--max-n", "12", "--format", "json"});
    EXPECT_EQ(v["verdicts"]["all"], true);
    EXPECT_EQ(v, codec::encode(verify_identities(ModulusPair(3, 1), 12)));
}

TEST(Cli, TableFormat)
{
    const Result r = invoke({"count", "--k", "3", "--i", "1", "--n", "4", "--format", "table"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Qbar(4) = 10"), std::string::npos);
    const Result t = invoke({"verify", "--k", "3", "--i", "1", "--max-n", "5", "--format", "table"});
    EXPECT_EQ(t.code, 0);
    EXPECT_FALSE(t.out.empty());
}

TEST(Cli, InvalidInputExitsTwo)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"count", "--k", "2", "--i", "1", "--n", "4"},
             {"count", "--k", "5", "--i", "5", "--n", "4"},
             {"bogus"},
             {},
             {"convert", "--input", "[1,2]"},
             {"convert", "--input", "[1,"},
             {"convert", "--input", "/nonexistent/file.json"},
             {"map", "psi", "--k", "5", "--i", "3", "--input", fixture_path("lambda_star.json")},
             {"map", "psi-inverse", "--k", "5", "--i", "2", "--m", "0", "--input", "[9]"},
             {"count", "--k", "4", "--i", "2", "--n", "3", "--restricted"},
             {"series", "--k", "3", "--i", "1", "-T", "-1"},
         }) {
        const Result r = invoke(args);
        EXPECT_EQ(r.code, cli::exit_invalid) << (args.empty() ? "" : args.front());
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::vector<std::string>> commands{
        {"verify", "--k", "4", "--i", "1", "--max-n", "10", "--threads", "3"},
        {"blocks", "--k", "5", "--i", "2", "--configurations", "--input", fixture_path("lambda_star.json")},
        {"trace", "--k", "5", "--i", "2", "--format", "table", "--input", fixture_path("lambda_star.json")},
        {"count", "--k", "5", "--i", "3", "--n", "15", "--by-m"},
    };
    for (const auto &args : commands) {
        const Result a = invoke(args);
        const Result b = invoke(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
    const Result one = invoke({"verify", "--k", "4", "--i", "1", "--max-n", "10", "--threads", "1"});
    const Result three = invoke(commands.front());
    EXPECT_EQ(one.out, three.out);
}
