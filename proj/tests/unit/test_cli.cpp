/*
   Copyright 2026 The cyclo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cyclo_cli/app.hpp"
#include "cyclo_cli/report.hpp"
#include "cyclo_cli/spec_file.hpp"
#include "cyclo_cli/sweep.hpp"
#include "fixtures.hpp"

namespace {

using namespace cyclo;
using namespace cyclo::cli;

const std::string kData = CYCLO_TEST_DATA;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cyclo_run(std::vector<std::string> args) {
    args.insert(args.begin(), "cyclo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("cyclo_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string input_error(const std::string& text) {
    try {
        parse_curve_spec(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

TEST(SpecFile, DecodesWorkedCurves) {
    const auto q = read_curve_spec(kData + "/quartic.json");
    EXPECT_EQ(q.curve->degree(), 2);
    EXPECT_EQ(q.curve->f(), fixture::quartic()->f());
    const auto a = read_curve_spec(kData + "/as_f3.json");
    EXPECT_EQ(a.curve->r(), fixture::as_f3()->r());
    EXPECT_EQ(a.echo.dump(), R"({"type":"artin-schreier","p":3,"branch":[{"rho":1,"l":1},{"rho":2,"l":1}],"f":[1,0,1]})");
}

TEST(SpecFile, ExtensionFieldElements) {
    const auto s = parse_curve_spec(
        R"({"type":"kummer","p":5,"ext_modulus":[2,0,1],"n":3,"branch":[{"rho":[0,1],"l":1},{"rho":[1,0],"l":2}]})");
    EXPECT_EQ(s.curve->field()->order(), 25u);
    EXPECT_EQ(s.curve->branch()[0].rho.coordinates(), (std::vector<std::int64_t>{0, 1}));
}

TEST(SpecFile, ErrorsArePositional) {
    EXPECT_EQ(input_error("{"), input_error("{"));
    EXPECT_EQ(input_error("{").rfind("malformed JSON", 0), 0u);
    EXPECT_EQ(input_error("[]"), "at /: expected object, found array");
    EXPECT_EQ(input_error(R"({"p":5})"), "at /: missing required key \"type\"");
    EXPECT_EQ(input_error(R"({"type":"elliptic","p":5})"),
              "at /type: expected \"kummer\" or \"artin-schreier\", found \"elliptic\"");
    EXPECT_EQ(input_error(R"({"type":"kummer","p":"5","n":2,"branch":[]})"), "at /p: expected integer, found string");
    EXPECT_EQ(input_error(R"({"type":"kummer","p":5,"n":2,"branch":[{"rho":7,"l":1}]})"),
              "at /branch/0/rho: coefficient 7 outside [0, 5)");
    EXPECT_EQ(input_error(R"({"type":"kummer","p":5,"n":2,"branch":[{"rho":1,"l":1},{"rho":[1,2],"l":1}]})"),
              "at /branch/1/rho: expected 1 coordinates, found 2");
    EXPECT_EQ(input_error(R"({"type":"artin-schreier","p":3,"branch":[{"rho":1,"l":1}],"f":[1,"a"]})"),
              "at /f/1: expected field element (integer or list of integers), found string");
    EXPECT_EQ(input_error(R"({"type":"kummer","p":6,"n":2,"branch":[]})").rfind("at /p: ", 0), 0u);
}

TEST(SpecFile, UnknownKeysRejected) {
    EXPECT_EQ(input_error(R"({"type":"kummer","p":5,"n":2,"branch":[],"f":[1]})"), "at /: unknown key \"f\"");
    EXPECT_EQ(input_error(R"({"type":"artin-schreier","p":3,"n":2,"branch":[],"f":[1]})"),
              "at /: unknown key \"n\"");
    EXPECT_EQ(input_error(R"({"type":"kummer","p":5,"n":2,"branch":[{"rho":1,"l":1,"mult":1}]})"),
              "at /branch/0: unknown key \"mult\"");
}

TEST(SpecFile, HypothesisViolationsAreInputErrors) {
    const auto msg = input_error(R"({"type":"kummer","p":5,"n":3,"branch":[{"rho":1,"l":1},{"rho":2,"l":1}]})");
    EXPECT_EQ(msg.rfind("curve violates hypotheses:", 0), 0u);
    EXPECT_NE(msg.find("[l_not_multiple_of_n]"), std::string::npos);
    EXPECT_NE(msg.find("[n_not_dividing_q_minus_1]"), std::string::npos);
}

TEST(ExitCodes, Contract) {
    EXPECT_EQ(cyclo_run({"verify", kData + "/quartic.json"}).code, kExitPass);
    EXPECT_EQ(cyclo_run({"verify", kData + "/as_f3.json"}).code, kExitPass);
    const auto paper = cyclo_run({"verify", kData + "/as_f3.json", "--mu-range", "paper"});
    EXPECT_EQ(paper.code, kExitCheckFailure);
    EXPECT_NE(paper.out.find("dimension           fail"), std::string::npos) << paper.out;
    const auto sign = cyclo_run({"verify", kData + "/quartic.json", "--sign", "paper"});
    EXPECT_EQ(sign.code, kExitCheckFailure);
    EXPECT_NE(sign.out.find("cocycle:a[1,1]      fail"), std::string::npos) << sign.out;

    const auto bad = write_temp("bad.json", "{ not json");
    const auto r = cyclo_run({"info", bad});
    EXPECT_EQ(r.code, kExitInputError);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(cyclo_run({"info", kData + "/does_not_exist.json"}).code, kExitInputError);
    EXPECT_EQ(cyclo_run({"verify", kData + "/quartic.json", "--mu-range", "wide"}).code, kExitInputError);
    EXPECT_EQ(cyclo_run({"frobnicate"}).code, kExitInputError);
    EXPECT_EQ(cyclo_run({}).code, kExitInputError);
    EXPECT_EQ(cyclo_run({"--help"}).code, kExitPass);
}

TEST(Info, ArtinSchreierPinnedRow) {
    const auto r = cyclo_run({"info", kData + "/as_p7.json", "--json"});
    ASSERT_EQ(r.code, kExitPass);
    const auto doc = Json::parse(r.out);
    const auto& row = doc["curve"]["mu_table"][1];
    EXPECT_EQ(row["mu"], 1);
    EXPECT_EQ(row["m"], Json::array({2}));
    const auto q = Json::parse(cyclo_run({"info", kData + "/quartic.json", "--json"}).out);
    EXPECT_EQ(q["curve"]["genus"], 1);
    EXPECT_EQ(q["curve"]["mu_table"][0]["t"], 2);
}

TEST(Basis, RenderingAndPolicies) {
    const auto w = cyclo_run({"basis", kData + "/quartic.json", "omega"});
    EXPECT_EQ(w.out, "omega[1,1] = (1/(4 + x^4))*y * dx\n");
    const auto ext = Json::parse(cyclo_run({"basis", kData + "/as_f3.json", "h1", "--json"}).out);
    const auto pap = Json::parse(cyclo_run({"basis", kData + "/as_f3.json", "h1", "--json", "--mu-range", "paper"}).out);
    EXPECT_EQ(ext["bases"]["h1"].size(), 2u);
    EXPECT_EQ(pap["bases"]["h1"].size(), 1u);
    EXPECT_EQ(cyclo_run({"basis", kData + "/quartic.json", "everything"}).code, kExitInputError);
}

TEST(Report, KeyOrder) {
    const auto doc = Json::parse(cyclo_run({"verify", kData + "/as_f3.json", "--json"}).out);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"curve", "bases", "pairing_matrix", "checks", "policy", "all_pass"}));
    EXPECT_EQ(doc["policy"].dump(), R"({"mu_range":"extended","sign_convention":"negated-infty"})");
    EXPECT_EQ(doc["pairing_matrix"].dump(), "[[1,0],[0,1]]");
    std::vector<std::string> check_keys;
    for (auto it = doc["checks"][0].begin(); it != doc["checks"][0].end(); ++it) check_keys.push_back(it.key());
    EXPECT_EQ(check_keys, (std::vector<std::string>{"name", "status", "details", "data"}));
}

struct Golden {
    std::vector<std::string> args;
    std::string file;
    int code;
};

TEST(Report, GoldenFiles) {
    const std::vector<Golden> cases = {
        {{"verify", kData + "/quartic.json", "--json"}, "quartic.verify.json", kExitPass},
        {{"verify", kData + "/as_f3.json", "--json"}, "as_f3.verify.json", kExitPass},
        {{"verify", kData + "/as_f3.json", "--json", "--mu-range", "paper"}, "as_f3.paper.verify.json", kExitCheckFailure},
        {{"verify", kData + "/quartic.json"}, "quartic.verify.txt", kExitPass},
        {{"info", kData + "/as_p7.json"}, "as_p7.info.txt", kExitPass},
        {{"basis", kData + "/quartic.json", "all"}, "quartic.basis.txt", kExitPass},
    };
    for (const auto& c : cases) {
        const auto r = cyclo_run(c.args);
        EXPECT_EQ(r.code, c.code) << c.file;
        EXPECT_EQ(r.out, slurp(kData + "/golden/" + c.file)) << c.file;
    }
}

TEST(Report, Deterministic) {
    for (const auto* name : {"/quartic.json", "/as_f3.json"}) {
        const auto a = cyclo_run({"verify", kData + name, "--json"});
        const auto b = cyclo_run({"verify", kData + name, "--json"});
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Sweep, EnumerationIsDeterministic) {
    SweepParams sp;
    sp.count_cap = 40;
    const auto a = enumerate_specs(sp);
    const auto b = enumerate_specs(sp);
    ASSERT_EQ(a.size(), 40u);
    EXPECT_EQ(a, b);
    sp.seed = 2;
    EXPECT_NE(enumerate_specs(sp), a);
    for (const auto& doc : a) EXPECT_NO_THROW(decode_curve_spec(doc));
}

TEST(Sweep, JobsDoNotChangeTheSummary) {
    const auto one = cyclo_run({"sweep", "--family", "artin-schreier", "--count-cap", "30", "--json"});
    const auto four = cyclo_run({"sweep", "--family", "artin-schreier", "--count-cap", "30", "--json", "--jobs", "4"});
    EXPECT_EQ(one.code, kExitPass);
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(Json::parse(one.out)["curves"], 30);
}

// Every failing spec in a sweep summary reproduces its failure through verify.
TEST(Sweep, FailuresRoundTrip) {
    const auto r = cyclo_run({"sweep", "--family", "artin-schreier", "--mu-range", "paper", "--count-cap", "12", "--json"});
    EXPECT_EQ(r.code, kExitCheckFailure);
    const auto summary = Json::parse(r.out);
    ASSERT_GT(summary["failed"].get<int>(), 0);
    EXPECT_EQ(summary["failing_check_counts"].dump(), R"({"dimension":)" + summary["failed"].dump() + "}");
    for (const auto& f : summary["failures"]) {
        const auto path = write_temp("roundtrip.json", f["spec"].dump());
        const auto v = cyclo_run({"verify", path, "--mu-range", "paper", "--json"});
        EXPECT_EQ(v.code, kExitCheckFailure);
        const auto report = Json::parse(v.out);
        std::vector<std::string> failing;
        for (const auto& c : report["checks"]) {
            if (c["status"] != "pass") failing.push_back(c["name"]);
        }
        EXPECT_EQ(Json(failing), f["failing_checks"]);
    }
}

}  // namespace
