#include "shared.hpp"

#include <wcp/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace wcp;
using testing_support::fixture_path;

namespace {

json load(const std::string& file) {
    std::ifstream in(fixture_path(file));
    return json::parse(in);
}

std::string parse_error_pointer(const json& j) {
    try {
        parse_workspace(j);
    } catch (const ParseError& e) {
        return e.pointer();
    }
    return "<no error>";
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wcp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json minimal() {
    return json::parse(R"js({
        "field": "GF(3)",
        "objects": {"V": 2},
        "monoids": {"A": {"unit": [[1], [0]], "mul": [[1, 0, 0, 1], [0, 1, 1, 0]]}},
        "morphisms": {"f": {"dom": ["V"], "cod": ["A"], "matrix": [[1, 0], [0, "1/2"]]}}
    })js");
}

} // namespace

TEST(Json, FixturesRoundTrip) {
    for (const char* f : {"flip_triple.json", "flip_triple_gf3.json", "quantum_triple.json", "mined_wdl_triple.json",
                          "skew_group.json", "dp_cocycle.json", "corrupted.json", "wreath.json", "idempotent.json"}) {
        json j = load(f);
        EXPECT_EQ(to_json(parse_workspace(j)), j) << f;
    }
}

TEST(Json, ScalarsAndFields) {
    Workspace ws = parse_workspace(minimal());
    EXPECT_EQ(ws.morphisms.at("f").mat(1, 1).to_string(), "2");
    EXPECT_EQ(ws.field.describe(), "GF(3)");
    Workspace q = parse_workspace(minimal(), Field::rationals());
    EXPECT_EQ(q.morphisms.at("f").mat(1, 1).to_string(), "1/2");
    json numeric = minimal();
    numeric["field"] = 5;
    EXPECT_EQ(parse_workspace(numeric).field.describe(), "GF(5)");
}

TEST(Json, ErrorPointers) {
    json j = minimal();
    j["morphisms"]["f"]["matrix"][1][0] = "y";
    EXPECT_EQ(parse_error_pointer(j), "/morphisms/f/matrix/1/0");

    j = minimal();
    j["morphisms"]["f"]["matrix"][1] = json::array({1});
    EXPECT_EQ(parse_error_pointer(j), "/morphisms/f/matrix/1");

    j = minimal();
    j["morphisms"]["f"]["dom"] = json::array({"W"});
    EXPECT_EQ(parse_error_pointer(j), "/morphisms/f/dom/0");

    j = minimal();
    j["field"] = "GF(4)";
    EXPECT_EQ(parse_error_pointer(j), "/field");

    j = minimal();
    j["extra"] = json::object();
    EXPECT_EQ(parse_error_pointer(j), "/extra");

    j = minimal();
    j["morphisms"]["A"] = j["morphisms"]["f"];
    EXPECT_EQ(parse_error_pointer(j), "/morphisms/A");

    j = minimal();
    j["morphisms"]["a/b"] = j["morphisms"]["f"];
    j["morphisms"]["a/b"]["cod"] = json::array({"Z"});
    EXPECT_EQ(parse_error_pointer(j), "/morphisms/a~1b/cod/0");

    j = minimal();
    j["quadruples"]["q"] = {{"algebra", "A"}, {"v", {"V"}}, {"psi", "f"}, {"sigma", "f"}};
    EXPECT_EQ(parse_error_pointer(j), "/quadruples/q");

    j = minimal();
    j["laws"]["l"] = {{"a", "A"}, {"b", "B"}, {"lambda", "f"}};
    EXPECT_EQ(parse_error_pointer(j), "/laws/l/b");

    j = minimal();
    j.erase("field");
    EXPECT_EQ(parse_error_pointer(j), "/field");
}

TEST(Json, ReportIsSorted) {
    Report r;
    r.flag("cocy2-wcp", true);
    r.flag("wmeas-wcp", true);
    json j = report_to_json(r);
    ASSERT_TRUE(j.contains("checks"));
    EXPECT_EQ(j["checks"][0]["label"], "wmeas-wcp");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli({"check-quadruple", fixture_path("skew_group.json")}).code, 0);
    CliResult bad = run_cli({"check-quadruple", fixture_path("corrupted.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("FAIL  cocy2-wcp"), std::string::npos);
    CliResult missing = run_cli({"check-quadruple", fixture_path("nope.json")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
    EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
    EXPECT_EQ(run_cli({"check-quadruple", fixture_path("skew_group.json"), "--name", "zz"}).code, 2);
    EXPECT_EQ(run_cli({"check-quadruple", fixture_path("skew_group.json"), "--field", "4"}).code, 2);
    EXPECT_EQ(run_cli({"mine-wdl", "--exhaustive", "--dims", "3,3"}).code, 2);
}

TEST(Cli, PreconditionBecomesFailedReport) {
    // the corrupted quadruple cannot be built, so build-wcp fails rather than crashing
    CliResult r = run_cli({"build-wcp", fixture_path("corrupted.json"), "--json"});
    EXPECT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_FALSE(j["results"][0]["pass"].get<bool>());
    EXPECT_TRUE(j["results"][0]["info"].contains("stopped"));
}

TEST(Cli, OutputIsDeterministic) {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"iso", fixture_path("skew_group.json"), "--json"},
          std::vector<std::string>{"iterate", fixture_path("mined_wdl_triple.json")},
          std::vector<std::string>{"mine-wdl", "--field", "2", "--budget", "3000", "--seed", "9"}}) {
        CliResult a = run_cli(args), b = run_cli(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, JsonLabelsAreRegistered) {
    CliResult r = run_cli({"check-dp", fixture_path("skew_group.json"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    std::size_t n = 0;
    for (const auto& oc : j["results"])
        for (const auto& c : oc["checks"]) {
            EXPECT_NO_THROW(label_rank(c["label"].get<std::string>()));
            ++n;
        }
    EXPECT_GT(n, 10u);
}

TEST(Cli, MineWritesWorkspace) {
    auto path = std::filesystem::temp_directory_path() / "wcp_mine_test.json";
    CliResult r = run_cli({"mine-wdl", "--exhaustive", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    Workspace ws = parse_workspace(json::parse(in));
    EXPECT_EQ(ws.laws.size(), 19u);
    EXPECT_TRUE(ws.quadruples.count("q.577"));
    EXPECT_TRUE(ws.preunit("q.577").has_value());
    std::filesystem::remove(path);
}
