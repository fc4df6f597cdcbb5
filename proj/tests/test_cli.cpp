#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gwx/errors.hpp"

using namespace gwx;
using namespace gwx::cli;

namespace {

namespace fs = std::filesystem;

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gwx");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "gwx_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << body;
    return p;
}

const char* kLineGW = R"({
  "class": {"c1_dot_beta": 4, "primitive": true},
  "kind": "gw",
  "g_max": 3,
  "values": {"0": "1", "1": "-1/12", "2": "1/360", "3": "-1/20160"}
})";

}  // namespace

TEST_CASE("transform gw-to-gv on the line table") {
    const auto in = temp_file("line.json", kLineGW);
    const Result r = invoke({"transform", "--input", in.string(), "--direction", "gw-to-gv"});
    CHECK(r.status == kExitOk);
    const GenusTable t = parse_table(r.out, false);
    CHECK(t.kind == InvariantKind::GV);
    CHECK(t.values == std::map<int, Rat>{{0, Rat(1)}, {1, Rat(0)}, {2, Rat(0)}, {3, Rat(0)}});
    CHECK(r.out.find("\"0\": \"1/1\"") != std::string::npos);
    CHECK(r.out.find("\"1\": \"0/1\"") != std::string::npos);
}

TEST_CASE("transform gw-to-gv flags non-integral input") {
    std::string body = kLineGW;
    body.replace(body.find("\"1/360\""), 7, "\"17/4500\"");  // 1/360 + 1/1000
    const auto in = temp_file("bad_line.json", body);
    const Result r = invoke({"transform", "--input", in.string(), "--direction", "gw-to-gv"});
    CHECK(r.status == kExitCheckFailed);
    CHECK(r.err.find("genus 2") != std::string::npos);
}

TEST_CASE("round trip is byte-identical after canonical serialization") {
    const std::string ugw = R"({"class":{"c1_dot_beta":-1,"primitive":false},"kind":"ugw","g_max":3,
        "values":{"0":"3/7","1":"-2","2":"5/11","3":"0"}})";
    const auto in = temp_file("ugw.json", ugw);
    const std::string canonical = serialize_table(parse_table(ugw, false));

    const Result fwd = invoke({"transform", "--input", in.string(), "--direction", "ugw-to-gw"});
    REQUIRE(fwd.status == kExitOk);
    const auto mid = temp_file("gw.json", fwd.out);
    const Result back = invoke({"transform", "--input", mid.string(), "--direction", "gw-to-ugw"});
    REQUIRE(back.status == kExitOk);
    CHECK(back.out == canonical);

    const auto canon_in = temp_file("gw_canon.json", fwd.out);
    const Result again = invoke({"transform", "--input", canon_in.string(), "--direction", "gw-to-ugw"});
    const auto back_in = temp_file("ugw_back.json", again.out);
    const Result fwd2 = invoke({"transform", "--input", back_in.string(), "--direction", "ugw-to-gw"});
    CHECK(fwd2.out == fwd.out);
}

TEST_CASE("emitted rationals are p/q strings in lowest terms") {
    const auto in = temp_file("line2.json", kLineGW);
    const Result r = invoke({"transform", "--input", in.string(), "--direction", "gw-to-ugw"});
    REQUIRE(r.status == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& [g, v] : doc["values"].items()) {
        REQUIRE(v.is_string());
        const std::string s = v.get<std::string>();
        CHECK(s.find('/') != std::string::npos);
        CHECK(s.find('.') == std::string::npos);
        CHECK(Rat::parse(s).to_fraction_string() == s);
    }
}

TEST_CASE("missing genera: error for inverse transforms, zero for forward") {
    const std::string gappy = R"({"class":{"c1_dot_beta":2,"primitive":true},"kind":"gw","g_max":2,
        "values":{"0":"1","2":"1"}})";
    const auto gw_in = temp_file("gappy_gw.json", gappy);
    CHECK(invoke({"transform", "--input", gw_in.string(), "--direction", "gw-to-ugw"}).status == kExitUsage);
    CHECK(invoke({"transform", "--input", gw_in.string(), "--direction", "gw-to-gv"}).status == kExitUsage);

    std::string fwd = gappy;
    fwd.replace(fwd.find("\"gw\""), 4, "\"gv\"");
    const auto gv_in = temp_file("gappy_gv.json", fwd);
    const Result r = invoke({"transform", "--input", gv_in.string(), "--direction", "gv-to-gw"});
    CHECK(r.status == kExitOk);
    CHECK(parse_table(r.out, false).values.size() == 3);
}

TEST_CASE("input and usage errors exit 2") {
    CHECK(invoke({}).status == kExitUsage);
    CHECK(invoke({"frobnicate"}).status == kExitUsage);
    CHECK(invoke({"transform", "--input", "/nonexistent/x.json", "--direction", "gw-to-gv"}).status == kExitUsage);
    CHECK(invoke({"transform", "--direction", "gw-to-gv"}).status == kExitUsage);

    const auto in = temp_file("line3.json", kLineGW);
    CHECK(invoke({"transform", "--input", in.string()}).status == kExitUsage);
    CHECK(invoke({"transform", "--input", in.string(), "--direction", "sideways"}).status == kExitUsage);
    // kind does not match the direction
    CHECK(invoke({"transform", "--input", in.string(), "--direction", "ugw-to-gw"}).status == kExitUsage);

    const auto bad_json = temp_file("bad.json", "{ not json");
    CHECK(invoke({"transform", "--input", bad_json.string(), "--direction", "gv-to-gw"}).status == kExitUsage);
    const auto decimal = temp_file("decimal.json", R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"gv",
        "g_max":0,"values":{"0":"0.5"}})");
    CHECK(invoke({"transform", "--input", decimal.string(), "--direction", "gv-to-gw"}).status == kExitUsage);
    const auto extra = temp_file("extra.json", R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"gv",
        "g_max":0,"values":{"0":"1"},"comment":"x"})");
    CHECK(invoke({"transform", "--input", extra.string(), "--direction", "gv-to-gw"}).status == kExitUsage);

    const auto uncovered = temp_file("uncovered.json", R"({"class":{"c1_dot_beta":-1,"primitive":true},
        "kind":"gv","g_max":1,"values":{"0":"1","1":"0"}})");
    const Result r = invoke({"transform", "--input", uncovered.string(), "--direction", "gv-to-gw"});
    CHECK(r.status == kExitUsage);
    CHECK(r.err.find("error") != std::string::npos);

    CHECK(invoke({"expand-sine", "--g", "0", "--c", "4", "--order", "-1"}).status == kExitUsage);
}

TEST_CASE("parse_table") {
    const GenusTable t = parse_table(kLineGW, false);
    CHECK(t.c == 4);
    CHECK(t.primitive);
    CHECK(t.g_max == 3);
    CHECK(t.value(3) == Rat(-1, 20160));
    CHECK_THROWS_AS(parse_table(R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"gw","g_max":1,
        "values":{"0":"1"}})", false), MissingGenus);
    CHECK_THROWS_AS(parse_table(R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"gw","g_max":1,
        "values":{"0":"1","01":"1"}})", true), ParseError);
    CHECK_THROWS_AS(parse_table(R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"gw","g_max":0,
        "values":{"1":"1"}})", true), ParseError);
    CHECK_THROWS_AS(parse_table(R"({"class":{"c1_dot_beta":0,"primitive":true},"kind":"xx","g_max":0,
        "values":{}})", true), ParseError);
}

TEST_CASE("expand-sine") {
    const Result r = invoke({"expand-sine", "--g", "0", "--c", "4", "--order", "6"});
    CHECK(r.status == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["coefficients"] == nlohmann::json{{"0", "1/1"}, {"2", "-1/12"}, {"4", "1/360"}});

    const Result text = invoke({"expand-sine", "--g", "0", "--c", "4", "--order", "6", "--format", "text"});
    CHECK(text.out.find("u^2: -1/12") != std::string::npos);
    CHECK(text.out.find("u^4: 1/360") != std::string::npos);
}

TEST_CASE("verify-identities and mu") {
    const Result r = invoke({"verify-identities", "--order", "10"});
    CHECK(r.status == kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"].get<bool>());
    CHECK(doc["checks"].size() == 4);

    const Result mu = invoke({"mu", "--g", "1"});
    CHECK(mu.status == kExitOk);
    const auto m = nlohmann::json::parse(mu.out);
    CHECK(m["mu"][0]["mu_g1"] == "-1/12");
    CHECK(m["mu"][0]["mu_g0"]["z"] == "-1/12");
    CHECK(m["mu"][0]["mu_g0"]["H"] == "-1/24");
    CHECK(m["mu"][0]["mu_g0"]["c1"] == "-1/24");
}

TEST_CASE("check-integrality and --output") {
    const auto in = temp_file("line4.json", kLineGW);
    const fs::path out = fs::temp_directory_path() / "gwx_cli_test" / "report.json";
    fs::remove(out);
    const Result r = invoke({"check-integrality", "--input", in.string(), "--output", out.string()});
    CHECK(r.status == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(out);
    const auto doc = nlohmann::json::parse(f);
    CHECK(doc["integral"].get<bool>());
    CHECK(doc["largest_nonzero_genus"] == 0);
}
