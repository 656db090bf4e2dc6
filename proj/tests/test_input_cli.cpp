#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "grmod/corpus.hpp"
#include "grmod/errors.hpp"
#include "grmod/report.hpp"

using namespace grmod;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = "grmod_test_input_" + std::to_string(counter++) + ".txt";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<const char*> argv = {"grmod"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str();
    if (err_text)
        *err_text = err.str();
    return code;
}

const char* kTwistedCubicFile = R"(ring: char=32003, vars=[x,y,z,w]
ideal twisted_cubic:
  x*z - y^2
  y*w - z^2
  x*w - y*z
ideal zero_ideal:
)";

}  // namespace

TEST_CASE("input parsing: sections, tags, forms") {
    InputDocument doc = parse_input(R"(# comment
ring: char=32003, vars=[x,y]
ideal a [genus0, extra]:
  x^2
forms f:
  x + y
ring: char=101, vars=[u,v,w]
ideal b:
  u*v - w^2
)");
    REQUIRE(doc.sections.size() == 2);
    CHECK(doc.sections[0].ring.nvars() == 2);
    CHECK(doc.sections[1].ring.field().characteristic() == 101);
    auto found = doc.find_ideal("b");
    REQUIRE(found.has_value());
    CHECK(found->section->ring.nvars() == 3);
    CHECK(doc.sections[0].ideals[0].tags == std::vector<std::string>{"genus0", "extra"});
    CHECK(doc.sections[0].forms[0].forms.size() == 1);
    CHECK(doc.ideal_names() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("input parsing rejects bad files with line numbers") {
    CHECK_THROWS_AS(parse_input("ideal a:\n  x\n"), parse_error);  // no ring yet
    CHECK_THROWS_AS(parse_input("ring: char=32003, vars=[x]\nideal a:\nideal a:\n"), parse_error);
    try {
        parse_input("ring: char=32003, vars=[x,y]\nideal a:\n  x + x^2\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);  // inhomogeneous polynomial
    }
    try {
        parse_input("ring: char=32003, vars=[x,y]\nideal a:\n  x*q\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("builtin corpus parses to 12 entries with two genus-0 curves") {
    std::vector<CorpusEntry> corpus = builtin_corpus();
    CHECK(corpus.size() == 12);
    int genus0 = 0;
    for (const auto& e : corpus) {
        CHECK(e.ring.nvars() >= 2);
        CHECK(e.ring.nvars() <= 5);
        for (const auto& f : e.ideal_gens)
            CHECK(*f.degree() <= 3);
        if (e.genus0_curve)
            ++genus0;
    }
    CHECK(genus0 == 2);
}

TEST_CASE("cli betti on the twisted cubic") {
    TempFile file(kTwistedCubicFile);
    std::string out;
    int code = run_cli({"betti", file.path, "twisted_cubic"}, &out);
    CHECK(code == 0);
    CHECK(out.find("1") != std::string::npos);
    CHECK(out.find("3") != std::string::npos);

    std::string json_out;
    code = run_cli({"betti", file.path, "twisted_cubic", "--format", "json"}, &json_out);
    CHECK(code == 0);
    Json parsed = Json::parse(json_out);
    REQUIRE(parsed["betti"].is_array());
    CHECK(parsed["betti"].size() == 3);
}

TEST_CASE("cli betti on the zero ideal") {
    TempFile file(kTwistedCubicFile);
    std::string out;
    int code = run_cli({"betti", file.path, "zero_ideal", "--format", "json"}, &out);
    CHECK(code == 0);
    Json parsed = Json::parse(out);
    REQUIRE(parsed["betti"].size() == 1);
    CHECK(parsed["betti"][0]["i"] == 0);
    CHECK(parsed["betti"][0]["j"] == 0);
    CHECK(parsed["betti"][0]["beta"] == 1);
}

TEST_CASE("cli invariants of the twisted cubic") {
    TempFile file(kTwistedCubicFile);
    std::string out;
    int code = run_cli({"invariants", file.path, "twisted_cubic", "--format", "json"}, &out);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["mu"] == 3);
    CHECK(j["a"] == 2);
    CHECK(j["dim"] == 2);
    CHECK(j["depth"] == 2);
    CHECK(j["codim"] == 2);
    CHECK(j["e"] == 3);
    CHECK(j["reg"] == 1);

    std::string zout;
    code = run_cli({"invariants", file.path, "zero_ideal", "--format", "json"}, &zout);
    CHECK(code == 0);
    Json z = Json::parse(zout);
    CHECK(z["mu"] == 0);
    CHECK(z["a"].is_null());
}

TEST_CASE("cli exit code 2 on parse problems") {
    TempFile bad("ring: char=32003, vars=[x,y]\nideal broken:\n  x + x^2\n");
    std::string err;
    int code = run_cli({"betti", bad.path, "broken"}, nullptr, &err);
    CHECK(code == 2);
    CHECK(err.find("line 3") != std::string::npos);

    TempFile ok(kTwistedCubicFile);
    code = run_cli({"betti", ok.path, "missing_ideal"}, nullptr, &err);
    CHECK(code == 2);

    code = run_cli({"betti", "no_such_file.txt", "x"}, nullptr, &err);
    CHECK(code == 2);

    code = run_cli({"frobnicate", ok.path}, nullptr, &err);
    CHECK(code == 2);
}

TEST_CASE("cli verify: unknown claim id is a usage error") {
    TempFile file(kTwistedCubicFile);
    std::string err;
    int code = run_cli({"verify", file.path, "--claims", "9.9"}, nullptr, &err);
    CHECK(code == 2);
    CHECK(err.find("9.9") != std::string::npos);
}

TEST_CASE("cli verify single cheap claim and determinism of green") {
    TempFile file(kTwistedCubicFile);
    std::string out;
    int code = run_cli({"verify", file.path, "--claims", "5.2", "--format", "json"}, &out);
    CHECK(code == 0);
    Json reports = Json::parse(out);
    REQUIRE(reports.size() == 2);  // two ideals
    for (const auto& r : reports)
        CHECK(r["verdict"] == "verified");

    std::string g1, g2;
    CHECK(run_cli({"green", file.path, "twisted_cubic", "-s", "2", "--seed", "17",
                   "--format", "json"},
                  &g1) == 0);
    CHECK(run_cli({"green", file.path, "twisted_cubic", "-s", "2", "--seed", "17",
                   "--format", "json"},
                  &g2) == 0);
    CHECK(g1 == g2);
    Json green = Json::parse(g1);
    CHECK(green["certified"] == true);
    CHECK(green["table"].size() >= 1);
}

TEST_CASE("corpus text matches the shipped data file when present") {
    std::ifstream in(std::string(GRMOD_SOURCE_DIR) + "/data/corpus.txt");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == builtin_corpus_text());
}

TEST_CASE("cli verify: hypothesis-not-met still exits 0") {
    /* a non-Gorenstein perfect codim-2 ideal under the Gorenstein-only bound */
    TempFile file("ring: char=32003, vars=[x,y,z]\nideal minors:\n  x*z - y^2\n  x^2 - y*z\n  x*y - z^2\n");
    std::string out;
    int code = run_cli({"verify", file.path, "--claims", "4.5"}, &out);
    CHECK(code == 0);
    CHECK(out.find("hypothesis-not-met") != std::string::npos);
}
