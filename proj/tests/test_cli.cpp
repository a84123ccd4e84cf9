#include "markovgeo/cf.hpp"
#include "markovgeo/exact.hpp"
#include "markovgeo/markov.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Drives the installed binary through popen.  MARKOV_CLI points at the
// executable and MARKOV_GOLDEN_DIR at the golden files; both are set by the
// CTest harness.

using namespace markovgeo;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("MARKOV_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MARKOV_CLI must point at the binary");
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("MARKOV_GOLDEN_DIR");
    REQUIRE_MESSAGE(p != nullptr, "MARKOV_GOLDEN_DIR must point at tests/golden");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = "\"" + cli_path() + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

size_t count_occurrences(const std::string& s, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = s.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("spectrum rows carry the exact values and printed decimals") {
    RunResult r = run("spectrum --cmax 29");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    // decimals checked against an independent high precision evaluation
    CHECK(lines[0] == "(1, 1, 1)  x = 1/2 + 1/2*sqrt(5) (1.618033989)  L = sqrt(5) (2.236067977)");
    CHECK(lines[1] == "(1, 1, 2)  x = sqrt(2) (1.414213562)  L = 2*sqrt(2) (2.828427125)");
    CHECK(lines[2].find("L = 1/5*sqrt(221) (2.973213749)") != std::string::npos);
    CHECK(lines[3].find("L = 1/13*sqrt(1517) (2.99605263)") != std::string::npos);
    CHECK(lines[4].find("L = 1/29*sqrt(7565) (2.999207188)") != std::string::npos);
}

TEST_CASE("tree rows agree across the three layouts") {
    RunResult text = run("tree --cmax 5");
    REQUIRE(text.exit_code == 0);
    auto rows = lines_of(text.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[2].find("(1, 2, 5)") == 0);
    CHECK(rows[2].find("M = 10/221*sqrt(221)") != std::string::npos);
    CHECK(rows[2].find("f = [1, -9/5, -7/5]") != std::string::npos);

    RunResult csv = run("tree --cmax 5 --csv");
    REQUIRE(csv.exit_code == 0);
    auto csv_rows = lines_of(csv.out);
    REQUIRE(csv_rows.size() == 4);
    CHECK(csv_rows[0] ==
          "a,b,c,lambda,lambda_float,lagrange,lagrange_float,minimum,minimum_float,"
          "x,x_float,form_a,form_b,form_c");
    CHECK(csv_rows[3].find("1,2,5,1/5*sqrt(221),") == 0);

    RunResult js = run("tree --cmax 5 --json");
    REQUIRE(js.exit_code == 0);
    json doc = json::parse(js.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["cmax"] == 5);
    for (const json& row : doc["rows"]) {
        // the tree prints the same number through two independent routes
        CHECK(row["lambda"]["exact"] == row["lagrange"]["exact"]);
        QuadExt lambda = parse_quadext(row["lambda"]["exact"].get<std::string>());
        QuadExt minimum = parse_quadext(row["minimum"]["exact"].get<std::string>());
        CHECK(lambda * minimum == QuadExt(2));
    }
    CHECK(doc["rows"][2]["triple"] == json({"1", "2", "5"}));
    CHECK(doc["rows"][2]["form"] == json({"1", "-9/5", "-7/5"}));
    // round trip through the schema
    CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("approx output is exact and self-consistent") {
    RunResult r = run("approx --triple 1,1,1 --lambda \"sqrt(5) - 1/100\" --qmax 100 --json");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    QuadExt x = parse_quadext(doc["x"]["exact"].get<std::string>());
    QuadExt lambda = parse_quadext(doc["lambda"]["exact"].get<std::string>());
    CHECK(x == markov_x({1, 1, 1}));
    CHECK(lambda == QuadExt(Rational(-1, 100), 1, 5));
    REQUIRE(doc["count"].get<size_t>() == doc["solutions"].size());
    REQUIRE(doc["solutions"].size() > 0);

    // every reported fraction satisfies |x - p/q| < 1/(lambda q^2), exactly
    Integer prev_q(0);
    for (const json& s : doc["solutions"]) {
        Integer p(s["p"].get<std::string>()), q(s["q"].get<std::string>());
        CHECK(q >= prev_q);
        prev_q = q;
        QuadExt gap = x - QuadExt(Rational(p, q));
        QuadExt bound = QuadExt(1) / (lambda * QuadExt(Rational(q * q)));
        CHECK(gap.abs() < bound);
        CHECK(q <= 100);
    }

    // the text layout reports the same list
    RunResult text = run("approx --triple 1,1,1 --lambda \"sqrt(5) - 1/100\" --qmax 100");
    REQUIRE(text.exit_code == 0);
    auto lines = lines_of(text.out);
    CHECK(lines.back() == "count = " + std::to_string(doc["solutions"].size()));
    CHECK(count_occurrences(text.out, "/") >= doc["solutions"].size());
}

TEST_CASE("forms min reports the scan result") {
    RunResult r = run("forms min --form \"5,1,-11\" --bound 60");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "f = [5, 1, -11]");
    CHECK(lines[1] == "det = -221/4");
    CHECK(lines[2] == "min |f| = 5 at (1, 0)");
    CHECK(lines[3] == "M = 10/221*sqrt(221) (0.672672794)");

    RunResult definite = run("forms min --form \"1,-1,1\" --bound 10");
    REQUIRE(definite.exit_code == 0);
    CHECK(lines_of(definite.out)[2] == "min |f| = 1 at (1, 0)");
}

TEST_CASE("teich flip prints the weight trajectory") {
    RunResult r = run("teich flip --start 1,1,1 --moves 1,2,1,3");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "(1, 1, 1)");
    CHECK(lines[1] == "flip 1 -> (2, 1, 1)");
    CHECK(lines[2] == "flip 2 -> (2, 5, 1)");
    CHECK(lines[3] == "flip 1 -> (13, 5, 1)");
    CHECK(lines[4] == "flip 3 -> (13, 5, 194)");

    // rational weights flow through unreduced ratios too
    RunResult rat = run("teich flip --start 1/2,3,5 --moves 2,2");
    REQUIRE(rat.exit_code == 0);
    auto rl = lines_of(rat.out);
    REQUIRE(rl.size() == 3);
    CHECK(rl[0] == "(1/2, 3, 5)");
    CHECK(rl[2] == "flip 2 -> (1/2, 3, 5)");
}

TEST_CASE("render matches the golden file byte for byte") {
    RunResult r = run("render --qmax 5 --window 0,1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == read_file(golden_dir() + "/render_q5.svg"));
    CHECK(count_occurrences(r.out, "<circle") == 11);

    // --svg writes the same bytes to a file
    std::string tmp = "cli_render_tmp.svg";
    RunResult f = run("render --qmax 5 --window 0,1 --svg " + tmp);
    REQUIRE(f.exit_code == 0);
    CHECK(read_file(tmp) == r.out);
    std::remove(tmp.c_str());

    RunResult overlay = run("render --qmax 3 --window \"-1,2\" --geodesic "
                            "\"1/2 - 1/2*sqrt(5),1/2 + 1/2*sqrt(5)\"");
    REQUIRE(overlay.exit_code == 0);
    CHECK(count_occurrences(overlay.out, "class=\"geo\"") == 1);
}

TEST_CASE("verify subcommand runs a suite and reports per criterion") {
    RunResult r = run("verify --suite uniqueness");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("[PASS] criterion 9: uniqueness scan (") == 0);

    RunResult two = run("verify --suite hurwitz");
    REQUIRE(two.exit_code == 0);
    auto lines = lines_of(two.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("[PASS] criterion 4: approximation dichotomy") == 0);
    CHECK(lines[1].find("[PASS] criterion 5: golden ratio distances") == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("bogus", true).exit_code == 2);
    CHECK(run("", true).exit_code == 2);
    CHECK(run("tree --json --csv", true).exit_code == 2);
    CHECK(run("tree --cmax 0", true).exit_code == 2);
    CHECK(run("approx --triple 1,1,3 --lambda 1", true).exit_code == 2);
    CHECK(run("approx --triple 1,1,1 --lambda 0", true).exit_code == 2);
    CHECK(run("render --window 1,0", true).exit_code == 2);
    CHECK(run("forms min --form \"1,2\" --bound 5", true).exit_code == 2);
    CHECK(run("verify --suite nope", true).exit_code == 2);
    CHECK(run("--help", true).exit_code == 0);
}

TEST_SUITE_END();
