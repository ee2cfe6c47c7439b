// Golden tests for the frieze-lab executable: every path is a thin adapter,
// so outputs are pinned byte for byte against direct library expectations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef FRIEZE_LAB_BIN
#error "FRIEZE_LAB_BIN must point at the frieze-lab executable"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(FRIEZE_LAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string q(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_CASE("verify prints the sign or a rejection") {
    auto ok = run_cli("verify -d Z " + q("0,0"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "lambda = -1\n");

    auto ones = run_cli("verify -d Z " + q("-1,-1,-1"));
    CHECK(ones.exit_code == 0);
    CHECK(ones.out == "lambda = 1\n");

    auto bad = run_cli("verify -d Z " + q("1,2"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.out == "not a lambda-cycle\n");

    auto rational = run_cli("verify -d Q " + q("3,2/3,3,2/3"));
    CHECK(rational.exit_code == 0);
    CHECK(rational.out == "lambda = -1\n");

    auto gaussian = run_cli("verify -d " + q("Z[i]") + " " + q("2i,-i+1,2,2,i+1,-2i,i-1,-2,-2,-i-1"));
    CHECK(gaussian.exit_code == 0);
    CHECK(gaussian.out == "lambda = -1\n");
}

TEST_CASE("usage and parse problems exit with 1") {
    CHECK(run_cli("verify -d W " + q("0,0")).exit_code == 1);
    CHECK(run_cli("verify -d Z " + q("1,x")).exit_code == 1);
    CHECK(run_cli("verify -d Z " + q("1/2,2")).exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("verify").exit_code == 1);
    CHECK(run_cli("classify -d Z --candidates -1..1 -m 3 --subset nonneg").exit_code == 1);
    CHECK(run_cli("frieze -d Z " + q("1,1,1") + " --format dot").exit_code == 1);
    CHECK(run_cli("decompose -d Z " + q("2,1,2,1") + " --format yaml").exit_code == 1);
    CHECK(run_cli("decompose -d Z --subset weird " + q("2,1,2,1")).exit_code == 1);
}

TEST_CASE("sum glues and prints the result cycle") {
    auto fig = run_cli("sum -d Z " + q("3,0,-3,0") + " " + q("-1,-1,-1"));
    CHECK(fig.exit_code == 0);
    CHECK(fig.out == "2,0,-3,-1,-1 (lambda = -1)\n");

    auto neutral = run_cli("sum -d Z " + q("2,1,2,1") + " " + q("0,0"));
    CHECK(neutral.out == "2,1,2,1 (lambda = -1)\n");
}

TEST_CASE("frieze renders the diagonal layout and the tameness verdict") {
    auto fig = run_cli("frieze -d Z " + q("2,0,-3,-1,-1"));
    CHECK(fig.exit_code == 0);
    CHECK(fig.out ==
          "  0   0   0   0   0\n"
          "    1   1   1   1   1\n"
          "      2   0  -3  -1  -1\n"
          "       -1  -1   2   0  -3\n"
          "          1   1   1   1   1\n"
          "            0   0   0   0   0\n"
          "lambda = -1\n"
          "tame = true\n");

    auto js = run_cli("frieze -d Z " + q("2,0,-3,-1,-1") + " --format json");
    CHECK(js.exit_code == 0);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["tame"] == true);
    CHECK(doc["m"] == 5);
    CHECK(doc["rows"][2] == nlohmann::json::array({"2", "0", "-3", "-1", "-1"}));
}

TEST_CASE("decompose emits text, dot and json forms") {
    auto text = run_cli("decompose -d Z " + q("2,1,2,1"));
    CHECK(text.exit_code == 0);
    CHECK(text.out ==
          "sum: 2,1,2,1 (lambda = -1) [k=3, sigma=r0]\n"
          "  leaf: 1,1,1 (lambda = -1) irreducible\n"
          "  leaf: 1,1,1 (lambda = -1) irreducible\n"
          "leaves: 1,1,1 (lambda = -1); 1,1,1 (lambda = -1)\n");

    auto dot = run_cli("decompose -d Z " + q("2,1,2,1") + " --format dot");
    CHECK(dot.out ==
          "graph decomposition {\n"
          "  L0 [label=\"1,1,1 (lambda = -1)\", shape=box];\n"
          "  L1 [label=\"1,1,1 (lambda = -1)\", shape=box];\n"
          "  L0 -- L1 [label=\"k=3, sigma=r0\"];\n"
          "}\n");

    auto js = run_cli("decompose -d Z " + q("2,0,-3,-1,-1") + " --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["type"] == "node");
    CHECK(doc["left"]["cycle"]["entries"] == nlohmann::json::array({"0", "2", "0", "-2"}));

    auto sub = run_cli("decompose -d Z --subset pos " + q("1,2,1,2"));
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("leaf: 1,1,1") != std::string::npos);
}

TEST_CASE("enumerate lists orbits in search order") {
    auto out = run_cli("enumerate -d Z --candidates " + q("-2..2") + " -m 4");
    CHECK(out.exit_code == 0);
    CHECK(out.out ==
          "# m = 4, 5 orbits\n"
          "-2,-1,-2,-1 (lambda = -1)\n"
          "-2,0,2,0 (lambda = 1)\n"
          "-1,0,1,0 (lambda = 1)\n"
          "0,0,0,0 (lambda = 1)\n"
          "1,2,1,2 (lambda = -1)\n");

    auto filtered = run_cli("enumerate -d Z --candidates " + q("-1,1") + " -m 3 --lambda=-1");
    CHECK(filtered.out ==
          "# m = 3, 1 orbits\n"
          "1,1,1 (lambda = -1)\n");

    auto range = run_cli("enumerate -d Z --candidates " + q("0") + " -m 2..3 --format json");
    CHECK(range.out ==
          "{\"m\":2,\"count\":1,\"cycles\":[" +
              std::string(R"({"domain":"Z","lambda":-1,"entries":["0","0"]})") + "]}\n" +
              "{\"m\":3,\"count\":0,\"cycles\":[]}\n");
}

TEST_CASE("worker count and the env default do not change enumerate output") {
    std::string args = "enumerate -d Z --candidates " + q("-3..3") + " -m 5";
    auto one = run_cli(args + " --jobs 1");
    auto four = run_cli(args + " --jobs 4");
    auto env = run_cli(args, "FRIEZE_LAB_JOBS=3 ");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == env.out);
}

TEST_CASE("classify prints census tables and json lines") {
    auto table = run_cli("classify -d Z --candidates " + q("0..4") + " -m 3 --subset nonneg");
    CHECK(table.exit_code == 0);
    CHECK(table.out ==
          "domain Z, m = 3, subset nonneg\n"
          "candidates: 0,1,2,3,4\n"
          "orbits: 1  reducible: 0  irreducible: 1\n"
          "  irreducible: 1,1,1 (lambda = -1)\n");

    auto js = run_cli("classify -d Z --candidates " + q("0..4") + " -m 3..5 --subset nonneg --format json");
    CHECK(js.exit_code == 0);
    std::istringstream lines(js.out);
    std::string line;
    int m = 3;
    while (std::getline(lines, line)) {
        auto doc = nlohmann::json::parse(line);
        CHECK(doc["m"] == m);
        if (m == 3) CHECK(doc["irreducible_orbits"].size() == 1);
        if (m == 5) CHECK(doc["irreducible_orbits"].empty());
        ++m;
    }
    CHECK(m == 6);
}

TEST_CASE("gauss emits the family member and its report") {
    auto k1 = run_cli("gauss --k 1");
    CHECK(k1.exit_code == 0);
    CHECK(k1.out ==
          "2i,1-i,2,2,1+i,-2i,-1+i,-2,-2,-1-i (lambda = -1)\n"
          "irreducible over Z[i]: yes\n"
          "x[1,7] = -1+3i\n");

    auto js = run_cli("gauss --k 2 --format json");
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["irreducible"] == true);
    CHECK(doc["cycle"]["lambda"] == -1);
    // 1-based coordinates on the CLI surface: x[1,2k+5] = 2ik+i-1
    bool found = false;
    for (const auto& e : doc["entries"])
        if (e["i"] == 1 && e["j"] == 9) {
            CHECK(e["value"] == "-1+5i");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("cycle documents can be read from files") {
    namespace fs = std::filesystem;
    fs::path doc = fs::temp_directory_path() / "frieze_lab_cli_test_cycle.json";
    {
        std::ofstream out(doc);
        out << R"({"domain": "Z[i]", "lambda": -1,)"
            << R"( "entries": ["2i","-i+1","2","2","i+1","-2i","i-1","-2","-2","-i-1"]})";
    }
    auto verified = run_cli("verify " + q("@" + doc.string()));
    CHECK(verified.exit_code == 0);
    CHECK(verified.out == "lambda = -1\n");

    // an explicit mismatched domain flag is rejected
    auto mismatch = run_cli("verify -d Z " + q("@" + doc.string()));
    CHECK(mismatch.exit_code == 1);

    auto missing = run_cli("verify " + q("@/nonexistent/cycle.json"));
    CHECK(missing.exit_code == 1);
    fs::remove(doc);
}
