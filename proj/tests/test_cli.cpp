#include <random>
#include <string>

#include "doctest.h"
#include "support/subprocess.hpp"

using testsupport::ProcResult;
using testsupport::run_cmd;
using testsupport::TempDir;

namespace {

const char* kPassScenario = R"({
  "name": "pass",
  "cap": 10,
  "vectors": {
    "e0": [{"basis": "sym_e", "index": 0, "re": 1.0, "im": 0.0}],
    "e1": [{"basis": "sym_e", "index": 1, "re": 1.0, "im": 0.0}]
  },
  "checks": [
    {"check": "coeff_criterion", "vector": "e0"},
    {"check": "coeff_criterion", "vector": "e1"},
    {"check": "is_wandering_span", "vectors": ["e1"]}
  ]
})";

const char* kFailScenario = R"({
  "name": "fail",
  "cap": 10,
  "vectors": {
    "e0": [{"basis": "sym_e", "index": 0, "re": 1.0, "im": 0.0}],
    "e1": [{"basis": "sym_e", "index": 1, "re": 1.0, "im": 0.0}]
  },
  "checks": [
    {"check": "cross_condition", "vectors": ["e0", "e1"]}
  ]
})";

const char* kUnresolvedScenario = R"({
  "name": "unresolved",
  "checks": [{"check": "coeff_criterion", "vector": "ghost"}]
})";

std::string shq(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("exit codes follow the run contract") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();

    std::string pass = tmp.write("pass.json", kPassScenario);
    ProcResult ok = run_cmd(cli + " run " + shq(pass) + " --stable");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("coeff_criterion,e0,true") != std::string::npos);

    std::string fail = tmp.write("fail.json", kFailScenario);
    ProcResult bad = run_cmd(cli + " run " + shq(fail) + " --stable");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("cross_condition,e0+e1,false,0.7071067811865") != std::string::npos);
    CHECK(bad.out.find(",-1,") != std::string::npos);

    std::string malformed = tmp.write("malformed.json", "{ this is not json");
    ProcResult mal = run_cmd(cli + " run " + shq(malformed) + " --stable");
    CHECK(mal.exit_code == 2);
    CHECK(mal.out.empty());

    std::string unresolved = tmp.write("unresolved.json", kUnresolvedScenario);
    ProcResult un = run_cmd(cli + " run " + shq(unresolved) + " --stable");
    CHECK(un.exit_code == 2);
    CHECK(un.out.empty());

    ProcResult missing = run_cmd(cli + " run " + shq(tmp.path("nope.json")));
    CHECK(missing.exit_code == 2);
}

TEST_CASE("stable reports are byte-identical across runs") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();
    std::string pass = tmp.write("pass.json", kPassScenario);

    ProcResult a = run_cmd(cli + " run " + shq(pass) + " --stable");
    ProcResult b = run_cmd(cli + " run " + shq(pass) + " --stable");
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());

    ProcResult j1 = run_cmd(cli + " run " + shq(pass) + " --stable --format jsonl --jobs 3");
    ProcResult j2 = run_cmd(cli + " run " + shq(pass) + " --stable --format jsonl");
    CHECK(j1.out == j2.out);
    CHECK(j1.out.find("\"passed\":true") != std::string::npos);
}

TEST_CASE("output file flag") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();
    std::string pass = tmp.write("pass.json", kPassScenario);
    std::string out = tmp.path("report.csv");

    ProcResult r = run_cmd(cli + " run " + shq(pass) + " --stable --out " + shq(out));
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("scenario,check,object") != std::string::npos);
}

TEST_CASE("oracle subcommand flags the literal weight") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();
    std::string sc = tmp.write("mix.json", R"({
      "name": "mix",
      "cap": 10,
      "vectors": {
        "mix": [{"basis": "sym_e", "index": 0, "re": 0.7071067811865476, "im": 0.0},
                {"basis": "sym_e", "index": 1, "re": 0.7071067811865476, "im": 0.0}]
      }
    })");

    ProcResult r = run_cmd(cli + " oracle " + shq(sc) + " --vector mix --kmax 1 --stable");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("true,true,false") != std::string::npos);   // paper weight flagged
    CHECK(r.out.find("0.35355339059327") != std::string::npos);

    ProcResult r2 = run_cmd(cli + " oracle " + shq(sc) + " --vector ghost --kmax 1");
    CHECK(r2.exit_code == 2);
}

TEST_CASE("convergence subcommand ladder") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();
    std::string sc = tmp.write("zero.json", R"({
      "name": "zero",
      "subspaces": {"M": {"zeros": [{"re": 0.5, "im": 0.0}]}}
    })");

    ProcResult r = run_cmd(cli + " convergence " + shq(sc) +
                           " --subspace M --caps 10,20,40 --check radial_constancy --stable");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("convergence_verdict,M,true") != std::string::npos);

    ProcResult bad = run_cmd(cli + " convergence " + shq(sc) + " --subspace M --caps 40,20");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("exit codes hold over generated scenarios") {
    TempDir tmp;
    std::string cli = testsupport::cli_path();
    std::mt19937_64 rng(777);

    const std::string pass_check = R"({"check": "coeff_criterion", "vector": "e0"})";
    const std::string fail_check = R"({"check": "cross_condition", "vectors": ["e0", "e1"]})";

    for (int rep = 0; rep < 12; ++rep) {
        int n_checks = 1 + int(rng() % 4);
        bool any_fail = false;
        std::string checks;
        for (int c = 0; c < n_checks; ++c) {
            bool fail = rng() % 2 == 0;
            any_fail = any_fail || fail;
            checks += (c ? "," : "") + (fail ? fail_check : pass_check);
        }
        std::string body = std::string(R"({"name": "gen", "cap": 8, "vectors": {)") +
                           R"("e0": [{"basis": "sym_e", "index": 0, "re": 1, "im": 0}],)" +
                           R"("e1": [{"basis": "sym_e", "index": 1, "re": 1, "im": 0}]},)" +
                           R"("checks": [)" + checks + "]}";
        bool malformed = rng() % 4 == 0;
        if (malformed) body.pop_back();
        std::string path = tmp.write("gen" + std::to_string(rep) + ".json", body);
        ProcResult r = run_cmd(cli + " run " + shq(path) + " --stable");
        int expected = malformed ? 2 : (any_fail ? 1 : 0);
        CHECK(r.exit_code == expected);
    }
}
