#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "proc.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli(const std::string& args) { return std::string(QFC_CLI_PATH) + " " + args; }

std::string read_golden(const std::string& name) {
    const std::string path = std::string(QFC_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hierarchy output matches the golden files") {
    struct Golden {
        const char* args;
        const char* file;
    };
    const Golden cases[] = {
        {"hierarchy --p 3 --m 3 --form identity --a 0 --method all", "p3_m3_identity_a0.json"},
        {"hierarchy --p 3 --m 4 --form identity --a 0 --method all", "p3_m4_identity_a0.json"},
        {"hierarchy --p 3 --m 4 --form diag:1,1,1,2 --a 0 --method all",
         "p3_m4_diag1112_a0.json"},
        {"hierarchy --p 3 --m 3 --form identity --a 2 --method all", "p3_m3_identity_a2.json"},
        {"hierarchy --p 3 --m 3 --form identity --a 1 --method all", "p3_m3_identity_a1.json"},
    };
    for (const auto& g : cases) {
        CAPTURE(g.args);
        const auto res = run_command(cli(g.args));
        CHECK(res.exit_code == 0);
        CHECK(res.out == read_golden(g.file));
        CHECK(contains(res.out, "\"agreement\": true"));
    }
}

TEST_CASE("byte determinism across runs and worker counts") {
    const std::string base = "hierarchy --p 3 --m 4 --form identity --a 0 --method all";
    const auto first = run_command(cli(base));
    const auto second = run_command(cli(base));
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    const auto jobs1 = run_command(cli(base + " --jobs 1"));
    const auto jobs4 = run_command(cli(base + " --jobs 4"));
    CHECK(jobs1.exit_code == 0);
    CHECK(jobs1.out == jobs4.out);
    CHECK(jobs1.out == first.out);
}

TEST_CASE("csv output") {
    const auto res = run_command(
        cli("hierarchy --p 3 --m 4 --form diag:1,1,1,2 --a 0 --method formula --out csv"));
    CHECK(res.exit_code == 0);
    const std::string expect =
        "p,m,form,a,theorem,r,d_r,method\n"
        "3,4,\"diag:1,1,1,2\",0,T5,1,12,formula\n"
        "3,4,\"diag:1,1,1,2\",0,T5,2,16,formula\n"
        "3,4,\"diag:1,1,1,2\",0,T5,3,18,formula\n"
        "3,4,\"diag:1,1,1,2\",0,T5,4,20,formula\n";
    CHECK(res.out == expect);
    CHECK(res.out == read_golden("p3_m4_diag1112_a0_formula.csv"));
}

TEST_CASE("degenerate code dimension is a structured exit-1 error") {
    const auto res =
        run_command(cli("hierarchy --p 3 --m 2 --form diag:2,1 --a 1 --method lemma1"));
    CHECK(res.exit_code == 1);
    CHECK(contains(res.out, "\"kind\": \"degenerate_dimension\""));
    CHECK(contains(res.out, "\"dimension\": 1"));
    CHECK(contains(res.out, "\"required\": 2"));
}

TEST_CASE("small m still works without the closed form") {
    const auto res =
        run_command(cli("hierarchy --p 3 --m 2 --form identity --a 1 --method all"));
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "\"wei\""));
    CHECK(contains(res.out, "\"lemma1\""));
    CHECK_FALSE(contains(res.out, "\"formula\""));
    CHECK(contains(res.out, "\"agreement\": true"));
    CHECK(contains(res.out, "\"n\": 4"));

    const auto formula =
        run_command(cli("hierarchy --p 3 --m 2 --form identity --a 1 --method formula"));
    CHECK(formula.exit_code == 1);
    CHECK(contains(formula.out, "\"kind\": \"formula_precondition\""));
}

TEST_CASE("empty defining set is a structured exit-1 error") {
    const auto res =
        run_command(cli("hierarchy --p 3 --m 2 --form identity --a 0 --method all"));
    CHECK(res.exit_code == 1);
    CHECK(contains(res.out, "\"kind\": \"unusable_code\""));
}

TEST_CASE("timings stay out of the deterministic payload unless requested") {
    const std::string base = "hierarchy --p 3 --m 3 --form identity --a 0 --method all";
    const auto plain = run_command(cli(base));
    CHECK(contains(plain.out, "\"timings_ms\": {}"));
    const auto timed = run_command(cli(base + " --timings"));
    CHECK(timed.exit_code == 0);
    CHECK_FALSE(contains(timed.out, "\"timings_ms\": {}"));
    CHECK(contains(timed.out, "\"timings_ms\""));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_command(cli("hierarchy --m 3")).exit_code == 1);  // missing --p
    CHECK(run_command(cli("")).exit_code == 1);                 // no subcommand
    const auto method = run_command(cli("hierarchy --p 3 --m 3 --method tarot"));
    CHECK(method.exit_code == 1);
    CHECK(contains(method.out, "\"kind\": \"precondition\""));
    const auto out = run_command(cli("hierarchy --p 3 --m 3 --out yaml"));
    CHECK(out.exit_code == 1);
    const auto evenp = run_command(cli("hierarchy --p 4 --m 3"));
    CHECK(evenp.exit_code == 1);
    CHECK(contains(evenp.out, "\"kind\": \"precondition\""));
}

TEST_CASE("verify: guardrail, matrix, seeded reproducibility") {
    const auto refusal = run_command(cli("verify --p 3 --m 7"));
    CHECK(refusal.exit_code == 1);
    CHECK(contains(refusal.out, "refusing p=3 m=7"));
    CHECK(contains(refusal.out, "--force"));

    const auto small = run_command(cli("verify --p 3 --m 3"));
    CHECK(small.exit_code == 0);
    CHECK(contains(small.out, "p=3 m=3 form=identity a=0 theorem=T6 n=8 hierarchy=[4,6,8] agree"));
    CHECK(contains(small.out, "cells agreed: 12/12"));

    const auto seeded1 = run_command(cli("verify --p 3 --m 3 --forms 2 --seed 42"));
    const auto seeded2 = run_command(cli("verify --p 3 --m 3 --forms 2 --seed 42"));
    CHECK(seeded1.exit_code == 0);
    CHECK(seeded1.out == seeded2.out);
    CHECK(contains(seeded1.out, "cells agreed: 18/18"));
    CHECK(contains(seeded1.out, "form=gram:"));
}

TEST_CASE("search subcommand") {
    const auto selfdual = run_command(cli("search --p 3 --m 4 --form identity --task selfdual"));
    CHECK(selfdual.exit_code == 0);
    CHECK(selfdual.out == "witness 1,0,2,1;0,1,2,2\n");

    const auto none = run_command(cli("search --p 3 --m 2 --form identity --task selfdual"));
    CHECK(none.exit_code == 0);
    CHECK(none.out == "none (exhaustive over 4 lines)\n");

    const auto iso = run_command(cli("search --p 3 --m 3 --form identity --task isotropic:1"));
    CHECK(iso.exit_code == 0);
    CHECK(iso.out == "witness 1,1,1\n");

    const auto stall = run_command(cli("search --p 3 --m 2 --form identity --task isotropic:1"));
    CHECK(stall.exit_code == 0);
    CHECK(stall.out == "none (stalled at dimension 0)\n");

    // Beyond m = 4 a negative answer rests on the sign criterion alone.
    const auto sign = run_command(cli("search --p 3 --m 6 --form identity --task selfdual"));
    CHECK(sign.exit_code == 0);
    CHECK(sign.out == "none (sign condition)\n");

    const auto badtask = run_command(cli("search --p 3 --m 3 --task widdershins"));
    CHECK(badtask.exit_code == 1);
    CHECK(contains(badtask.out, "\"kind\": \"precondition\""));
}
