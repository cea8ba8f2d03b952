#include <doctest.h>

#include <fstream>

#include "ramsey/coloring.hpp"
#include "ramsey/construct.hpp"
#include "support/cli_path.hpp"
#include "support/proc.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

bool cli_available() {
    if (g_cli_path.empty()) {
        MESSAGE("CLI path not supplied (--cli=...); skipping CLI tests");
        return false;
    }
    return true;
}

std::string cli() { return "'" + g_cli_path + "'"; }

} // namespace

TEST_CASE("cli: predict prints the corollary values and exit codes") {
    if (!cli_available()) return;
    auto r1 = run_cmd(cli() + " predict --cycle 22 --cliques 3,3");
    CHECK(r1.status == 0);
    CHECK(r1.out == "106 (Cor4)\n");

    auto r2 = run_cmd(cli() + " predict --cycle 26 --cliques 3,3");
    CHECK(r2.status == 0);
    CHECK(r2.out == "126 (Cor3)\n");

    auto r3 = run_cmd(cli() + " predict --cycle 3 --cliques 3");
    CHECK(r3.status == 1);
    CHECK(r3.out == "out of proven range (n=l=3 exception)\n");

    auto r4 = run_cmd(cli() + " predict --cycle 10 --cliques 6,6");
    CHECK(r4.status == 1);

    auto r5 = run_cmd(cli() + " predict --cycle 5 --cliques 2");
    CHECK(r5.status == 4);
}

TEST_CASE("cli: construct + verify round-trip") {
    if (!cli_available()) return;
    const std::string file = scratch_dir() + "/c4.rcol";
    auto c = run_cmd(cli() + " construct --cycle 4 --cliques 3 -o " + file);
    CHECK(c.status == 0);
    CHECK(c.out.find("p = 6, classes = 2") != std::string::npos);
    CHECK(c.out.find(">= 7") != std::string::npos);

    auto v = run_cmd(cli() + " verify " + file + " --targets C4,K3");
    CHECK(v.status == 0);
    CHECK(v.out == "AVOIDS\n");

    // wrong target count
    auto mismatch = run_cmd(cli() + " verify " + file + " --targets C4,K3,K3");
    CHECK(mismatch.status == 5);

    // the green blocks are triangles, so a C3 target is found
    auto contains = run_cmd(cli() + " verify " + file + " --targets C3,K3");
    CHECK(contains.status == 1);
    CHECK(contains.out.find("CONTAINS C3") != std::string::npos);
    CHECK(contains.out.find("class 0 (green)") != std::string::npos);
}

TEST_CASE("cli: figure-1 verify variants") {
    if (!cli_available()) return;
    const std::string file = scratch_dir() + "/fig1_cli.rcol";
    auto c = run_cmd(cli() + " construct --cycle 22 --cliques 3,3 -o " + file);
    REQUIRE(c.status == 0);

    // each green block is a K_21, so a C_21 target is found in class 0
    auto v21 = run_cmd(cli() + " verify " + file + " --targets C21,K3,K3");
    CHECK(v21.status == 1);
    CHECK(v21.out.find("CONTAINS C21") == 0);
    CHECK(v21.out.find("class 0 (green)") != std::string::npos);

    auto mismatch = run_cmd(cli() + " verify " + file + " --targets C22,K3");
    CHECK(mismatch.status == 5);
}

TEST_CASE("cli: construct without a built-in outer ingredient") {
    if (!cli_available()) return;
    auto r = run_cmd(cli() + " construct --cycle 20 --cliques 4,4 -o " + scratch_dir() +
                     "/no.rcol");
    CHECK(r.status == 3);
}

TEST_CASE("cli: custom-mode construct from ingredient files") {
    if (!cli_available()) return;
    const std::string inner = scratch_dir() + "/inner.rcol";
    const std::string outer = scratch_dir() + "/outer.rcol";
    save_coloring(inner, Coloring(6, 1));      // K_6, one class
    save_coloring(outer, pentagon_coloring()); // 2-class K_5
    const std::string out = scratch_dir() + "/c7.rcol";
    auto r = run_cmd(cli() + " construct --inner " + inner + " --outer " + outer +
                     " --targets C7,K3,K3 -o " + out);
    CHECK(r.status == 0);
    CHECK(r.out.find("p = 30, classes = 3") != std::string::npos);
    auto v = run_cmd(cli() + " verify " + out + " --targets C7,K3,K3");
    CHECK(v.status == 0);

    // ingredient failure: the inner K_6 contains a C_5
    auto bad = run_cmd(cli() + " construct --inner " + inner + " --outer " + outer +
                       " --targets C5,K3,K3 -o " + out);
    CHECK(bad.status == 2);
}

TEST_CASE("cli: malformed files exit 4") {
    if (!cli_available()) return;
    const std::string bad = scratch_dir() + "/bad.rcol";
    std::ofstream(bad) << "RCOL 9 3 2\n0\n0 0\n";
    CHECK(run_cmd(cli() + " verify " + bad + " --targets K3,K3").status == 4);
    CHECK(run_cmd(cli() + " export-dot " + bad + " -o " + scratch_dir() + "/x.dot").status == 4);
    CHECK(run_cmd(cli() + " verify /nonexistent.rcol --targets K3,K3").status == 4);

    // target-spec parse errors carry a position and also exit 4
    const std::string pent = scratch_dir() + "/pent.rcol";
    save_coloring(pent, pentagon_coloring());
    auto r = run_cmd(cli() + " verify " + pent + " --targets K3,Q4");
    CHECK(r.status == 4);
    CHECK(r.err.find("position") != std::string::npos);
}

TEST_CASE("cli: search prints a deterministic report") {
    if (!cli_available()) return;
    auto r1 = run_cmd(cli() + " search --targets K3,K3 --max 7");
    CHECK(r1.status == 0);
    CHECK(r1.out.find("Exact R = 6") == 0);

    auto r2 = run_cmd(cli() + " search --targets K3,K3 --max 7");
    CHECK(r2.out == r1.out); // byte-identical stdout

    auto bounded = run_cmd(cli() + " search --targets C4,K3 --max 6");
    CHECK(bounded.status == 1);
    CHECK(bounded.out.find("Lower bound only: R >= 7") == 0);

    auto exhausted = run_cmd(cli() + " search --targets K3,K3 --max 7 --budget-nodes 10");
    CHECK(exhausted.status == 2);
    CHECK(exhausted.out.find("Budget exhausted") == 0);
}

TEST_CASE("cli: export-dot emits the documented palette") {
    if (!cli_available()) return;
    const std::string pent = scratch_dir() + "/pent2.rcol";
    save_coloring(pent, pentagon_coloring());
    const std::string dot = scratch_dir() + "/pent2.dot";
    auto r = run_cmd(cli() + " export-dot " + pent + " -o " + dot);
    CHECK(r.status == 0);
    const std::string text = read_file(dot);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0, pos = 0;
        while ((pos = text.find(needle, pos)) != std::string::npos) {
            ++n;
            pos += needle.size();
        }
        return n;
    };
    CHECK(count("[color=green]") == 5);
    CHECK(count("[color=red]") == 5);
    CHECK(count(" -- ") == 10);
}

TEST_CASE("cli: kappa-table extension file") {
    if (!cli_available()) return;
    const std::string table = scratch_dir() + "/extra.kappa";
    std::ofstream(table) << "# test premise\n9,9 565 UnitTestFixture\n";
    auto r = run_cmd(cli() + " predict --cycle 40 --cliques 9,9 --kappa-table " + table);
    // kappa = 565 puts n = 40 far below the proven band
    CHECK(r.status == 1);
    auto r2 = run_cmd(cli() + " predict --cycle 40 --cliques 9,9");
    CHECK(r2.status == 1);
    CHECK(r2.out.find("kappa unknown") != std::string::npos);

    const std::string bad = scratch_dir() + "/bad.kappa";
    std::ofstream(bad) << "3,3 6\n";
    CHECK(run_cmd(cli() + " predict --cycle 22 --cliques 3,3 --kappa-table " + bad).status == 4);
}
