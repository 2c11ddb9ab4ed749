#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI binary with stdout captured; stderr is folded in so error
// paths can be asserted on too.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(LATTLE_BIN) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(LATTLE_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze text output matches the golden files character for character") {
    for (const char* key : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
        RunResult r = run_cli(std::string("analyze ") + key, "LATTLE_COLOR=0");
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(std::string("analyze_") + key + ".txt"));
    }
}

TEST_CASE("analyze JSON is byte-deterministic across runs") {
    RunResult a = run_cli("analyze fig1 --format json", "LATTLE_COLOR=0");
    RunResult b = run_cli("analyze fig1 --format json", "LATTLE_COLOR=0");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"d_stonean\": false") != std::string::npos);
}

TEST_CASE("laws subcommand") {
    RunResult all = run_cli("laws fig1 fig2 fig3 fig4 fig5 fig6", "LATTLE_COLOR=0");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("fails") == std::string::npos);
    RunResult one = run_cli("laws fig2 --law thm2.8", "LATTLE_COLOR=0");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("thm2.8") != std::string::npos);
    CHECK(one.out.find("holds") != std::string::npos);
    RunResult eq = run_cli("laws fig5 --law thm3.7", "LATTLE_COLOR=0");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.find("holds") != std::string::npos);
    RunResult unknown = run_cli("laws fig5 --law nope");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("search subcommand") {
    RunResult found = run_cli("search \"maximal & !prime\" --max-size 6 --format json");
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("\"found\": true") != std::string::npos);
    CHECK(found.out.find("witness_filter") != std::string::npos);
    RunResult none = run_cli("search thm2.1.x --max-size 5 --mode exhaustive");
    CHECK(none.exit_code == 0);
    CHECK(none.out == "none\n");
    RunResult indep = run_cli("search \"cond1 & !cond2\" --max-size 9 --format json");
    CHECK(indep.exit_code == 0);
    CHECK(indep.out.find("\"found\": true") != std::string::npos);
    // Text mode renders the hit as JSON followed by its DOT diagram.
    RunResult text_hit = run_cli("search \"cond1 & !cond2\" --max-size 9", "LATTLE_COLOR=0");
    CHECK(text_hit.exit_code == 0);
    CHECK(text_hit.out.find("\"found\": true") != std::string::npos);
    CHECK(text_hit.out.find("digraph") != std::string::npos);
    RunResult bad = run_cli("search \"frobnicated\"");
    CHECK(bad.exit_code == 1);
    // A never-matching query must actually reach the size cap.
    RunResult capped = run_cli("search \"closed & !d_filter\" --max-size 12");
    CHECK(capped.exit_code == 1);
    CHECK(capped.out.find("soft cap") != std::string::npos);
    RunResult det1 = run_cli("search \"!cond1 & cond2\" --max-size 9 --format json");
    RunResult det2 = run_cli("search \"!cond1 & cond2\" --max-size 9 --format json");
    CHECK(det1.out == det2.out);
}

TEST_CASE("corpus subcommand") {
    RunResult list = run_cli("corpus list");
    CHECK(list.exit_code == 0);
    CHECK(list.out == golden("corpus_list.txt"));
    RunResult show = run_cli("corpus show fig6");
    CHECK(show.exit_code == 0);
    for (const char* cover : {"[\"0\", \"a\"]", "[\"a\", \"b\"]", "[\"a\", \"c\"]",
                              "[\"a\", \"d\"]", "[\"b\", \"1\"]", "[\"c\", \"1\"]",
                              "[\"d\", \"1\"]"})
        CHECK(show.out.find(cover) != std::string::npos);
    RunResult unknown = run_cli("corpus show fig0");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("corpus export round-trips through analyze") {
    std::string path = "/tmp/lattle_export_fig5.json";
    RunResult exp = run_cli("corpus export fig5 " + path);
    CHECK(exp.exit_code == 0);
    RunResult via_file = run_cli("analyze " + path, "LATTLE_COLOR=0");
    RunResult via_key = run_cli("analyze fig5", "LATTLE_COLOR=0");
    CHECK(via_file.exit_code == 0);
    CHECK(via_file.out == via_key.out);
}

TEST_CASE("dot output") {
    RunResult dot = run_cli("analyze fig5 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out == golden("dot_fig5.txt"));
    CHECK(dot.out.find("rankdir=BT") != std::string::npos);
}

TEST_CASE("exit codes for error classes") {
    CHECK(run_cli("analyze /nonexistent.json").exit_code == 2);
    {
        std::ofstream bad("/tmp/lattle_bad.json");
        bad << "{ not json";
    }
    RunResult parse_err = run_cli("analyze /tmp/lattle_bad.json");
    CHECK(parse_err.exit_code == 2);
    CHECK(parse_err.out.find("line") != std::string::npos);
    {
        std::ofstream bow("/tmp/lattle_bowtie.json");
        bow << R"({"name":"bowtie","elements":["0","w","a","b"],)"
            << R"("covers":[["0","w"],["w","a"],["w","b"]]})";
    }
    CHECK(run_cli("analyze /tmp/lattle_bowtie.json").exit_code == 3);
    CHECK(run_cli("analyze").exit_code == 1);          // missing argument
    CHECK(run_cli("analyze fig5 --format yaml").exit_code == 1);
    // Not a corpus key, so treated as a (missing) file: parse/IO class.
    CHECK(run_cli("analyze fig0").exit_code == 2);
}

TEST_CASE("LATTLE_COLOR toggles ANSI escapes") {
    RunResult plain = run_cli("analyze fig5", "LATTLE_COLOR=0");
    CHECK(plain.out.find("\x1b[") == std::string::npos);
    RunResult colored = run_cli("laws fig5", "LATTLE_COLOR=1");
    CHECK(colored.out.find("\x1b[") != std::string::npos);
}

}  // TEST_SUITE
