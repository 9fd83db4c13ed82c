// End-to-end tests that drive the installed binary through a shell, checking
// stdout and exit codes the way a scripted caller would.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "vclab/graph_io.hpp"

#ifndef VCLAB_BIN
#error "VCLAB_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult res;
    std::string cmd = std::string(VCLAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    res.code = WEXITSTATUS(status);
    return res;
}

const std::string& scratch_dir() {
    static const std::string dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("vclab-cli-tests-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d.string();
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path);
    out << content;
    return "\"" + path + "\"";
}

std::string unquote(const std::string& quoted) {
    return quoted.substr(1, quoted.size() - 2);
}

int count_lines_with_prefix(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

const std::string& p3_file() {
    static const std::string f = write_file("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    return f;
}

const std::string& k1_file() {
    static const std::string f = write_file("k1.col", "p edge 1 0\n");
    return f;
}

const std::string& k2_file() {
    static const std::string f = write_file("k2.col", "p edge 2 1\ne 1 2\n");
    return f;
}

const std::string& long_path_file() {
    static const std::string f = [] {
        std::ostringstream body;
        body << "p edge 65 64\n";
        for (int i = 1; i < 65; ++i) body << "e " << i << " " << i + 1 << "\n";
        return write_file("path65.col", body.str());
    }();
    return f;
}

}  // namespace

TEST_CASE("solve prints the optimum") {
    RunResult r = run_cli("solve " + p3_file());
    CHECK(r.code == 0);
    CHECK(r.out == "mvc 1\n");
}

TEST_CASE("solve --cover prints a witness") {
    RunResult r = run_cli("solve --cover " + p3_file());
    CHECK(r.code == 0);
    CHECK(r.out == "mvc 1\ncover 2\n");
}

TEST_CASE("solve respects and reports the budget") {
    CHECK(run_cli("solve " + long_path_file()).code == 2);
    // the cap is absolute: a larger request does not lift it
    CHECK(run_cli("solve --budget 100 " + long_path_file()).code == 2);
    // a smaller budget narrows the limit
    CHECK(run_cli("solve --budget 2 " + p3_file()).code == 2);
    RunResult r = run_cli("solve --budget 3 " + p3_file());
    CHECK(r.code == 0);
    CHECK(r.out == "mvc 1\n");
}

TEST_CASE("heuristic runs print choices, cover, and size") {
    RunResult ed = run_cli("heuristic --alg ed " + p3_file());
    CHECK(ed.code == 0);
    CHECK(ed.out == "choose 1 2\ncover 1 2\nsize 2\n");

    RunResult mdg = run_cli("heuristic --alg mdg " + p3_file());
    CHECK(mdg.code == 0);
    CHECK(mdg.out == "choose 2\ncover 2\nsize 1\n");
}

TEST_CASE("heuristic --min prints the smallest achievable size") {
    CHECK(run_cli("heuristic --alg ed --min " + p3_file()).out == "min-ed 2\n");
    CHECK(run_cli("heuristic --alg mdg --min " + p3_file()).out == "min-mdg 1\n");
}

TEST_CASE("random policy is reproducible per seed") {
    std::string args = "heuristic --alg ed --policy random --seed 5 " + k2_file();
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run_cli("heuristic --alg bogus " + p3_file()).code == 1);
}

TEST_CASE("member reports both sizes and the verdict") {
    RunResult r = run_cli("member --ratio 2/1 " + k2_file());
    CHECK(r.code == 0);
    CHECK(r.out == "min-ed 2\nmvc 1\nmember true\n");

    RunResult strict = run_cli("member --ratio 1/1 " + k2_file());
    CHECK(strict.code == 0);
    CHECK(strict.out == "min-ed 2\nmvc 1\nmember false\n");

    RunResult greedy = run_cli("member --class smdg --ratio 1/1 " + k2_file());
    CHECK(greedy.code == 0);
    CHECK(greedy.out == "min-mdg 1\nmvc 1\nmember true\n");

    CHECK(run_cli("member --ratio 1/2 " + k2_file()).code == 1);
}

TEST_CASE("bad inputs exit with the generic failure code") {
    CHECK(run_cli("solve " + scratch_dir() + "/no-such-file.col").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("").code == 1);
    std::string bad = write_file("bad.col", "e 1 2\np edge 2 1\n");
    CHECK(run_cli("solve " + bad).code == 1);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("reduce ged emits the blown-up graph with role comments") {
    RunResult r = run_cli("reduce --kind ged " + k1_file());
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(r.out.find("c role 1 v0.1\n") != std::string::npos);
    CHECK(r.out.find("c role 4 v0.4\n") != std::string::npos);
}

TEST_CASE("reduce gmdg emits constants") {
    RunResult r = run_cli("reduce --kind gmdg " + k2_file());
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 6);
    CHECK(r.out.find("c const delta 1\n") != std::string::npos);
}

TEST_CASE("reduce hath pads mismatched inputs") {
    RunResult r = run_cli("reduce --kind hath --ratio 1/1 " + k1_file() + " " + k2_file());
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 16);
    CHECK(r.out.find("c const k 4\n") != std::string::npos);
}

TEST_CASE("reduce hatg emits its constants") {
    RunResult r = run_cli("reduce --kind hatg " + k1_file() + " " + k1_file());
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 6);
    CHECK(r.out.find("c const j 2\n") != std::string::npos);
    CHECK(r.out.find("c const q 3\n") != std::string::npos);
}

TEST_CASE("reduce hatgr builds the padded gadget instance") {
    RunResult r = run_cli("reduce --kind hatgr --ratio 2/1 " + k1_file() + " " + k1_file());
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 219);
    CHECK(r.out.find("c const p 1\n") != std::string::npos);
    CHECK(r.out.find("c const q 73\n") != std::string::npos);
    CHECK(r.out.find("c const mu 71\n") != std::string::npos);
}

TEST_CASE("reduce validates its argument combinations") {
    CHECK(run_cli("reduce --kind ged " + k1_file() + " " + k2_file()).code == 1);
    CHECK(run_cli("reduce --kind hath " + k1_file() + " " + k2_file()).code == 1);
    CHECK(run_cli("reduce --kind hatg --ratio 1/1 " + k1_file() + " " + k1_file()).code == 1);
    CHECK(run_cli("reduce --kind nosuch " + k1_file()).code == 1);
}

TEST_CASE("reduce --out writes the same graph to a file") {
    std::string out_path = scratch_dir() + "/ged-out.col";
    RunResult r = run_cli("reduce --kind ged --out \"" + out_path + "\" " + k1_file());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    vclab::Graph g = vclab::parse_graph_file(out_path);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("gen lemma4 labels the two sides") {
    RunResult r = run_cli("gen lemma4 --n1 1 --n2 1 --delta 1");
    CHECK(r.code == 0);
    vclab::Graph g = vclab::parse_graph_string(r.out);
    CHECK(g.vertex_count() == 57);
    CHECK(count_lines_with_prefix(r.out, "c part V ") == 29);
    CHECK(count_lines_with_prefix(r.out, "c part Vt ") == 28);
    CHECK(run_cli("gen lemma4 --n1 1 --n2 1 --delta 1 --mu 5").code == 1);
}

TEST_CASE("gen check reports feasibility and the degree gap") {
    RunResult ok = run_cli("gen check --n1 1 --n2 1 --delta 1 --samples 50 --seed 3");
    CHECK(ok.code == 0);
    CHECK(ok.out == "feasible true\nproperty4 true\n");

    RunResult bad = run_cli("gen check --n1 1 --n2 1 --delta 1 --mu 5");
    CHECK(bad.code == 3);
    CHECK(bad.out == "feasible false\n");
}

TEST_CASE("verify runs a suite and reports per-check lines") {
    RunResult r = run_cli("verify eq4");
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS] gmdg-size-law") != std::string::npos);
    CHECK(run_cli("verify nosuch").code == 1);
}

TEST_CASE("verify stops cleanly when the budget runs out") {
    RunResult r = run_cli("verify all --budget 0.0001");
    CHECK(r.code == 3);
    CHECK(r.out.find("[STOP]") != std::string::npos);
}

TEST_CASE("batch emits one CSV row per file and operation") {
    RunResult r = run_cli("batch --ops mvc,min-ed " + k2_file() + " " + p3_file());
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "file,n,m,operation,value,millis");
    std::string k2_path = unquote(k2_file());
    std::string p3_path = unquote(p3_file());
    CHECK(lines[1].rfind(k2_path + ",2,1,mvc,1,", 0) == 0);
    CHECK(lines[2].rfind(k2_path + ",2,1,min-ed,2,", 0) == 0);
    CHECK(lines[3].rfind(p3_path + ",3,2,mvc,1,", 0) == 0);
    CHECK(lines[4].rfind(p3_path + ",3,2,min-ed,2,", 0) == 0);
    // the timing column parses as a non-negative number
    double millis = std::stod(lines[1].substr(lines[1].rfind(',') + 1));
    CHECK(millis >= 0.0);

    RunResult empty = run_cli("batch --ops mvc");
    CHECK(empty.code == 0);
    CHECK(empty.out == "file,n,m,operation,value,millis\n");
    CHECK(run_cli("batch --ops nosuch " + k2_file()).code == 1);
}
