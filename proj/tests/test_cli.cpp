#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "digitop/io.hpp"

namespace {

namespace fs = std::filesystem;

struct CmdResult {
    int exit_code;
    std::string out;
};

// Runs the built binary, capturing stdout; stderr is discarded.
CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DIGITOP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "digitop_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string count_hashes(const std::string& s) {
    return std::to_string(std::count(s.begin(), s.end(), '#'));
}

}  // namespace

TEST_CASE("gen writes the documented grids") {
    CmdResult r = run_cli("gen full-square --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "##\n##\n");

    r = run_cli("gen square-snake --n 6");
    CHECK(r.exit_code == 0);
    CHECK(count_hashes(r.out) == "31");

    // invalid n for the snake is a semantic error
    r = run_cli("gen square-snake --n 5");
    CHECK(r.exit_code == 2);

    r = run_cli("gen borromean --n 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("gen square-annulus writes the X and Y files") {
    const fs::path dir = work_dir();
    const std::string prefix = (dir / "ann").string();
    const CmdResult r = run_cli("gen square-annulus --n 2 -o " + prefix);
    CHECK(r.exit_code == 0);

    const digitop::DigitalImage x =
        digitop::io::parse_image_file(prefix + "-X.coords", digitop::io::Format::Coords, 1);
    const digitop::DigitalImage y =
        digitop::io::parse_image_file(prefix + "-Y.coords", digitop::io::Format::Coords, 1);
    CHECK(x.size() == 16);
    CHECK(y.size() == 15);
    CHECK(x.contains(digitop::Point{2, 2}));
    CHECK_FALSE(y.contains(digitop::Point{2, 2}));

    // grids cannot hold the origin-centered ring
    CHECK(run_cli("gen square-annulus --n 2 --format grid -o " + prefix).exit_code == 2);
    // paired families need an output prefix
    CHECK(run_cli("gen square-annulus --n 2").exit_code == 2);
}

TEST_CASE("dist reproduces the worked examples end to end") {
    const fs::path dir = work_dir();
    const std::string prefix = (dir / "rc").string();
    REQUIRE(run_cli("gen rect-and-c --n 5 -o " + prefix).exit_code == 0);
    const std::string a = prefix + "-A.grid";
    const std::string b = prefix + "-B.grid";

    CmdResult r = run_cli("dist --metric hausdorff --p 1 " + a + " " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    const fs::path cpath = dir / "c.grid";
    REQUIRE(run_cli("gen baseline --n 5 -o " + cpath.string()).exit_code == 0);
    r = run_cli("dist --metric hausdorff-path --u 1 --ambient " + b + " " + b + " " +
                cpath.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7\n");
    r = run_cli("dist --metric hausdorff-path --u 2 --ambient " + b + " " + b + " " +
                cpath.string());
    CHECK(r.out == "6\n");

    const std::string q = (dir / "q.grid").string();
    const std::string s = (dir / "s.grid").string();
    REQUIRE(run_cli("gen full-square --n 6 -o " + q).exit_code == 0);
    REQUIRE(run_cli("gen square-snake --n 6 -o " + s).exit_code == 0);
    r = run_cli("dist --metric diam-diff-path --u 1 " + q + " " + s);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "18\n");

    // weighted sum, quoted so the shell leaves the '*' alone
    r = run_cli("dist --metric '1*hausdorff,1*diam-diff' --p 1 " + a + " " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run_cli("dist --metric hausdorff --p 1 --witness " + a + " " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "1\n");
    CHECK(r.out.find("witness_a=") != std::string::npos);
}

TEST_CASE("dist prints inf for disconnected diameters and 9-decimal reals") {
    const fs::path dir = work_dir();
    const fs::path gap = dir / "gap.grid";
    {
        std::ofstream out(gap);
        out << "#.#\n";  // disconnected under c_1
    }
    const std::string line = (dir / "line.grid").string();
    REQUIRE(run_cli("gen baseline --n 1 -o " + line).exit_code == 0);
    CmdResult r = run_cli("dist --metric diam-diff-path --u 1 " + gap.string() + " " + line);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "inf\n");
    // both sides infinite cancel to zero
    r = run_cli("dist --metric diam-diff-path --u 1 " + gap.string() + " " + gap.string());
    CHECK(r.out == "0\n");

    const fs::path origin = dir / "origin.grid";
    const fs::path diag = dir / "diag.grid";
    {
        std::ofstream out(origin);
        out << "#\n";
    }
    {
        std::ofstream out(diag);
        out << ".#\n..\n";  // the single point (1,1)
    }
    r = run_cli("dist --metric hausdorff --p 2 " + origin.string() + " " + diag.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1.414213562\n");
}

TEST_CASE("dist computes the continuity metric, honoring its budget") {
    const fs::path dir = work_dir();
    const std::string prefix = (dir / "annc").string();
    REQUIRE(run_cli("gen square-annulus --n 2 -o " + prefix).exit_code == 0);
    const std::string x = prefix + "-X.coords";
    const std::string y = prefix + "-Y.coords";

    CmdResult r = run_cli("dist --metric continuity --p 1 " + x + " " + y);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    // an impossible budget is fatal for dist
    r = run_cli("dist --metric continuity --p 1 --budget 2 " + x + " " + y);
    CHECK(r.exit_code == 3);
    // and not a valid term inside a sum
    r = run_cli("dist --metric '1*continuity,1*hausdorff' " + x + " " + y);
    CHECK(r.exit_code == 2);
}

TEST_CASE("dist error paths map to the documented exit codes") {
    const fs::path dir = work_dir();
    const fs::path bad = dir / "bad.grid";
    {
        std::ofstream out(bad);
        out << "#.\n#\n";  // ragged
    }
    const std::string q = (dir / "q2.grid").string();
    REQUIRE(run_cli("gen full-square --n 2 -o " + q).exit_code == 0);

    CHECK(run_cli("dist --metric hausdorff " + bad.string() + " " + q).exit_code == 1);
    CHECK(run_cli("dist --metric hausdorff " + (dir / "nope.grid").string() + " " + q)
              .exit_code == 1);

    // ambient that does not contain the arguments: semantic error
    const std::string tiny = (dir / "tiny.grid").string();
    REQUIRE(run_cli("gen baseline --n 1 -o " + tiny).exit_code == 0);
    CHECK(run_cli("dist --metric hausdorff-path --ambient " + tiny + " " + q + " " + q)
              .exit_code == 2);
    // hausdorff-path without an ambient
    CHECK(run_cli("dist --metric hausdorff-path " + q + " " + q).exit_code == 2);
    CHECK(run_cli("dist --metric warp-factor " + q + " " + q).exit_code == 2);
}

TEST_CASE("verify-paper passes, deterministically") {
    const CmdResult first = run_cli("verify-paper");
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("FAIL") == std::string::npos);
    CHECK(first.out.find("square-snake.s-kappa 18 18 PASS") != std::string::npos);
    CHECK(first.out.find("square-annulus.delta-lb 4 >=3 PASS") != std::string::npos);

    const CmdResult second = run_cli("verify-paper");
    CHECK(first.out == second.out);  // byte-identical report
}

TEST_CASE("verify-paper recomputes expectations from the closed forms") {
    const CmdResult r = run_cli("verify-paper --n-snake 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("square-snake.diam-s 16 16 PASS") != std::string::npos);
    CHECK(r.out.find("square-snake.s-kappa 8 8 PASS") != std::string::npos);
}

TEST_CASE("verify-paper self-test surfaces failures") {
    const CmdResult r = run_cli("verify-paper --self-test-corrupt");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("square-snake.diam-s 30 31 FAIL") != std::string::npos);
}

TEST_CASE("verify-paper reports budget-starved searches as SKIPPED") {
    const CmdResult r = run_cli("verify-paper --budget 2");
    CHECK(r.exit_code == 0);  // skipped is not failed
    CHECK(r.out.find("square-annulus.delta-lb budget-exceeded >=3 SKIPPED") !=
          std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
