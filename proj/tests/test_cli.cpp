#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rsurf/graph_io.hpp"
#include "rsurf/standard_graphs.hpp"

namespace fs = std::filesystem;
using namespace rsurf;

namespace {

const std::string cli = RSURF_CLI_PATH;

fs::path scratch() {
    static const fs::path dir = [] {
        const auto p = fs::temp_directory_path() / ("rsurf_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = "\"" + cli + "\" " + args;
    cmd += stdout_file.empty() ? " >/dev/null" : " >\"" + stdout_file.string() + "\"";
    cmd += " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_graph(const std::string& name, const RibbonGraph& g) {
    const auto p = scratch() / name;
    write_graph_file(p, g);
    return p;
}

} // namespace

TEST_CASE("sample writes a valid, reproducible graph") {
    const auto a = scratch() / "a.json";
    const auto b = scratch() / "b.json";
    CHECK(run("sample --n 4 --seed 42 --out \"" + a.string() + "\"") == 0);
    CHECK(run("sample --n 4 --seed 42 --out \"" + b.string() + "\"") == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(read_graph_file(a).n() == 4);

    const auto c = scratch() / "c.json";
    CHECK(run("sample --n 4 --seed 42 --trial 1 --out \"" + c.string() + "\"") == 0);
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("sample --n 0 --seed 1") == 2);
    CHECK(run("sample --n 4 --seed 1 --bogus") == 2);
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("census --trials 0") == 2);
    CHECK(run("isolation --n-list 50,50,100 --trials 10") == 2);
    CHECK(run("isolation --n-list 50,100 --trials 10") == 2);
    CHECK(run("cusps --L 1 --trials 10") == 2);
    CHECK(run("analyze x --format yaml") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("data errors exit with 1 and name the violation") {
    const auto bad = scratch() / "bad.json";
    {
        std::ofstream out(bad);
        out << R"({"format_version":1,"n":1,"sigma":[1,2,0,4,5,3],"alpha":[0,4,5,3,1,2]})" << '\n';
    }
    const auto err = scratch() / "bad.err";
    const std::string cmd = "\"" + cli + "\" analyze \"" + bad.string() + "\" >/dev/null 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(slurp(err).find("alpha has fixed point at dart 0") != std::string::npos);

    CHECK(run("analyze \"" + (scratch() / "missing.json").string() + "\"") == 1);
    const auto garbage = scratch() / "garbage.json";
    {
        std::ofstream out(garbage);
        out << "not json";
    }
    CHECK(run("cheeger \"" + garbage.string() + "\"") == 1);
    CHECK(run("sample --n 3 --seed 1 --out /nonexistent-dir/x.json") == 1);
}

TEST_CASE("analyze the cube") {
    const auto cube = write_graph("cube.json", graphs::cube_planar());
    const auto before = slurp(cube);
    const auto out = scratch() / "cube.out";
    REQUIRE(run("analyze \"" + cube.string() + "\" --max-cycle-len 4 --L 4", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["format_version"] == 1);
    CHECK(j["config"]["max_cycle_len"] == 4);
    CHECK(j["config"]["L"] == 4);
    CHECK(j["summary"]["genus"] == 0);
    CHECK(j["summary"]["cusps"] == 6);
    CHECK(j["girth"] == 4);
    CHECK(j["cheeger"]["value"]["num"] == 1);
    CHECK(j["cheeger"]["value"]["den"] == 1);
    CHECK(j["large_canonical_cusps"] == true);
    CHECK(slurp(cube) == before);

    const auto text = scratch() / "cube.txt";
    REQUIRE(run("analyze \"" + cube.string() + "\" --format text", text) == 0);
    const auto t = slurp(text);
    CHECK(t.find("genus: 0\n") != std::string::npos);
    CHECK(t.find("cusps: 6\n") != std::string::npos);
    CHECK(t.find("girth: 4\n") != std::string::npos);
    CHECK(t.find("cheeger: 1/1") != std::string::npos);
}

TEST_CASE("analyze the one-face theta graph") {
    const auto theta = write_graph("theta.json", graphs::theta_one_face());
    const auto out = scratch() / "theta.out";
    REQUIRE(run("analyze \"" + theta.string() + "\"", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["summary"]["genus"] == 1);
    CHECK(j["summary"]["cusps"] == 1);
    CHECK(j["summary"]["cusp_lengths"] == nlohmann::json::array({6}));
}

TEST_CASE("analyze a large graph reports spectral bounds") {
    const auto big = scratch() / "big.json";
    REQUIRE(run("sample --n 30 --seed 3 --out \"" + big.string() + "\"") == 0);
    const auto out = scratch() / "big.out";
    REQUIRE(run("analyze \"" + big.string() + "\" --max-cycle-len 4", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK_FALSE(j["cheeger"].contains("value"));
    if (j["summary"]["components"] == 1) {
        CHECK(j["cheeger"].contains("interval"));
        CHECK(j["cheeger"]["method"] == "spectral");
    }
}

TEST_CASE("geodesics and cheeger subcommands") {
    const auto k4 = write_graph("k4.json", graphs::k4_planar());
    const auto out = scratch() / "k4.csv";
    REQUIRE(run("geodesics \"" + k4.string() + "\" --max-len 4 --format csv", out) == 0);
    const auto csv = slurp(out);
    CHECK(csv.find("cycle_id,combinatorial_length,trace_digits,geodesic_length\n") != std::string::npos);
    CHECK(csv.find("0,4,7,") != std::string::npos);

    const auto ch = scratch() / "k4.cheeger";
    REQUIRE(run("cheeger \"" + k4.string() + "\"", ch) == 0);
    const auto j = nlohmann::json::parse(slurp(ch));
    CHECK(j["cheeger"]["value"]["num"] == 2);
    CHECK(j["threshold"]["verdict"] == "above");
}

TEST_CASE("campaign commands embed their config and ignore the worker count") {
    const auto a = scratch() / "census1.csv";
    const auto b = scratch() / "census4.csv";
    REQUIRE(run("census --n 20 --trials 200 --seed 7 --max-cycle-len 6 --workers 1 --out \"" + a.string() + "\"") ==
            0);
    REQUIRE(run("census --n 20 --trials 200 --seed 7 --max-cycle-len 6 --workers 4 --out \"" + b.string() + "\"") ==
            0);
    const auto csv = slurp(a);
    CHECK(csv == slurp(b));
    CHECK(csv.find("# n=20\n") != std::string::npos);
    CHECK(csv.find("# trials=200\n") != std::string::npos);
    for (int i = 1; i <= 6; ++i) {
        CHECK(csv.find("\nX," + std::to_string(i) + ",0,") != std::string::npos);
        CHECK(csv.find("\nY," + std::to_string(i) + ",0,") != std::string::npos);
    }

    const auto cusps = scratch() / "cusps.json";
    REQUIRE(run("cusps --n 30 --trials 100 --L 7 --format json", cusps) == 0);
    const auto j = nlohmann::json::parse(slurp(cusps));
    CHECK(std::abs(j["target"].get<double>() - 0.0863) < 1e-4);
    CHECK(std::abs(j["comparator"].get<double>() - 0.0936) < 1e-4);
    CHECK(j["config"]["L"] == 7);

    const auto iso = scratch() / "iso.csv";
    REQUIRE(run("isolation --n-list 10,20,40,80 --l1 3 --l2 3 --d 2 --trials 30", iso) == 0);
    const auto t = slurp(iso);
    std::istringstream in(t);
    std::string line;
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            ++rows;
    CHECK(rows == 5);
    CHECK(t.find("# l1=3\n") != std::string::npos);
}
