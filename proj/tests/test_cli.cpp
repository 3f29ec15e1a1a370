#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "opam/io.hpp"

using namespace opam;
using namespace test_helpers;
namespace fs = std::filesystem;

namespace {

const std::string kCli = OPAM_CLI_PATH;

fs::path work_dir() {
    const auto dir = fs::temp_directory_path() / "opam_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    return std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
}

std::string slurp(const fs::path& p) {
    std::ostringstream out;
    out << std::ifstream(p).rdbuf();
    return out.str();
}

fs::path write_fig_inputs() {
    const auto dir = work_dir();
    write_taskset(fig_taskset(), dir / "fig.json");
    write_arrivals(fig_arrivals(), dir / "fig_arrivals.json");
    write_priorities(PriorityAssignment{{3, 2, 1}}, dir / "fig_pri.json");
    return dir;
}

}  // namespace

TEST_CASE("synth writes valid task sets") {
    const auto dir = work_dir() / "synth";
    fs::remove_all(dir);
    REQUIRE(run("synth --n 8 --gamma 0.4 --seed 3 --count 2 --rate-monotonic --out " +
                dir.string()) == 0);
    const TaskSet ts = read_taskset(dir / "taskset_seed3.json");
    CHECK(ts.size() == 8);
    CHECK(validate_taskset(ts).empty());
    CHECK(fs::exists(dir / "taskset_seed4.json"));
    const auto rm = read_priorities(dir / "taskset_seed3_rm.json");
    CHECK(rm.size() == 8);
}

TEST_CASE("synth rejects invalid parameters") {
    CHECK(run("synth --gamma 1.5 --out " + (work_dir() / "bad").string()) != 0);
}

TEST_CASE("simulate reproduces a hand-checked execution row") {
    const auto dir = write_fig_inputs();
    const auto csv_path = dir / "scenario.csv";
    REQUIRE(run("simulate " + (dir / "fig.json").string() + " --arrivals " +
                (dir / "fig_arrivals.json").string() + " --priorities " +
                (dir / "fig_pri.json").string() + " --out " + csv_path.string()) == 0);
    const std::string csv = slurp(csv_path);
    CHECK(csv.find("2,8,14,15,-1,1") != std::string::npos);
}

TEST_CASE("simulate fails cleanly on missing or invalid inputs") {
    const auto dir = write_fig_inputs();
    CHECK(run("simulate /nonexistent.json --worst-random 1 --horizon 40 --priorities " +
              (dir / "fig_pri.json").string()) != 0);
    std::ofstream(dir / "bad_pri.json") << R"({"priority": [1, 1, 2]})";
    CHECK(run("simulate " + (dir / "fig.json").string() + " --worst-random 1 --horizon 40 " +
              "--priorities " + (dir / "bad_pri.json").string()) != 0);
}

TEST_CASE("optimize produces front, cycle log, and manifest for every method") {
    const auto dir = write_fig_inputs();
    for (const std::string method : {"opam", "rs", "seq"}) {
        const auto out = dir / ("run_" + method);
        fs::remove_all(out);
        std::string cmd = "optimize " + (dir / "fig.json").string() + " --method " + method +
                          " --cycles 3 --ps-a 4 --ps-p 4 --horizon 40 --external 4 --seed 5 " +
                          "--out " + out.string();
        if (method == "seq") cmd += " --budget 500";
        REQUIRE(run(cmd) == 0);
        const auto front = read_front(out / "front.json");
        CHECK_FALSE(front.members.empty());
        CHECK(fs::exists(out / "cycles.csv"));
        CHECK(fs::exists(out / "manifest.json"));
    }
}

TEST_CASE("compare emits indicator rows and statistics") {
    const auto dir = write_fig_inputs();
    // two two-member groups reusing the same fronts: A12 must be 0.5
    BestFront f1, f2;
    f1.members = {{PriorityAssignment{{3, 2, 1}}, -0.5, 1.0}};
    f2.members = {{PriorityAssignment{{2, 3, 1}}, -0.25, 0.0}};
    write_front(f1, dir / "fa1.json", "opam", 1);
    write_front(f2, dir / "fa2.json", "opam", 2);
    const auto out = dir / "indicators.csv";
    REQUIRE(run("compare --group-a " + (dir / "fa1.json").string() + " " +
                (dir / "fa2.json").string() + " --group-b " + (dir / "fa1.json").string() + " " +
                (dir / "fa2.json").string() + " --out " + out.string()) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.find("method,subject,seed,hv,gd_plus,delta") != std::string::npos);
    CHECK(csv.find("hv_a12,0.5") != std::string::npos);
}

TEST_CASE("optimize is reproducible through the CLI") {
    const auto dir = write_fig_inputs();
    const auto out1 = dir / "repro1";
    const auto out2 = dir / "repro2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    const std::string base = "optimize " + (dir / "fig.json").string() +
                             " --cycles 2 --ps-a 4 --ps-p 4 --horizon 40 --external 4 --seed 9 ";
    REQUIRE(run(base + "--out " + out1.string()) == 0);
    REQUIRE(run(base + "--out " + out2.string()) == 0);
    CHECK(slurp(out1 / "front.json") == slurp(out2 / "front.json"));
}
