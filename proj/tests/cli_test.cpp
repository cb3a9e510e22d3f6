#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "skelgraph/serialize.hpp"
#include "skelgraph/vspace.hpp"

namespace fs = std::filesystem;

namespace {

const char* cli = SKELGRAPH_CLI_PATH;

int run(const std::string& args) {
    const std::string cmd = std::string(cli) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("skelgraph-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("build writes canonical bytes, identical across reruns") {
    TempDir tmp;
    const std::string out = " --out " + tmp.path.string();
    REQUIRE(run("build --kind ig --q 3 --n 2 --format json" + out) == 0);
    const std::string first = slurp(tmp.path / "ig_q3_n2.json");
    CHECK(first == skelgraph::canonical_bytes(
                       skelgraph::graph_to_json(skelgraph::build_ig(3, 2))));
    REQUIRE(run("build --kind ig --q 3 --n 2 --format json" + out) == 0);
    CHECK(slurp(tmp.path / "ig_q3_n2.json") == first);

    for (const char* kind : {"ug", "zdg-poset", "ring-zdg", "L", "dualL", "boolean-v"}) {
        REQUIRE(run(std::string("build --kind ") + kind + " --q 2 --n 2" + out) == 0);
        auto parsed = nlohmann::json::parse(
            slurp(tmp.path / (std::string(kind) + "_q2_n2.json")));
        CHECK((parsed.contains("vertices") || parsed.contains("elements")));
    }

    REQUIRE(run("build --kind ug --q 2 --n 2 --format dot" + out) == 0);
    const std::string dot = slurp(tmp.path / "ug_q2_n2.dot");
    CHECK(dot.rfind("graph", 0) == 0);
}

TEST_CASE("verify exits 0 on a passing theorem") {
    CHECK(run("verify --theorem igv --q 2 --n 3") == 0);
    CHECK(run("verify --theorem chain-replace") == 0);
}

TEST_CASE("sweep writes a deterministic machine-readable report") {
    TempDir tmp;
    const std::string cmd = "sweep --grid 2:1-2 --out " + tmp.path.string();
    REQUIRE(run(cmd) == 0);
    const std::string report = slurp(tmp.path / "report.json");
    auto parsed = nlohmann::json::parse(report);
    CHECK(parsed["failures"] == 0);
    CHECK(parsed["checks"].size() == 21);
    const std::string table = slurp(tmp.path / "report.txt");
    CHECK(!table.empty());
    REQUIRE(run(cmd) == 0);
    CHECK(slurp(tmp.path / "report.json") == report);
    CHECK(slurp(tmp.path / "report.txt") == table);
}

TEST_CASE("an empty grid sweeps nothing and succeeds") {
    CHECK(run("sweep --grid :") == 0);
    CHECK(run("sweep --grid 2:") == 0);
}

TEST_CASE("configuration errors exit with code 2") {
    CHECK(run("build --kind nosuch --q 2 --n 2") == 2);
    CHECK(run("build --kind ig --q 6 --n 2") == 2);
    CHECK(run("verify --theorem nosuch --q 2 --n 2") == 2);
    CHECK(run("sweep --grid bogus") == 2);
    CHECK(run("sweep --grid 6:1") == 2);
    CHECK(run("frobnicate") == 2);
}
