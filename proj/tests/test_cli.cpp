#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "vf-cli-test";

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the CLI with `args` inside the work directory, stdout to out.txt.
int run(const std::string& args, const std::string& env = "") {
    std::string cmd = "cd '" + kWork.string() + "' && " + env + " '" VF_CLI "' " + args + " > out.txt 2> err.txt";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string out() { return read(kWork / "out.txt"); }

struct Fixture {
    Fixture() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
        write(kWork / "dt.json", R"({"kind":"vertex","theory":"DT","boundary":{"leg":[1]},"qorder":2,"seed":1})");
    }
    ~Fixture() { fs::remove_all(kWork); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "compute and cache") {
    REQUIRE(run("compute dt.json") == 0);
    const std::string first = out();
    CHECK(fs::exists(kWork / ".vertexforge-cache"));
    REQUIRE(run("compute dt.json") == 0);
    CHECK(out() == first);
    REQUIRE(run("compute dt.json --no-cache") == 0);
    CHECK(out() == first);
    REQUIRE(run("compute dt.json", "VERTEXFORGE_CACHE=envcache") == 0);
    CHECK(fs::exists(kWork / "envcache"));
    CHECK(out() == first);
    REQUIRE(run("compute - < dt.json --cache c2") == 0);
    CHECK(out() == first);
    CHECK(run("compute dt.json --format csv") == 0);
    CHECK(out().rfind("q_power,key,value\n", 0) == 0);
}

TEST_CASE_FIXTURE(Fixture, "config file and flag precedence") {
    write(kWork / "vf.conf", "# defaults\nformat = csv\ncache = confcache\n");
    REQUIRE(run("compute dt.json --config vf.conf") == 0);
    CHECK(out().rfind("q_power", 0) == 0);
    CHECK(fs::exists(kWork / "confcache"));
    REQUIRE(run("compute dt.json --config vf.conf --format json") == 0);
    CHECK(out().front() == '{');
    write(kWork / "bad.conf", "colour = red\n");
    CHECK(run("compute dt.json --config bad.conf") == 2);
}

TEST_CASE_FIXTURE(Fixture, "invalid input exits 2") {
    write(kWork / "broken.json", "{\"kind\": ");
    CHECK(run("compute broken.json") == 2);
    write(kWork / "field.json", R"({"kind":"vertex","boundary":{"fixed":[1,2]}})");
    CHECK(run("compute field.json") == 2);
    CHECK(read(kWork / "err.txt").find("/boundary") != std::string::npos);
    CHECK(run("check egl --params '{\"n\":-1}'") == 2);
    write(kWork / "spec.json", R"({"name":"egl","n":-1})");
    CHECK(run("check --spec spec.json") == 2);
    CHECK(run("check egl --params '{'") == 2);
    CHECK(run("check no-such-check") == 2);
    CHECK(run("compute dt.json --format xml") == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE_FIXTURE(Fixture, "check verdicts") {
    CHECK(run("check slices") == 0);
    CHECK(out().find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(out().find("seconds") == std::string::npos);
    CHECK(run("check slices --timing") == 0);
    CHECK(out().find("seconds") != std::string::npos);
    // a wrong column sign breaks the factorization
    CHECK(run("check simple --convention '{\"pt_column_sign\":1}'") == 1);
    CHECK(run("check dtpt0") == 3);
    CHECK(run("check measure-ratio --format csv") == 0);
    CHECK(out().rfind("check,case", 0) == 0);
}
