#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Integration tests that drive the CLI binary named by PNR_CLI.

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const char* cli_path() {
    const char* cli = std::getenv("PNR_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "PNR_CLI must point at the pnr binary");
    return cli;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "pnr_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(++counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    const std::string cmd = std::string(cli_path()) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("quality prints a csv table to stdout") {
    const CliResult r =
        run_cli("quality --detector spatial --elements 8 --eta 1.0 --dark 0 --set full --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,q,witness_kind,witness,truncation_bound,tail_verified\n") == 0);
    CHECK(r.out.find("3,0.65625,fock,3,0,true") != std::string::npos);
}

TEST_CASE("unknown flags exit with code 2 and usage on stderr") {
    const CliResult r = run_cli("quality --frobnicate 3");
    CHECK(r.exit_code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("missing subcommand exits with code 2") {
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("invalid detector parameters exit with code 2") {
    const CliResult r = run_cli("quality --detector spatial --elements 0 --eta 1.0 --n 1");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("invalid arguments") != std::string::npos);
}

TEST_CASE("infeasible scaling exits with code 3") {
    const CliResult r = run_cli("scaling --eta 0.9 --q 0.5 --n 10 --set full");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("no solution") != std::string::npos);
}

TEST_CASE("unsatisfiable truncation exits with code 4") {
    const CliResult r = run_cli(
        "quality --detector spatial --elements 4 --eta 0.9 --set poisson --mu-max 40"
        " --m-max 20 --n 2");
    CHECK(r.exit_code == 4);
    CHECK(r.err.find("truncation") != std::string::npos);
}

TEST_CASE("json format carries the csv literals") {
    const CliResult r = run_cli(
        "quality --detector spatial --elements 8 --eta 1.0 --set full --n 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.front() == '[');
    CHECK(r.out.find("\"q\": 0.65625") != std::string::npos);
    CHECK(r.out.find("\"tail_verified\": true") != std::string::npos);
}

TEST_CASE("file output writes a sibling manifest and honours config reruns") {
    const fs::path dir = fs::temp_directory_path() / "pnr_cli_manifest";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path csv = dir / "sweep.csv";

    const CliResult first = run_cli(
        "dark-sweep --detector spatial --elements 4 --eta 0.9 --dark 0..0.02:0.01 --n 1..2"
        " --set full --out " + csv.string());
    REQUIRE(first.exit_code == 0);
    REQUIRE(fs::exists(csv));
    const fs::path manifest = dir / "sweep.csv.manifest.json";
    REQUIRE(fs::exists(manifest));
    const std::string mbody = slurp(manifest);
    CHECK(mbody.find("\"command\": \"dark-sweep\"") != std::string::npos);
    CHECK(mbody.find("\"dark\":\"0..0.02:0.01\"") != std::string::npos);

    // rerun from the manifest, overriding one flag
    const fs::path csv2 = dir / "rerun.csv";
    const CliResult rerun =
        run_cli("dark-sweep --config " + manifest.string() + " --out " + csv2.string());
    REQUIRE(rerun.exit_code == 0);
    CHECK(slurp(csv) == slurp(csv2));

    // a manifest from another subcommand is rejected
    const CliResult wrong = run_cli("curve --config " + manifest.string());
    CHECK(wrong.exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("validate exits cleanly on an honest response matrix") {
    const CliResult r = run_cli(
        "validate --detector spatial --elements 4 --eta 0.8 --dark 0.01 --n 4 --m 0..3"
        " --trials 20000 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m,class,analytic,empirical,z,flagged\n") == 0);
}

TEST_CASE("validate exits with code 1 when deviations exceed the threshold") {
    // an absurdly tight threshold turns statistical noise into flags
    const CliResult r = run_cli(
        "validate --detector spatial --elements 4 --eta 0.8 --dark 0.01 --n 4 --m 2"
        " --trials 20000 --seed 5 --z-threshold 0.0001");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("deviate") != std::string::npos);
}

TEST_CASE("loop subcommand scans the exit probability") {
    const CliResult r = run_cli(
        "loop --exit-prob 0.2..0.6:0.2 --survival 0.95 --max-loops 8 --eta 0.9 --dark 0"
        " --n 1..2 --set full");
    CHECK(r.exit_code == 0);
    // header plus 3 x 2 rows
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 7);
}

TEST_CASE("version flag reports the library version") {
    const CliResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}
