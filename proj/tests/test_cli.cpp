// SPDX-License-Identifier: Apache-2.0
#include "relaysim/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("relaysim");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = relaysim::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
    int n = 0;
    for (const char c : text) n += c == '\n';
    return n;
}

// Exit code of the installed binary, for the process-level contract.
int spawn_binary(const std::string& args) {
    const std::string cmd = std::string(RELAYSIM_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("simulate emits one row per SNR point and is deterministic") {
    const std::vector<std::string> args = {
        "simulate", "--scheme", "tb",      "--antennas", "2",      "--mod",  "mpsk:4",
        "--snr-db", "0:25:5",   "--trials", "20000",     "--seed", "7",      "--mode",
        "downlink"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(count_lines(first.out) == 7);  // header + 6 rows
    CHECK(first.out.find("tb,2,4,downlink,0,") != std::string::npos);
}

TEST_CASE("per-scheme results are independent of which schemes share the run") {
    const CliResult combined =
        run({"simulate", "--scheme", "tb", "--scheme", "maxmin", "--antennas", "2", "--mod",
             "mpsk:4", "--snr-db", "5:10:5", "--trials", "20000", "--seed", "3", "--mode",
             "downlink"});
    const CliResult tb_only =
        run({"simulate", "--scheme", "tb", "--antennas", "2", "--mod", "mpsk:4", "--snr-db",
             "5:10:5", "--trials", "20000", "--seed", "3", "--mode", "downlink"});
    const CliResult mm_only =
        run({"simulate", "--scheme", "maxmin", "--antennas", "2", "--mod", "mpsk:4", "--snr-db",
             "5:10:5", "--trials", "20000", "--seed", "3", "--mode", "downlink"});
    CHECK(combined.code == 0);
    std::istringstream tb_stream(tb_only.out), mm_stream(mm_only.out);
    std::string line;
    std::getline(tb_stream, line);  // headers
    std::getline(mm_stream, line);
    while (std::getline(mm_stream, line)) {
        CHECK(combined.out.find(line) != std::string::npos);
    }
    while (std::getline(tb_stream, line)) {
        CHECK(combined.out.find(line) != std::string::npos);
    }
}

TEST_CASE("rows are sorted by scheme then SNR") {
    const CliResult r = run({"simulate", "--scheme", "tb", "--scheme", "stbc", "--scheme",
                             "maxmin", "--antennas", "2", "--snr-db", "0:5:5", "--trials", "8192",
                             "--seed", "1", "--mode", "downlink"});
    CHECK(r.code == 0);
    const auto maxmin_pos = r.out.find("\nmaxmin,");
    const auto stbc_pos = r.out.find("\nstbc,");
    const auto tb_pos = r.out.find("\ntb,");
    CHECK(maxmin_pos < stbc_pos);
    CHECK(stbc_pos < tb_pos);
}

TEST_CASE("unknown scheme, mode, or flag is a usage error") {
    CHECK(run({"simulate", "--scheme", "alamouti", "--snr-db", "0"}).code == 2);
    CHECK(run({"simulate", "--scheme", "tb", "--snr-db", "0", "--mode", "sideways"}).code == 2);
    CHECK(run({"simulate", "--scheme", "tb", "--snr-db", "0:5"}).code == 2);
    CHECK(run({"simulate", "--scheme", "tb", "--mod", "qam:16", "--snr-db", "0"}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("json format carries the same rows") {
    const CliResult r = run({"simulate", "--scheme", "tb", "--antennas", "2", "--snr-db", "5",
                             "--trials", "8192", "--seed", "2", "--mode", "downlink", "--format",
                             "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"scheme\": \"tb\"") != std::string::npos);
    CHECK(r.out.find("\"trials\": 8192") != std::string::npos);
}

TEST_CASE("analyze reports the N=2 ratio degeneracy and N=4 values") {
    const CliResult n2 = run({"analyze", "--scheme", "tb", "--scheme", "maxmin", "--scheme",
                              "stbc", "--antennas", "2", "--snr-db", "0:20:5"});
    CHECK(n2.code == 0);
    CHECK(n2.out.find("asymptotic_ratio a=tb b=maxmin N=2 value=1\n") != std::string::npos);
    CHECK(n2.out.find("asymptotic_ratio a=stbc b=maxmin N=2 value=1\n") != std::string::npos);

    const CliResult n4 = run({"analyze", "--scheme", "stbc", "--antennas", "4", "--snr-db", "10"});
    CHECK(n4.code == 0);
    CHECK(n4.out.find("asymptotic_ratio a=stbc b=maxmin N=4 value=1.33333333") !=
          std::string::npos);
}

TEST_CASE("analyze grid values decrease monotonically in SNR") {
    const CliResult r = run({"analyze", "--scheme", "maxmin", "--antennas", "3", "--snr-db",
                             "0:30:5"});
    CHECK(r.code == 0);
    std::istringstream stream(r.out);
    std::string line;
    std::getline(stream, line);  // header
    double prev = 2.0;
    int rows = 0;
    while (std::getline(stream, line) && line[0] != '#') {
        const auto last_comma = line.rfind(',');
        const auto prev_comma = line.rfind(',', last_comma - 1);
        const double sep = std::stod(line.substr(prev_comma + 1, last_comma - prev_comma - 1));
        CHECK(sep < prev);
        prev = sep;
        ++rows;
    }
    CHECK(rows == 7);
}

TEST_CASE("verify selects criteria and the negative control fails") {
    const CliResult pass = run({"verify", "--only", "5"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("RESULT: PASS") != std::string::npos);

    const CliResult fail = run({"verify", "--only", "5", "--negative-control"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("the installed binary honors the exit-code contract") {
    CHECK(spawn_binary("simulate --scheme nonsense --snr-db 0") == 2);
    CHECK(spawn_binary("analyze --scheme tb --antennas 2 --snr-db 0:10:5") == 0);
    CHECK(spawn_binary("verify --only 5 --negative-control") == 1);
    CHECK(spawn_binary("--help") == 0);
}

TEST_CASE("RELAYSIM_THREADS caps workers without changing results") {
    const std::string args =
        " simulate --scheme maxmin --antennas 2 --snr-db 6:10:2 --trials 50000 --seed 5"
        " --mode e2e --out ";
    const std::string path1 = "/tmp/relaysim_threads_1.csv";
    const std::string path7 = "/tmp/relaysim_threads_7.csv";
    REQUIRE(std::system(("RELAYSIM_THREADS=1 " + std::string(RELAYSIM_BIN) + args + path1 +
                         " >/dev/null 2>&1")
                            .c_str()) == 0);
    REQUIRE(std::system(("RELAYSIM_THREADS=7 " + std::string(RELAYSIM_BIN) + args + path7 +
                         " >/dev/null 2>&1")
                            .c_str()) == 0);
    std::ifstream f1(path1), f7(path7);
    const std::string c1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    const std::string c7((std::istreambuf_iterator<char>(f7)), std::istreambuf_iterator<char>());
    CHECK(!c1.empty());
    CHECK(c1 == c7);
    std::remove(path1.c_str());
    std::remove(path7.c_str());
}

TEST_CASE("simulate can write its output to a file") {
    const std::string path = "/tmp/relaysim_cli_test_out.csv";
    std::remove(path.c_str());
    const CliResult r = run({"simulate", "--scheme", "tb", "--antennas", "1", "--snr-db", "0",
                             "--trials", "8192", "--seed", "1", "--mode", "downlink", "--out",
                             path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char buf[256];
    const std::size_t got = std::fread(buf, 1, sizeof(buf) - 1, f);
    std::fclose(f);
    buf[got] = '\0';
    CHECK(std::string(buf).find("scheme,N,M,mode") == 0);
    std::remove(path.c_str());
}
