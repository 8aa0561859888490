#include "ncq/cli.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace ncq;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result run_in_process(std::vector<const char*> args) {
    args.insert(args.begin(), "ncq");
    std::ostringstream out, err;
    Result r;
    try {
        auto cfg = cli::parse_args(static_cast<int>(args.size()), args.data(), out);
        r.code = cfg ? cli::run(*cfg, out, err) : 0;
    } catch (const BadConfig& e) {
        r.code = 2;
        err << e.what();
    }
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Runs the built executable; stdout only, stderr discarded.
Result run_tool(const std::string& args) {
    Result r;
    const std::string cmd = std::string(NCQ_TOOL) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("ncq_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::size_t count_lines(const std::string& s, const std::string& prefix) {
    std::istringstream in(s);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.starts_with(prefix);
    return n;
}

}  // namespace

TEST_CASE("ranges and dims") {
    CHECK(cli::parse_range("0..6") == std::pair{0, 6});
    CHECK(cli::parse_range("3") == std::pair{3, 3});
    CHECK_THROWS_AS(cli::parse_range("5..2"), BadConfig);
    CHECK_THROWS_AS(cli::parse_range("a..b"), BadConfig);
    CHECK(cli::parse_dims("1,2,4") == std::vector<std::size_t>{1, 2, 4});
    CHECK_THROWS_AS(cli::parse_dims("0"), BadConfig);
}

TEST_CASE("argument parsing") {
    std::ostringstream sink;
    const char* argv[] = {"ncq", "verify", "--filter", "thm_cv_*", "--trials", "4", "--seed", "9",
                          "--dims", "2,3", "--n", "1..2", "--family", "ScalarCommutative", "--format", "jsonl"};
    auto cfg = cli::parse_args(16, argv, sink);
    REQUIRE(cfg);
    CHECK(cfg->command == cli::Command::Verify);
    CHECK(cfg->filter == "thm_cv_*");
    CHECK(cfg->trials == 4);
    CHECK(cfg->seed == 9);
    CHECK(cfg->dims == std::vector<std::size_t>{2, 3});
    CHECK(cfg->n_lo == 1);
    CHECK(cfg->n_hi == 2);
    CHECK(cfg->family == FamilyName::ScalarCommutative);
    CHECK(cfg->format == cli::Format::Jsonl);

    const char* bad[] = {"ncq", "verify", "--trials", "many"};
    CHECK_THROWS_AS(cli::parse_args(4, bad, sink), BadConfig);
    const char* none[] = {"ncq"};
    CHECK_THROWS_AS(cli::parse_args(1, none, sink), BadConfig);
    const char* help[] = {"ncq", "--help"};
    CHECK_FALSE(cli::parse_args(2, help, sink));
}

TEST_CASE("list prints the catalog") {
    auto r = run_in_process({"list", "--format", "jsonl"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out, "{\"id\":") >= 30);
    auto t = run_tool("list");
    CHECK(t.code == 0);
    CHECK(count_lines(t.out, "thm_") >= 10);
}

TEST_CASE("eval of a scalar terminating series") {
    auto path = write_temp("2f1.json", R"({
  "family": "OrdinaryI",
  "uppers": [{"kind": "rational", "dim": 1, "entries": [["1"]]},
             {"kind": "rational", "dim": 1, "entries": [["-1"]]}],
  "lowers": [{"kind": "rational", "dim": 1, "entries": [["2"]]}],
  "argument": {"kind": "rational", "dim": 1, "entries": [["1"]]}
})");
    auto r = run_tool("eval --input " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");
    auto j = run_in_process({"eval", "--input", path.c_str(), "--format", "jsonl"});
    CHECK(j.code == 0);
    CHECK(j.out.find(R"("terminating":true)") != std::string::npos);
    CHECK(j.out.find(R"("terms":2)") != std::string::npos);
}

TEST_CASE("eval of a truncated matrix series") {
    auto path = write_temp("geom.json", R"({
  "uppers": [{"kind": "rational", "dim": 2, "entries": [["1", "0"], ["0", "1"]]}],
  "lowers": [],
  "argument": {"kind": "rational", "dim": 2, "entries": [["1/2", "0"], ["0", "1/3"]]},
  "truncation": {"max_terms": 3}
})");
    auto r = run_in_process({"eval", "--input", path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out == "[7/4, 0]\n[0, 13/9]\n");
    auto refused = write_temp("geom2.json", R"({
  "uppers": [{"kind": "rational", "dim": 1, "entries": [["1"]]}],
  "argument": {"kind": "rational", "dim": 1, "entries": [["1/2"]]}
})");
    CHECK(run_in_process({"eval", "--input", refused.c_str()}).code == 2);
}

TEST_CASE("malformed input exits with code 2") {
    auto path = write_temp("bad.json", "{\n  \"uppers\": [\n    {\"kind\": \"rational\",, \"dim\": 1}\n  ]\n}");
    auto r = run_in_process({"eval", "--input", path.c_str()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(run_tool("eval --input " + path).code == 2);
    CHECK(run_in_process({"eval", "--input", "/nonexistent/spec.json"}).code == 2);
    auto mixed = write_temp("mixed.json", R"j({
  "uppers": [{"kind": "rational", "dim": 1, "entries": [["1"]]},
             {"kind": "complex", "dim": 1, "entries": [["(1,0)"]]}],
  "lowers": [{"kind": "rational", "dim": 1, "entries": [["2"]]}]
})j");
    CHECK(run_in_process({"eval", "--input", mixed.c_str()}).code == 2);
    CHECK(run_tool("verify --trials -1").code == 2);
    CHECK(run_tool("frobnicate").code == 2);
}

TEST_CASE("verify the Chu-Vandermonde cases") {
    auto r = run_tool("verify --filter 'thm_cv_*' --trials 20 --dims 1,2 --n 0..6 --seed 1");
    CHECK(r.code == 0);
    // three cases, 20 trials, 2 dims, 7 values of n
    CHECK(count_lines(r.out, "PASS ") == 3 * 20 * 2 * 7);
    CHECK(r.out.find("fail=0") != std::string::npos);
}

TEST_CASE("jsonl output is byte-identical across runs") {
    const std::string args = "verify --filter 'thm_qcv_*,micro_*,lem_add_*' --trials 3 --dims 1,2,3 --n 0..3 "
                             "--seed 77 --format jsonl";
    auto a = run_tool(args + " --threads 1");
    auto b = run_tool(args + " --threads 3");
    CHECK(a.code == 0);
    CHECK_FALSE(a.out.empty());
    CHECK(a.out == b.out);
    CHECK(count_lines(a.out, "{\"id\":") > 100);
    auto c = run_tool("verify --filter 'thm_qcv_*,micro_*,lem_add_*' --trials 3 --dims 1,2,3 --n 0..3 --seed 78 "
                      "--format jsonl");
    CHECK(a.out != c.out);
}

TEST_CASE("unknown filters produce an empty run") {
    auto r = run_in_process({"verify", "--filter", "zzz*", "--format", "jsonl"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("summary: 0 reports") != std::string::npos);
}
