#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "hameig/json_io.hpp"

using namespace hameig;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(HAMEIG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spectrum prints the eigenvalues in order") {
    const CliResult result = run_cli("spectrum -n 2 -q 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "4 1 -2\n");
}

TEST_CASE("construct dual, check-eigen, reduce, classify round-trip") {
    const CliResult construct = run_cli(
        "construct dual -n 2 -q 3 --i 1 --k 0 --j 2 --m 0 --c 1 -o cli_dual.json");
    CHECK(construct.exit_code == 0);

    const VertexFunction f = load_function("cli_dual.json");
    const std::vector<int> expected = {0, -1, -1, 1, 0, 0, 1, 0, 0};
    for (std::int64_t x = 0; x < 9; ++x) {
        CHECK(f[x] == Rational(expected[static_cast<std::size_t>(x)]));
    }

    const CliResult check = run_cli("check-eigen cli_dual.json --eigen-m 1");
    CHECK(check.exit_code == 0);
    CHECK(contains(check.output, "pass"));

    const CliResult reduce =
        run_cli("reduce cli_dual.json --i 1 --k 0 --m 1 -o cli_reduced.json");
    CHECK(reduce.exit_code == 0);
    const VertexFunction g = load_function("cli_reduced.json");
    CHECK(g.params() == GraphParams(1, 3));
    for (std::int64_t t = 0; t < g.size(); ++t) {
        CHECK(g[t] == Rational(1));
    }

    const CliResult classify = run_cli("classify cli_dual.json");
    CHECK(classify.exit_code == 0);
    const json form = json::parse(classify.output);
    CHECK(form.at("form") == "dual_layer");
    CHECK(form.at("i") == 1);
    CHECK(form.at("k") == 0);
    CHECK(form.at("j") == 2);
    CHECK(form.at("m") == 0);
    CHECK(form.at("c") == "1");

    std::remove("cli_dual.json");
    std::remove("cli_reduced.json");
}

TEST_CASE("negative rationals reach construct through --c") {
    const CliResult construct = run_cli(
        "construct single -n 2 -q 4 --i 2 --k 3 --c -3/2 -o cli_single.json");
    CHECK(construct.exit_code == 0);
    const VertexFunction f = load_function("cli_single.json");
    CHECK(support_size(f) == 4);  // q^(n-1)

    // The single layer fails the lambda_1 eigencheck: verification exit 1.
    const CliResult check = run_cli("check-eigen cli_single.json --eigen-m 1");
    CHECK(check.exit_code == 1);
    CHECK(contains(check.output, "fail"));

    const CliResult classify = run_cli("classify cli_single.json");
    CHECK(classify.exit_code == 0);
    const json form = json::parse(classify.output);
    CHECK(form.at("form") == "single_layer");
    CHECK(form.at("c") == "-3/2");

    std::remove("cli_single.json");
}

TEST_CASE("search writes a verdict-true report for H(2,3) over -2..2") {
    const CliResult search =
        run_cli("search -n 2 -q 3 --coeffs -2..2 --report cli_report.json");
    CHECK(search.exit_code == 0);
    CHECK(contains(search.output, "observed_min: 4"));
    CHECK(contains(search.output, "verdict: true"));

    const SearchReport report =
        report_from_json(json::parse(read_text_file("cli_report.json")));
    CHECK(report.observed_min == 4);
    CHECK(report.theoretical_min == 4);
    CHECK(report.verdict);
    CHECK(report.classified);
    std::remove("cli_report.json");

    // Comma-list coefficient sets are accepted too.
    const CliResult list_form = run_cli("search -n 2 -q 3 --coeffs -1,0,1");
    CHECK(list_form.exit_code == 0);
    CHECK(contains(list_form.output, "achievers: 2"));
}

TEST_CASE("bound prints exact and approximate branches") {
    const CliResult branch1 = run_cli("bound -n 4 -q 5 --eigen-m 3");
    CHECK(branch1.exit_code == 0);
    CHECK(contains(branch1.output, "branch: 1"));
    CHECK(contains(branch1.output, "bound: 24"));

    const CliResult branch2 = run_cli("bound -n 2 -q 3 --eigen-m 1");
    CHECK(branch2.exit_code == 0);
    CHECK(contains(branch2.output, "branch: 2"));
    CHECK(contains(branch2.output, "bound: ~3.181981"));
    CHECK(contains(branch2.output, "81/8"));

    const CliResult exact2 = run_cli("bound -n 3 -q 3 --eigen-m 0");
    CHECK(exact2.exit_code == 0);
    CHECK(contains(exact2.output, "branch: 2"));
    CHECK(contains(exact2.output, "bound: 27"));
}

TEST_CASE("exit codes: 0 success, 1 failed verification, 2 usage errors") {
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(contains(run_cli("--version").output, "hameig"));
    CHECK(run_cli("--help").exit_code == 0);

    // Usage/input problems -> 2.
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("spectrum -n 2").exit_code == 2);            // missing -q
    CHECK(run_cli("spectrum -n 0 -q 3").exit_code == 2);       // bad n
    CHECK(run_cli("check-eigen missing.json --eigen-m 1").exit_code == 2);
    CHECK(run_cli("construct dual -n 2 -q 3 --i 1 --k 0 --j 1 --m 0 -o x.json")
              .exit_code == 2);                                // i == j
    CHECK(run_cli("search -n 2 -q 2 --coeffs -1..1").exit_code == 2);
    CHECK(run_cli("search -n 2 -q 3 --coeffs 0,1").exit_code == 2);
    CHECK(run_cli("bound -n 3 -q 2 --eigen-m 3").exit_code == 2);

    // Malformed function file -> 2.
    write_text_file("cli_bad.json", "{\"n\": 2, \"q\": 3, \"values\": [\"1\"]}");
    CHECK(run_cli("check-eigen cli_bad.json --eigen-m 1").exit_code == 2);
    write_text_file("cli_bad.json", "not json at all");
    CHECK(run_cli("classify cli_bad.json").exit_code == 2);
    std::remove("cli_bad.json");

    // A non-additive input to classify is an input error, not a violation.
    VertexFunction spike(GraphParams(2, 3));
    spike[0] = Rational(1);
    save_function(spike, "cli_spike.json");
    const CliResult classify = run_cli("classify cli_spike.json");
    CHECK(classify.exit_code == 2);
    CHECK(contains(classify.output, "not additive"));
    std::remove("cli_spike.json");

    // Reduce refuses a single-coordinate source (H(1,q)) -> 2.
    save_function(VertexFunction(GraphParams(1, 3)), "cli_h1.json");
    CHECK(run_cli("reduce cli_h1.json --i 1 --k 0 --m 1 -o cli_h1_out.json")
              .exit_code == 2);
    std::remove("cli_h1.json");
}
