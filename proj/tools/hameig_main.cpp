// hameig — construct, verify, reduce, classify and search eigenfunctions of
// Hamming graphs H(n,q) at the second eigenvalue lambda_1 = n(q-1) - q.
//
// Exit codes: 0 success, 1 failed verification verdict, 2 usage/input errors.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hameig/bound.hpp"
#include "hameig/hamming.hpp"
#include "hameig/json_io.hpp"
#include "hameig/operators.hpp"
#include "hameig/oracle.hpp"
#include "hameig/reduction.hpp"

namespace {

using namespace hameig;

struct CliConfig {
    int n = 0;
    int q = 0;
    int i = 0;
    int k = 0;
    int j = 0;
    int m = 0;
    int eigen_m = 0;
    std::string c = "1";
    std::string input;
    std::string output;
    std::string report_path;
    std::string coeffs;
    std::int64_t grid_cap = OracleOptions{}.grid_cap;
    int samples = OracleOptions{}.eigencheck_samples;
    std::uint64_t seed = OracleOptions{}.sample_seed;
};

int parse_int_strict(const std::string& text) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not an integer: \"" + text + "\"");
    }
    return value;
}

/// "lo..hi" for a contiguous range, or a comma-separated list of integers.
std::vector<int> parse_coefficient_set(const std::string& text) {
    std::vector<int> set;
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = parse_int_strict(text.substr(0, dots));
        const int hi = parse_int_strict(text.substr(dots + 2));
        if (lo > hi) {
            throw std::invalid_argument("empty coefficient range \"" + text + "\"");
        }
        if (static_cast<long>(hi) - lo > 1000) {
            throw std::invalid_argument("coefficient range too wide: \"" + text + "\"");
        }
        for (int v = lo; v <= hi; ++v) {
            set.push_back(v);
        }
        return set;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t stop = comma == std::string::npos ? text.size() : comma;
        set.push_back(parse_int_strict(text.substr(pos, stop - pos)));
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return set;
}

int run_spectrum(const CliConfig& cfg) {
    const GraphParams params(cfg.n, cfg.q);
    const std::vector<std::int64_t> values = spectrum(params);
    for (std::size_t m = 0; m < values.size(); ++m) {
        std::cout << (m ? " " : "") << values[m];
    }
    std::cout << "\n";
    return 0;
}

int run_construct_dual(const CliConfig& cfg) {
    const GraphParams params(cfg.n, cfg.q);
    const Rational c = parse_rational(cfg.c);
    const VertexFunction f = construct_dual_layer(params, cfg.i, cfg.k, cfg.j, cfg.m, c);
    save_function(f, cfg.output);
    std::cout << "wrote " << cfg.output << ": dual layer i=" << cfg.i << " k=" << cfg.k
              << " j=" << cfg.j << " m=" << cfg.m << " c=" << to_string(c)
              << " on H(" << cfg.n << "," << cfg.q << "), support "
              << support_size(f) << "\n";
    return 0;
}

int run_construct_single(const CliConfig& cfg) {
    const GraphParams params(cfg.n, cfg.q);
    const Rational c = parse_rational(cfg.c);
    const VertexFunction f = construct_single_layer(params, cfg.i, cfg.k, c);
    save_function(f, cfg.output);
    std::cout << "wrote " << cfg.output << ": single layer i=" << cfg.i
              << " k=" << cfg.k << " c=" << to_string(c) << " on H(" << cfg.n << ","
              << cfg.q << "), support " << support_size(f) << "\n";
    return 0;
}

int run_check_eigen(const CliConfig& cfg) {
    const VertexFunction f = load_function(cfg.input);
    const std::int64_t lambda = eigenvalue(cfg.eigen_m, f.params());
    const EigenCheck check = check_eigenfunction(f, lambda);
    if (check.passes) {
        std::cout << "pass: Af = lambda_" << cfg.eigen_m << " f with lambda_"
                  << cfg.eigen_m << " = " << lambda;
        if (check.trivial_zero) {
            std::cout << " (zero function, trivially an eigenfunction)";
        }
        std::cout << "\n";
        return 0;
    }
    std::cout << "fail: Af != lambda_" << cfg.eigen_m << " f (lambda_" << cfg.eigen_m
              << " = " << lambda << ")\n";
    return 1;
}

int run_reduce(const CliConfig& cfg) {
    const VertexFunction f = load_function(cfg.input);
    const VertexFunction g = reduce(f, ReductionSpec{cfg.i, cfg.k, cfg.m});
    save_function(g, cfg.output);
    std::cout << "wrote " << cfg.output << ": reduced H(" << f.params().n() << ","
              << f.params().q() << ") -> H(" << g.params().n() << ","
              << g.params().q() << ") via i=" << cfg.i << " k=" << cfg.k
              << " m=" << cfg.m << ", support " << support_size(g) << "\n";
    return 0;
}

int run_classify(const CliConfig& cfg) {
    const VertexFunction f = load_function(cfg.input);
    if (auto witness = find_non_additive_witness(f)) {
        std::cerr << "error: input is not additive; " << witness->describe() << "\n";
        return 2;
    }
    try {
        std::cout << render_json(form_to_json(classify_additive(f)));
    } catch (const TrichotomyViolation& violation) {
        std::cerr << "trichotomy violation: " << violation.what() << "\n";
        return 1;
    }
    return 0;
}

int run_search(const CliConfig& cfg) {
    const GraphParams params(cfg.n, cfg.q);
    OracleOptions options;
    options.grid_cap = cfg.grid_cap;
    options.eigencheck_samples = cfg.samples;
    options.sample_seed = cfg.seed;
    const SearchReport report =
        verify_main_theorem(params, parse_coefficient_set(cfg.coeffs), options);
    if (!cfg.report_path.empty()) {
        write_text_file(cfg.report_path, render_json(report_to_json(report)));
    }
    std::cout << "H(" << report.n << "," << report.q << "), lambda_1 = "
              << eigenvalue(1, params) << "\n"
              << "enumerated " << report.enumerated_count
              << " nonzero coefficient vectors\n"
              << "observed_min: " << report.observed_min << "\n"
              << "theoretical_min: " << report.theoretical_min << "\n"
              << "achievers: " << report.achievers.size() << "\n"
              << "eigencheck: " << report.eigencheck_samples << " samples "
              << (report.eigencheck_passed ? "passed" : "FAILED") << "\n"
              << "verdict: " << (report.verdict ? "true" : "false") << "\n";
    if (!cfg.report_path.empty()) {
        std::cout << "report written to " << cfg.report_path << "\n";
    }
    return report.verdict ? 0 : 1;
}

int run_bound(const CliConfig& cfg) {
    const SupportBound bound = vorobev_lower_bound(cfg.n, cfg.q, cfg.eigen_m);
    const GraphParams params(cfg.n, cfg.q);
    std::cout << "lambda_" << cfg.eigen_m << " = " << eigenvalue(cfg.eigen_m, params)
              << " on H(" << cfg.n << "," << cfg.q << ")\n"
              << "branch: " << bound.branch << "\n";
    if (bound.is_exact()) {
        std::cout << "bound: " << to_string(bound.exact) << "\n";
    } else {
        std::ostringstream fixed6;
        fixed6 << std::fixed << std::setprecision(6) << bound.approx;
        std::cout << "bound: ~" << fixed6.str() << " (squared: "
                  << to_string(bound.squared) << ")\n";
    }
    return 0;
}

/// CLI11 refuses option values that begin with '-' unless they parse as plain
/// numbers, so values like "-2..2" or "-1/2" must arrive glued to their flag.
/// Returns the argument vector reversed, which is what App::parse expects.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int t = 1; t < argc; ++t) {
        std::string arg = argv[t];
        if ((arg == "--coeffs" || arg == "--c") && t + 1 < argc) {
            arg += "=";
            arg += argv[++t];
        }
        args.push_back(std::move(arg));
    }
    std::reverse(args.begin(), args.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenfunctions of Hamming graphs H(n,q) at lambda_1 = n(q-1) - q"};
    app.set_version_flag("--version", "hameig 1.0.0");
    app.require_subcommand(1);

    CliConfig cfg;
    int exit_code = 0;

    auto add_graph_options = [&cfg](CLI::App* cmd) {
        cmd->add_option("-n", cfg.n, "word length n (n >= 1)")->required();
        cmd->add_option("-q", cfg.q, "alphabet size q (q >= 2)")->required();
    };

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print the adjacency spectrum lambda_0..lambda_n");
    add_graph_options(spectrum_cmd);
    spectrum_cmd->callback([&] { exit_code = run_spectrum(cfg); });

    CLI::App* construct_cmd =
        app.add_subcommand("construct", "write a layer-difference or layer function file");
    construct_cmd->require_subcommand(1);
    CLI::App* dual_cmd = construct_cmd->add_subcommand(
        "dual", "c on T_k(i) minus T_m(j), -c on T_m(j) minus T_k(i)");
    add_graph_options(dual_cmd);
    dual_cmd->add_option("--i", cfg.i, "first coordinate (1..n)")->required();
    dual_cmd->add_option("--k", cfg.k, "first layer value (0..q-1)")->required();
    dual_cmd->add_option("--j", cfg.j, "second coordinate (1..n, != i)")->required();
    dual_cmd->add_option("--m", cfg.m, "second layer value (0..q-1)")->required();
    dual_cmd->add_option("--c", cfg.c, "layer value, a nonzero rational (default 1)");
    dual_cmd->add_option("-o,--out", cfg.output, "output function file")->required();
    dual_cmd->callback([&] { exit_code = run_construct_dual(cfg); });

    CLI::App* single_cmd =
        construct_cmd->add_subcommand("single", "c on the layer T_k(i), 0 elsewhere");
    add_graph_options(single_cmd);
    single_cmd->add_option("--i", cfg.i, "coordinate (1..n)")->required();
    single_cmd->add_option("--k", cfg.k, "layer value (0..q-1)")->required();
    single_cmd->add_option("--c", cfg.c, "layer value, a nonzero rational (default 1)");
    single_cmd->add_option("-o,--out", cfg.output, "output function file")->required();
    single_cmd->callback([&] { exit_code = run_construct_single(cfg); });

    CLI::App* check_cmd = app.add_subcommand(
        "check-eigen", "test Af = lambda_m f exactly for a function file");
    check_cmd->add_option("input", cfg.input, "function file")->required();
    check_cmd->add_option("--eigen-m", cfg.eigen_m, "eigenvalue index m (0..n)")
        ->required();
    check_cmd->callback([&] { exit_code = run_check_eigen(cfg); });

    CLI::App* reduce_cmd = app.add_subcommand(
        "reduce", "g(t) = f(insert(t,i,k)) - f(insert(t,i,m)) onto H(n-1,q)");
    reduce_cmd->add_option("input", cfg.input, "function file (n >= 2)")->required();
    reduce_cmd->add_option("--i", cfg.i, "deleted coordinate (1..n)")->required();
    reduce_cmd->add_option("--k", cfg.k, "first inserted value (0..q-1)")->required();
    reduce_cmd->add_option("--m", cfg.m, "second inserted value (0..q-1, != k)")
        ->required();
    reduce_cmd->add_option("-o,--out", cfg.output, "output function file")->required();
    reduce_cmd->callback([&] { exit_code = run_reduce(cfg); });

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "decide zero / single layer / dual layer for an additive function");
    classify_cmd->add_option("input", cfg.input, "function file")->required();
    classify_cmd->callback([&] { exit_code = run_classify(cfg); });

    CLI::App* search_cmd = app.add_subcommand(
        "search", "exhaustive minimum-support search over a lambda_1 coefficient grid");
    add_graph_options(search_cmd);
    search_cmd
        ->add_option("--coeffs", cfg.coeffs,
                     "coefficient set: \"lo..hi\" or comma-separated integers")
        ->required();
    search_cmd->add_option("--report", cfg.report_path, "write the JSON report here");
    search_cmd->add_option("--grid-cap", cfg.grid_cap,
                           "maximum number of coefficient combinations");
    search_cmd->add_option("--samples", cfg.samples,
                           "random eigencheck samples (default 100)");
    search_cmd->add_option("--seed", cfg.seed, "seed for the eigencheck samples");
    search_cmd->callback([&] { exit_code = run_search(cfg); });

    CLI::App* bound_cmd = app.add_subcommand(
        "bound", "two-branch support lower bound for lambda_m eigenfunctions");
    add_graph_options(bound_cmd);
    bound_cmd->add_option("--eigen-m", cfg.eigen_m, "eigenvalue index m (0..n)")
        ->required();
    bound_cmd->callback([&] { exit_code = run_bound(cfg); });

    try {
        app.parse(glue_negative_values(argc, argv));
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const TrichotomyViolation& violation) {
        std::cerr << "trichotomy violation: " << violation.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return exit_code;
}
