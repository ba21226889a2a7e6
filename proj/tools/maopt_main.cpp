#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maopt/bench.hpp"
#include "maopt/json_io.hpp"
#include "maopt/optimize.hpp"
#include "maopt/qasm.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse_error = 1;
constexpr int exit_io_error = 2;
constexpr int exit_verify_failed = 3;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

int cmd_optimize(const std::string& input_path, double eps_total, const std::string& json_path,
                 const std::string& annotate_path, bool text, bool timings, int threads) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return exit_io_error;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    const auto t0 = std::chrono::steady_clock::now();
    maopt::Circuit circuit;
    try {
        circuit = maopt::parse(buffer.str());
    } catch (const maopt::ParseError& err) {
        std::cerr << input_path << ":" << err.what() << "\n";
        return exit_parse_error;
    }
    const double parse_ms = ms_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    maopt::OptimizeResult result;
    try {
        result = maopt::optimize_circuit(circuit, {eps_total, threads});
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_io_error;
    }
    const double solve_ms = ms_since(t1);

    std::optional<maopt::Timings> timing_info;
    if (timings) timing_info = maopt::Timings{parse_ms, 0.0, solve_ms, parse_ms + solve_ms};

    const std::string json_text = maopt::to_text(maopt::report_json(result.report, timing_info));
    if (!json_path.empty()) {
        if (!write_file(json_path, json_text)) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return exit_io_error;
        }
    }
    if (text) {
        const auto& r = result.report;
        std::cout << "baseline T-count:  " << r.baseline_tcount << "\n"
                  << "optimized T-count: " << r.optimized_tcount << "\n"
                  << "reduction:         " << r.reduction_pct << "%\n";
        if (r.trivially_clifford) std::cout << "(trivially Clifford: nothing to approximate)\n";
    } else if (json_path.empty()) {
        std::cout << json_text;
    }

    if (!annotate_path.empty()) {
        std::vector<std::string> labels;
        const maopt::Circuit annotated = maopt::annotated_circuit(result, labels);
        if (!write_file(annotate_path, maopt::emit_qasm(annotated, &labels))) {
            std::cerr << "error: cannot write " << annotate_path << "\n";
            return exit_io_error;
        }
    }
    return exit_ok;
}

int cmd_bench(const maopt::BenchParams& params, const std::string& csv_path,
              const std::string& json_path, int threads) {
    const maopt::BenchSummary summary =
        threads == 1 ? maopt::run_bench(params) : maopt::run_bench_omp(params, threads);

    const std::string json_text = maopt::to_text(maopt::bench_json(summary));
    if (!json_path.empty()) {
        if (!write_file(json_path, json_text)) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return exit_io_error;
        }
    } else {
        std::cout << json_text;
    }
    if (!csv_path.empty() && !write_file(csv_path, maopt::bench_csv(summary))) {
        std::cerr << "error: cannot write " << csv_path << "\n";
        return exit_io_error;
    }
    return exit_ok;
}

int cmd_verify(int max_sites, long long trials, std::uint64_t seed, int threads) {
    const maopt::VerifyReport report = maopt::run_verify(max_sites, trials, seed, threads);
    if (report.vacuous) std::cerr << "warning: trials=0, vacuous pass\n";
    std::cout << maopt::to_text(maopt::verify_json(report));
    return report.pass ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magnitude/Diagonal approximation strategy optimizer"};
    app.require_subcommand(1);

    // optimize
    std::string input_path, json_path, annotate_path;
    double eps_total = 1e-3;
    bool text = false, timings = false;
    int threads = 0;
    auto* optimize = app.add_subcommand("optimize", "Optimize one OpenQASM 2.0 circuit file");
    optimize->add_option("--input", input_path, "input circuit file")->required();
    optimize->add_option("--epsilon", eps_total, "total approximation budget")->required();
    optimize->add_option("--json", json_path, "write the JSON report to this file");
    optimize->add_option("--annotate", annotate_path, "write annotated canonical QASM here");
    optimize->add_flag("--text", text, "print a human-readable summary instead of JSON");
    optimize->add_flag("--timings", timings, "include wall-clock timings in the report");
    optimize->add_option("--threads", threads, "worker threads (1 = serial, 0 = all cores)");

    // bench
    maopt::BenchParams params;
    std::string csv_path, bench_json_path;
    int bench_threads = 0;
    auto* bench = app.add_subcommand("bench", "Random-circuit ensemble benchmark");
    bench->add_option("--qubits", params.qubits)->check(CLI::PositiveNumber);
    bench->add_option("--depth", params.depth)->check(CLI::PositiveNumber);
    bench->add_option("--cnot-prob", params.cnot_probability)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--circuits", params.num_circuits)->check(CLI::PositiveNumber);
    bench->add_option("--epsilon", params.eps_total);
    bench->add_option("--seed", params.seed);
    bench->add_option("--csv", csv_path, "write per-circuit rows as CSV");
    bench->add_option("--json", bench_json_path, "write the summary to this file");
    bench->add_option("--threads", bench_threads, "worker threads (1 = serial, 0 = all cores)");

    // verify
    int max_sites = 16;
    long long trials = 500;
    std::uint64_t verify_seed = 1;
    int verify_threads = 0;
    auto* verify = app.add_subcommand("verify", "Run the self-verification oracle suites");
    verify->add_option("--max-sites", max_sites)->check(CLI::Range(1, maopt::max_verify_sites));
    verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", verify_seed);
    verify->add_option("--threads", verify_threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimize->parsed())
            return cmd_optimize(input_path, eps_total, json_path, annotate_path, text, timings,
                                threads);
        if (bench->parsed()) return cmd_bench(params, csv_path, bench_json_path, bench_threads);
        if (verify->parsed()) return cmd_verify(max_sites, trials, verify_seed, verify_threads);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_io_error;
    }
    return exit_ok;
}
