#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dgs/cli.hpp"

namespace {

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

dgs::InputFormat parse_format(const std::string& name) {
    if (name == "graph6") return dgs::InputFormat::graph6;
    if (name == "adjacency") return dgs::InputFormat::adjacency;
    throw CLI::ValidationError("--format must be graph6 or adjacency");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walk-matrix certification of graphs determined by their generalized spectrum"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format_name = "graph6";
    std::string q_path;
    bool json = false, text = false, timings = false, strict = false;
    std::uint64_t effort = dgs::kDefaultFactorEffort;
    std::uint64_t seed = dgs::DensityOptions{}.seed;
    int parallel = 1;
    int n = 6;
    std::size_t samples = 10000;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin");
        cmd->add_flag("--json", json, "machine-readable JSON output");
        cmd->add_flag("--text", text, "human-readable output (default)");
    };

    auto* analyze = app.add_subcommand("analyze", "certify a single graph");
    add_io(analyze);
    analyze->add_option("--format", format_name, "graph6 | adjacency")
        ->capture_default_str();
    analyze->add_option("--effort", effort, "factorization effort bound")->capture_default_str();
    analyze->add_flag("--timings", timings, "include wall-clock timings in the report");

    auto* batch = app.add_subcommand("batch", "certify a graph6 stream, one JSON line per graph");
    batch->add_option("input", input, "input file, or - for stdin");
    batch->add_option("--effort", effort, "factorization effort bound")->capture_default_str();
    batch->add_option("--parallel", parallel, "worker threads")->capture_default_str();
    batch->add_flag("--strict", strict, "abort on the first malformed line");
    batch->add_flag("--timings", timings, "include wall-clock timings in the reports");

    auto* verify = app.add_subcommand("verify-q", "check a rational orthogonal matrix against a graph");
    add_io(verify);
    verify->add_option("--format", format_name, "graph6 | adjacency")->capture_default_str();
    verify->add_option("--q", q_path, "Q matrix file (\"n level\" header, then level*Q)")
        ->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive cross-validation sweep");
    oracle->add_option("--n", n, "vertex count (<= 7)")->capture_default_str();
    oracle->add_flag("--json", json, "machine-readable JSON output");

    auto* density = app.add_subcommand("density", "family-membership sampling experiment");
    density->add_option("--n", n, "vertex count")->capture_default_str();
    density->add_option("--samples", samples, "number of sampled graphs")->capture_default_str();
    density->add_option("--seed", seed, "RNG seed")->capture_default_str();
    density->add_option("--effort", effort, "factorization effort bound")->capture_default_str();
    density->add_flag("--json", json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            dgs::AnalyzeOptions opt{parse_format(format_name), effort, json, timings};
            return dgs::cmd_analyze(read_source(input), input, opt, std::cout, std::cerr);
        }
        if (batch->parsed()) {
            dgs::BatchOptions opt{effort, parallel, strict, timings};
            if (input == "-") return dgs::cmd_batch(std::cin, opt, std::cout, std::cerr);
            std::ifstream in(input);
            if (!in) throw std::runtime_error("cannot open " + input);
            return dgs::cmd_batch(in, opt, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            return dgs::cmd_verify_q(read_source(input), parse_format(format_name),
                                     read_source(q_path), json, std::cout, std::cerr);
        }
        if (oracle->parsed()) {
            return dgs::cmd_oracle({n, json}, std::cout, std::cerr);
        }
        if (density->parsed()) {
            return dgs::cmd_density({n, samples, seed, effort, json}, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dgs::kExitInputError;
    }
    return 0;
}
