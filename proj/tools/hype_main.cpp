// hype_main.cpp - batch CLI: generate, partition, evaluate, sweep
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hype/baselines.hpp"
#include "hype/io.hpp"
#include "hype/metrics.hpp"
#include "hype/partitioner.hpp"
#include "hype/synth.hpp"
#include "hype/types.hpp"

namespace {

using namespace hype;
using Clock = std::chrono::steady_clock;

constexpr int kExitParse = 1;     // unreadable or malformed input
constexpr int kExitParams = 2;    // infeasible or invalid parameters
constexpr int kExitMismatch = 3;  // partition file does not match the graph

bool logging_enabled() {
    const char* env = std::getenv("HYPE_LOG");
    return env != nullptr && *env != '\0' && std::strcmp(env, "0") != 0;
}

void log_line(const std::string& message) {
    if (logging_enabled()) {
        std::cerr << "[hype] " << message << '\n';
    }
}

struct LoadedGraph {
    Hypergraph graph;
    std::vector<std::string> edge_labels;
    std::vector<std::string> vertex_labels;
    bool labeled = false;
};

LoadedGraph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file: " + path);
    }
    LoadedGraph loaded;
    if (format == "edgelist") {
        EdgeListResult result = load_edge_list(in);
        loaded.graph = std::move(result.graph);
        loaded.edge_labels = std::move(result.edge_labels);
        loaded.vertex_labels = std::move(result.vertex_labels);
        loaded.labeled = true;
    } else {
        loaded.graph = load_hmetis(in);
    }
    log_line("loaded " + path + ": " + std::to_string(loaded.graph.num_vertices()) + " vertices, " +
             std::to_string(loaded.graph.num_edges()) + " hyperedges, " +
             std::to_string(loaded.graph.num_pins()) + " pins");
    return loaded;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open output file: " + path);
    }
    return out;
}

void emit_report(const MetricsReport& report, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << report.csv_header() << '\n' << report.to_csv() << '\n';
    } else {
        out << report.to_json() << '\n';
    }
}

// Flag bundle shared by the partition and sweep commands.
struct AlgoOptions {
    std::string algo = "hype";
    std::uint32_t k = 2;
    std::uint32_t fringe_size = 10;
    std::uint32_t fringe_candidates = 2;
    std::string cache = "on";
    std::string balance = "vertex";
    std::uint64_t slack = 100;
    std::uint64_t seed = 0;
    bool score_excludes_core = false;

    HypeParams hype_params() const {
        HypeParams params;
        params.k = k;
        params.fringe_size = fringe_size;
        params.fringe_candidates = fringe_candidates;
        params.cache_enabled = cache == "on";
        params.seed = seed;
        params.score_excludes_core = score_excludes_core;
        if (balance == "weighted") {
            params.balance_mode = BalanceMode::WeightedPins;
        } else if (balance == "flip") {
            params.balance_mode = BalanceMode::FlipEdgeCount;
        } else {
            params.balance_mode = BalanceMode::VertexCount;
        }
        return params;
    }

    StreamingParams streaming_params(StreamBalance mode) const {
        StreamingParams params;
        params.k = k;
        params.slack = slack;
        params.mode = mode;
        params.seed = seed;
        return params;
    }
};

void add_algo_flags(CLI::App& cmd, AlgoOptions& opts, bool with_algo) {
    if (with_algo) {
        cmd.add_option("--algo", opts.algo, "Partitioner: hype, minmax-eb, minmax-nb, random")
            ->check(CLI::IsMember({"hype", "minmax-eb", "minmax-nb", "random"}))
            ->capture_default_str();
    }
    cmd.add_option("--k", opts.k, "Number of partitions")->capture_default_str();
    cmd.add_option("--s", opts.fringe_size, "Max fringe size")->capture_default_str();
    cmd.add_option("--r", opts.fringe_candidates, "Fringe candidates per step")->capture_default_str();
    cmd.add_option("--cache", opts.cache, "Score cache: on or off")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd.add_option("--balance", opts.balance, "Balance mode: vertex, weighted, flip")
        ->check(CLI::IsMember({"vertex", "weighted", "flip"}))
        ->capture_default_str();
    cmd.add_option("--slack", opts.slack, "Streaming balance slack")->capture_default_str();
    cmd.add_option("--seed", opts.seed, "RNG seed")->capture_default_str();
    cmd.add_flag("--score-exclude-core", opts.score_excludes_core,
                 "Also subtract current-core neighbors from the score");
}

// Runs the selected algorithm; metrics cover the partitioning call only.
PartitionResult run_algorithm(const Hypergraph& g, const AlgoOptions& opts) {
    if (opts.algo == "hype") {
        return partition(g, opts.hype_params());
    }
    PartitionResult result;
    const auto start = Clock::now();
    if (opts.algo == "minmax-eb") {
        result.assignment = minmax_partition(g, opts.streaming_params(StreamBalance::EdgeBalanced));
    } else if (opts.algo == "minmax-nb") {
        result.assignment = minmax_partition(g, opts.streaming_params(StreamBalance::VertexBalanced));
    } else {
        result.assignment = random_partition(g, opts.k, opts.seed);
    }
    const double runtime =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    result.metrics = compute_metrics(g, result.assignment, runtime);
    return result;
}

int cmd_partition(const std::string& input, const std::string& format, const std::string& output,
                  const AlgoOptions& opts, const std::string& report_format,
                  const std::string& report_file) {
    const LoadedGraph loaded = load_graph(input, format);
    const PartitionResult result = run_algorithm(loaded.graph, opts);

    auto out = open_output(output);
    write_partition(result.assignment, out);
    if (loaded.labeled) {
        auto vout = open_output(output + ".vlabels");
        write_label_dictionary(loaded.vertex_labels, vout);
        auto eout = open_output(output + ".elabels");
        write_label_dictionary(loaded.edge_labels, eout);
    }
    log_line("wrote " + output + " (" + std::to_string(result.assignment.parts.size()) +
             " lines, k1_cut=" + std::to_string(result.metrics.k1_cut) + ")");

    if (report_file.empty()) {
        emit_report(result.metrics, report_format, std::cout);
    } else {
        auto rout = open_output(report_file);
        emit_report(result.metrics, report_format, rout);
    }
    return 0;
}

int cmd_evaluate(const std::string& input, const std::string& format,
                 const std::string& partition_path, std::uint32_t k_override,
                 const std::string& report_format) {
    const LoadedGraph loaded = load_graph(input, format);
    std::ifstream pin(partition_path);
    if (!pin) {
        throw ParseError("cannot open partition file: " + partition_path);
    }
    Assignment a = read_partition(pin);
    if (a.parts.size() != loaded.graph.num_vertices()) {
        std::cerr << "error: partition file has " << a.parts.size() << " entries, graph has "
                  << loaded.graph.num_vertices() << " vertices\n";
        return kExitMismatch;
    }
    if (k_override > 0) {
        if (k_override < a.num_partitions) {
            throw InvalidParams("--k is smaller than the largest partition id in the file");
        }
        a.num_partitions = k_override;
    }
    emit_report(compute_metrics(loaded.graph, a, 0.0), report_format, std::cout);
    return 0;
}

int cmd_generate(const std::string& type, const PlantedSpec& planted, const PowerLawSpec& powerlaw,
                 const std::string& output, const std::string& ground_truth_path,
                 const std::string& histogram_path) {
    Hypergraph g;
    if (type == "planted") {
        PlantedResult result = generate_planted(planted);
        g = std::move(result.graph);
        if (!ground_truth_path.empty()) {
            auto out = open_output(ground_truth_path);
            write_partition(result.ground_truth, out);
        }
    } else {
        if (!ground_truth_path.empty()) {
            throw InvalidParams("--ground-truth is only available for the planted generator");
        }
        g = generate_powerlaw(powerlaw);
    }
    auto out = open_output(output);
    write_hmetis(g, out);
    log_line("generated " + output + ": " + std::to_string(g.num_vertices()) + " vertices, " +
             std::to_string(g.num_edges()) + " hyperedges");
    if (!histogram_path.empty()) {
        auto hout = open_output(histogram_path);
        write_histogram_csv(degree_histogram(g), hout);
    }
    return 0;
}

int cmd_sweep(const std::string& input, const std::string& format, const std::string& axis,
              const std::vector<std::string>& values, const std::vector<std::uint64_t>& seeds,
              AlgoOptions opts, const std::string& output) {
    if (values.empty() || seeds.empty()) {
        throw InvalidParams("sweep needs at least one value and one seed");
    }
    const LoadedGraph loaded = load_graph(input, format);

    std::ostringstream rows;
    rows << "axis,value,seed,k1_cut,runtime_ms\n";
    for (const std::string& value : values) {
        if (axis == "cache") {
            if (value != "on" && value != "off") {
                throw InvalidParams("cache axis values must be on or off");
            }
            opts.cache = value;
        } else {
            std::uint32_t parsed = 0;
            try {
                parsed = static_cast<std::uint32_t>(std::stoul(value));
            } catch (const std::exception&) {
                throw InvalidParams("sweep value '" + value + "' is not a number");
            }
            if (axis == "s") {
                opts.fringe_size = parsed;
            } else {
                opts.fringe_candidates = parsed;
            }
        }
        for (const std::uint64_t seed : seeds) {
            opts.seed = seed;
            const PartitionResult result = partition(loaded.graph, opts.hype_params());
            rows << axis << ',' << value << ',' << seed << ',' << result.metrics.k1_cut << ','
                 << result.metrics.runtime_ms << '\n';
            log_line("sweep " + axis + "=" + value + " seed=" + std::to_string(seed) +
                     " k1_cut=" + std::to_string(result.metrics.k1_cut));
        }
    }
    if (output.empty()) {
        std::cout << rows.str();
    } else {
        auto out = open_output(output);
        out << rows.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced k-way hypergraph partitioning toolkit"};
    app.require_subcommand(1);

    // partition
    auto* part = app.add_subcommand("partition", "Partition a hypergraph and report quality metrics");
    std::string part_input;
    std::string part_format = "hmetis";
    std::string part_output;
    std::string part_report = "json";
    std::string part_report_file;
    AlgoOptions part_opts;
    part->add_option("input", part_input, "Input hypergraph file")->required();
    part->add_option("-o,--output", part_output, "Partition file to write")->required();
    part->add_option("--format", part_format, "Input format: hmetis or edgelist")
        ->check(CLI::IsMember({"hmetis", "edgelist"}))
        ->capture_default_str();
    part->add_option("--report", part_report, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    part->add_option("--report-file", part_report_file, "Write the report here instead of stdout");
    add_algo_flags(*part, part_opts, true);

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Compute metrics for an existing partition file");
    std::string eval_input;
    std::string eval_partition;
    std::string eval_format = "hmetis";
    std::string eval_report = "json";
    std::uint32_t eval_k = 0;
    eval->add_option("input", eval_input, "Input hypergraph file")->required();
    eval->add_option("partition", eval_partition, "Partition file (one id per line)")->required();
    eval->add_option("--format", eval_format, "Input format: hmetis or edgelist")
        ->check(CLI::IsMember({"hmetis", "edgelist"}))
        ->capture_default_str();
    eval->add_option("--k", eval_k, "Partition count (default: max id in file + 1)");
    eval->add_option("--report", eval_report, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic hypergraph in hMETIS format");
    std::string gen_type;
    std::string gen_output;
    std::string gen_ground_truth;
    std::string gen_histogram;
    PlantedSpec planted;
    PowerLawSpec powerlaw;
    std::uint32_t gen_size_min = 2;
    std::uint32_t gen_size_max = 4;
    std::uint32_t gen_size_cap = 50;
    std::uint64_t gen_seed = 0;
    gen->add_option("--type", gen_type, "Generator: planted or powerlaw")
        ->check(CLI::IsMember({"planted", "powerlaw"}))
        ->required();
    gen->add_option("-o,--output", gen_output, "Output hypergraph file")->required();
    gen->add_option("--blocks", planted.blocks, "Planted: number of blocks")->capture_default_str();
    gen->add_option("--vertices-per-block", planted.vertices_per_block, "Planted: block size")
        ->capture_default_str();
    gen->add_option("--edges-per-block", planted.edges_per_block, "Planted: hyperedges per block")
        ->capture_default_str();
    gen->add_option("--noise", planted.noise, "Planted: fraction of globally drawn hyperedges")
        ->capture_default_str();
    gen->add_option("--n", powerlaw.n, "Powerlaw: vertex count");
    gen->add_option("--m", powerlaw.m, "Powerlaw: hyperedge count");
    gen->add_option("--gamma", powerlaw.gamma, "Powerlaw: exponent")->capture_default_str();
    gen->add_option("--size-min", gen_size_min, "Smallest hyperedge size")->capture_default_str();
    gen->add_option("--size-max", gen_size_max, "Largest hyperedge size (planted)")
        ->capture_default_str();
    gen->add_option("--size-cap", gen_size_cap, "Largest hyperedge size (powerlaw)")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--ground-truth", gen_ground_truth, "Planted: write block labels here");
    gen->add_option("--histogram", gen_histogram, "Write the degree histogram CSV here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the expansion partitioner over a parameter axis");
    std::string sweep_input;
    std::string sweep_format = "hmetis";
    std::string sweep_axis;
    std::string sweep_output;
    std::vector<std::string> sweep_values;
    std::vector<std::uint64_t> sweep_seeds;
    AlgoOptions sweep_opts;
    sweep->add_option("input", sweep_input, "Input hypergraph file")->required();
    sweep->add_option("--axis", sweep_axis, "Swept parameter: s, r, or cache")
        ->check(CLI::IsMember({"s", "r", "cache"}))
        ->required();
    sweep->add_option("--values", sweep_values, "Comma-separated axis values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seeds", sweep_seeds, "Comma-separated seeds")->required()->delimiter(',');
    sweep->add_option("--format", sweep_format, "Input format: hmetis or edgelist")
        ->check(CLI::IsMember({"hmetis", "edgelist"}))
        ->capture_default_str();
    sweep->add_option("-o,--output", sweep_output, "CSV file (default: stdout)");
    add_algo_flags(*sweep, sweep_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParams;
    }

    try {
        if (part->parsed()) {
            return cmd_partition(part_input, part_format, part_output, part_opts, part_report,
                                 part_report_file);
        }
        if (eval->parsed()) {
            return cmd_evaluate(eval_input, eval_format, eval_partition, eval_k, eval_report);
        }
        if (gen->parsed()) {
            planted.edge_size_min = gen_size_min;
            planted.edge_size_max = gen_size_max;
            planted.seed = gen_seed;
            powerlaw.edge_size_min = gen_size_min;
            powerlaw.edge_size_cap = gen_size_cap;
            powerlaw.seed = gen_seed;
            return cmd_generate(gen_type, planted, powerlaw, gen_output, gen_ground_truth,
                                gen_histogram);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_input, sweep_format, sweep_axis, sweep_values, sweep_seeds,
                             sweep_opts, sweep_output);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParams;
    }
    return 0;
}
