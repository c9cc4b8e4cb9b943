#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ts3c/dataset.hpp"
#include "ts3c/distances.hpp"
#include "ts3c/errors.hpp"
#include "ts3c/pipeline.hpp"

namespace fs = std::filesystem;
using namespace ts3c;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitPipeline = 3;

Strategy parse_strategy(const std::string& name) {
    if (name == "ch") return Strategy::CH;
    if (name == "mv") return Strategy::MajorityVoting;
    throw ArgumentError("unknown strategy '" + name + "' (expected ch or mv)");
}

std::string method_name(Strategy strategy) {
    return strategy == Strategy::CH ? "ts3c_ch" : "ts3c_mv";
}

Dataset load_input(const std::string& train, const std::string& test, bool znorm) {
    Dataset dataset = load_ucr(train, test.empty() ? std::nullopt
                                                   : std::optional<std::string>(test));
    return znorm ? znormalize(dataset) : dataset;
}

int resolve_num_clusters(const std::string& spec_text, const Dataset& dataset) {
    if (spec_text == "auto") return dataset.num_classes;
    try {
        return std::stoi(spec_text);
    } catch (const std::exception&) {
        throw ArgumentError("--L expects 'auto' or an integer, got '" + spec_text + "'");
    }
}

std::vector<double> parse_range(const std::string& text) {
    // start:stop:step, e.g. 0:1:0.01
    double start = 0.0, stop = 1.0, step = 0.01;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0.0)
        throw ArgumentError("bad range '" + text + "' (expected start:stop:step)");
    std::vector<double> values;
    for (int i = 0;; ++i) {
        const double v = start + step * i;
        if (v > stop + step * 1e-9) break;
        values.push_back(std::min(v, stop));
    }
    return values;
}

void report_run(const Dataset& dataset, const RunResult& result) {
    std::cout << "dataset: " << dataset.name << " (" << dataset.size() << " series, "
              << dataset.num_classes << " classes)\n";
    std::cout << "strategy: " << method_name(result.strategy) << "\n";
    std::cout << "chosen sep_max: " << result.chosen.sep_max << "\n";
    if (result.ri) std::printf("rand index: %.3f\n", *result.ri);
    std::printf("time: %.3f s\n", result.wall_seconds);
}

struct BenchJob {
    std::string name;
    fs::path train;
    fs::path test;
};

std::vector<BenchJob> discover_datasets(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("'" + dir.string() + "' is not a directory");
    std::vector<BenchJob> jobs;
    auto consider = [&](const fs::path& candidate) {
        const std::string stem = candidate.filename().string();
        const auto pos = stem.rfind("_TRAIN");
        if (pos == std::string::npos || pos + 6 != stem.size()) return;
        BenchJob job;
        job.name = stem.substr(0, pos);
        job.train = candidate;
        const fs::path test = candidate.parent_path() / (job.name + "_TEST");
        if (fs::exists(test)) job.test = test;
        jobs.push_back(std::move(job));
    };
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) consider(entry.path());
        if (entry.is_directory())
            for (const auto& inner : fs::directory_iterator(entry.path()))
                if (inner.is_regular_file()) consider(inner.path());
    }
    std::sort(jobs.begin(), jobs.end(),
              [](const BenchJob& a, const BenchJob& b) { return a.name < b.name; });
    return jobs;
}

int run_cluster(const std::string& train, const std::string& test,
                const std::string& strategy_name, double sep_max, int k, int degree,
                const std::string& num_clusters_text, bool znorm, const std::string& out) {
    const Dataset dataset = load_input(train, test, znorm);
    PipelineParams params;
    params.segment_clusters = k;
    params.degree = degree;
    params.num_clusters = resolve_num_clusters(num_clusters_text, dataset);
    if (sep_max > 0.0) params.grid = {sep_max};

    const Strategy strategy = parse_strategy(strategy_name);
    const RunResult result = run(dataset, strategy, params);
    report_run(dataset, result);

    if (!out.empty()) {
        ResultRow row{dataset.name, method_name(strategy), result.chosen.sep_max, result.ri,
                      result.wall_seconds};
        write_results({row}, out);
    }
    return 0;
}

int run_bench(const std::string& dir, const std::string& strategy_name, int jobs,
              const std::string& out) {
    const Strategy strategy = parse_strategy(strategy_name);
    const auto datasets = discover_datasets(dir);
    if (datasets.empty()) throw IoError("no *_TRAIN files under '" + dir + "'");

    auto evaluate = [&](const BenchJob& job) {
        const Dataset dataset =
            load_ucr(job.train.string(), job.test.empty()
                                             ? std::nullopt
                                             : std::optional<std::string>(job.test.string()));
        const RunResult result = run(dataset, strategy);
        return ResultRow{dataset.name, method_name(strategy), result.chosen.sep_max,
                         result.ri, result.wall_seconds};
    };

    std::vector<ResultRow> rows(datasets.size());
    if (jobs > 1) {
        std::vector<std::future<ResultRow>> futures;
        futures.reserve(datasets.size());
        for (const auto& job : datasets)
            futures.push_back(std::async(std::launch::async, evaluate, std::cref(job)));
        for (std::size_t i = 0; i < futures.size(); ++i) rows[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < datasets.size(); ++i) rows[i] = evaluate(datasets[i]);
    }
    for (const auto& row : rows)
        std::printf("%s: RI %.3f (sep_max %g, %.1f s)\n", row.dataset.c_str(),
                    row.rand_index.value_or(0.0), row.sep_max.value_or(0.0), row.time_s);
    write_results(rows, out);
    return 0;
}

int run_baseline(const std::string& train, const std::string& test,
                 const std::string& method, const std::string& alpha_range,
                 const std::string& out) {
    const Dataset dataset = load_input(train, test, false);
    const auto start = std::chrono::steady_clock::now();
    BaselineResult result;
    if (method == "dddtw-hc") {
        result = dddtw_hc(dataset, dataset.num_classes, parse_range(alpha_range));
    } else if (method == "ed-hc") {
        result = ed_hc(dataset, dataset.num_classes);
    } else {
        throw ArgumentError("unknown method '" + method + "' (expected dddtw-hc or ed-hc)");
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::optional<double> ri;
    if (dataset.labeled()) ri = rand_index(result.partition, dataset.labels());
    std::cout << "dataset: " << dataset.name << "\nmethod: " << method << "\n";
    if (method == "dddtw-hc") std::cout << "chosen alpha: " << result.alpha << "\n";
    if (ri) std::printf("rand index: %.3f\n", *ri);
    std::printf("time: %.3f s\n", seconds);

    if (!out.empty())
        write_results({ResultRow{dataset.name, method, std::nullopt, ri, seconds}}, out);
    return 0;
}

int run_indices(const std::string& train, const std::string& test, double sep_max) {
    const Dataset dataset = load_input(train, test, false);
    PipelineParams params;
    if (sep_max > 0.0) params.grid = {sep_max};
    const auto entries = sweep(dataset, params);

    std::printf("%8s %12s %12s %12s %9s %9s %9s %9s %9s %12s\n", "sep_max", "sse", "nsse",
                "ch", "si", "db", "du_gd33", "du_gd43", "du_gd53", "cop");
    for (const auto& entry : entries) {
        if (entry.skipped) {
            std::printf("%8g skipped (%s)\n", entry.sep_max, entry.skip_reason.c_str());
            continue;
        }
        const auto& r = entry.report;
        std::printf("%8g %12.5g %12.5g %12.5g %9.4f %9.4f %9.4g %9.4g %9.4g %12.5g\n",
                    entry.sep_max, r.sse, r.nsse, r.ch, r.si, r.db, r.du_gd33, r.du_gd43,
                    r.du_gd53, r.cop);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-stage segmentation-clustering for whole time series"};
    app.require_subcommand(1);

    std::string train, test, strategy = "ch", out, num_clusters_text = "auto";
    std::string dir, method = "dddtw-hc", alpha_range = "0:1:0.01";
    double sep_max = 0.0;
    int k = 2, degree = 1, jobs = 1;
    bool znorm = false;

    auto* cluster = app.add_subcommand("cluster", "Cluster one dataset");
    cluster->add_option("--train", train, "UCR-format train file")->required();
    cluster->add_option("--test", test, "UCR-format test file (merged after train)");
    cluster->add_option("--strategy", strategy, "Parameter selection: ch or mv");
    cluster->add_option("--sep-max", sep_max, "Fixed segmentation threshold (skips the sweep)");
    cluster->add_option("--k", k, "Segment clusters per series");
    cluster->add_option("--degree", degree, "Fit polynomial degree");
    cluster->add_option("--L", num_clusters_text, "Final cluster count, or 'auto'");
    cluster->add_flag("--znorm", znorm, "Z-normalize each series at load time");
    cluster->add_option("--out", out, "Append-style results CSV");

    auto* bench = app.add_subcommand("bench", "Run every dataset in a directory");
    bench->add_option("--dir", dir, "Directory with *_TRAIN/*_TEST files")->required();
    bench->add_option("--strategy", strategy, "Parameter selection: ch or mv");
    bench->add_option("--jobs", jobs, "Datasets evaluated in parallel");
    bench->add_option("--out", out, "Results CSV")->required();

    auto* baseline = app.add_subcommand("baseline", "Distance-based reference clustering");
    baseline->add_option("--train", train, "UCR-format train file")->required();
    baseline->add_option("--test", test, "UCR-format test file");
    baseline->add_option("--method", method, "dddtw-hc or ed-hc");
    baseline->add_option("--alpha-grid", alpha_range, "Alpha sweep as start:stop:step");
    baseline->add_option("--out", out, "Results CSV");

    auto* indices = app.add_subcommand("indices", "Print the validity indices per sep_max");
    indices->add_option("--train", train, "UCR-format train file")->required();
    indices->add_option("--test", test, "UCR-format test file");
    indices->add_option("--sep-max", sep_max, "Single threshold instead of the sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cluster->parsed())
            return run_cluster(train, test, strategy, sep_max, k, degree, num_clusters_text,
                               znorm, out);
        if (bench->parsed()) return run_bench(dir, strategy, jobs, out);
        if (baseline->parsed()) return run_baseline(train, test, method, alpha_range, out);
        if (indices->parsed()) return run_indices(train, test, sep_max);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const FormatError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const IoError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return kExitPipeline;
    }
    return 0;
}
