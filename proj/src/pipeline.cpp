#include "ts3c/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>

#include "ts3c/errors.hpp"

namespace ts3c {

std::vector<double> PipelineParams::default_grid() {
    std::vector<double> grid;
    for (int v = 10; v <= 100; v += 10) grid.push_back(static_cast<double>(v));
    return grid;
}

namespace {

SweepEntry evaluate_entry(const Dataset& dataset, double sep_max,
                          const PipelineParams& params, int num_clusters) {
    SweepEntry entry;
    entry.sep_max = sep_max;
    const auto start = std::chrono::steady_clock::now();
    try {
        entry.mapped =
            build_mapped_dataset(dataset, sep_max, params.degree, params.segment_clusters);
        std::vector<Point> points;
        points.reserve(entry.mapped.size());
        for (const auto& m : entry.mapped) points.push_back(m.vector);
        entry.partition = ward_cluster(points, num_clusters);
        entry.report = compute_report(points, entry.partition);
    } catch (const DegeneratePartitionError& err) {
        entry.skipped = true;
        entry.skip_reason = err.kind;
    }
    entry.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return entry;
}

}  // namespace

std::vector<SweepEntry> sweep(const Dataset& dataset, const PipelineParams& params) {
    if (params.grid.empty()) throw ArgumentError("sep_max grid is empty");
    const int num_clusters =
        params.num_clusters > 0 ? params.num_clusters : dataset.num_classes;
    if (num_clusters < 2) throw ArgumentError("final clustering needs >= 2 groups");
    if (dataset.series.size() < static_cast<std::size_t>(num_clusters))
        throw ArgumentError("fewer series than clusters");

    std::vector<SweepEntry> entries(params.grid.size());
    if (params.jobs > 1) {
        std::vector<std::future<SweepEntry>> futures;
        futures.reserve(params.grid.size());
        for (double sep_max : params.grid)
            futures.push_back(std::async(std::launch::async, evaluate_entry,
                                         std::cref(dataset), sep_max, std::cref(params),
                                         num_clusters));
        for (std::size_t i = 0; i < futures.size(); ++i) entries[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < params.grid.size(); ++i)
            entries[i] = evaluate_entry(dataset, params.grid[i], params, num_clusters);
    }
    return entries;
}

const SweepEntry& select_ch(const std::vector<SweepEntry>& entries) {
    const SweepEntry* best = nullptr;
    for (const auto& entry : entries) {
        if (entry.skipped) continue;
        if (!best || entry.report.ch > best->report.ch ||
            (entry.report.ch == best->report.ch && entry.sep_max < best->sep_max))
            best = &entry;
    }
    if (!best) throw PipelineError("every sweep entry was degenerate");
    return *best;
}

std::vector<int> majority_votes(const std::vector<SweepEntry>& entries) {
    std::vector<int> votes(entries.size(), 0);
    struct Criterion {
        double (*value)(const IndexReport&);
        bool maximize;
    };
    static const Criterion criteria[] = {
        {[](const IndexReport& r) { return r.sse; }, false},
        {[](const IndexReport& r) { return r.nsse; }, false},
        {[](const IndexReport& r) { return r.ch; }, true},
        {[](const IndexReport& r) { return r.si; }, true},
        {[](const IndexReport& r) { return r.db; }, false},
        {[](const IndexReport& r) { return r.du_gd33; }, true},
        {[](const IndexReport& r) { return r.du_gd43; }, true},
        {[](const IndexReport& r) { return r.du_gd53; }, true},
        {[](const IndexReport& r) { return r.cop; }, false},
    };
    for (const auto& criterion : criteria) {
        std::size_t winner = entries.size();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].skipped) continue;
            if (winner == entries.size()) {
                winner = i;
                continue;
            }
            const double current = criterion.value(entries[i].report);
            const double best = criterion.value(entries[winner].report);
            const bool improves = criterion.maximize ? current > best : current < best;
            // Ties keep the earlier (smaller sep_max) entry.
            if (improves) winner = i;
        }
        if (winner < entries.size()) ++votes[winner];
    }
    return votes;
}

const SweepEntry& select_majority_voting(const std::vector<SweepEntry>& entries) {
    const auto votes = majority_votes(entries);
    const SweepEntry* best = nullptr;
    int best_votes = -1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].skipped) continue;
        const bool wins =
            !best || votes[i] > best_votes ||
            (votes[i] == best_votes &&
             (entries[i].report.ch > best->report.ch ||
              (entries[i].report.ch == best->report.ch && entries[i].sep_max < best->sep_max)));
        if (wins) {
            best = &entries[i];
            best_votes = votes[i];
        }
    }
    if (!best) throw PipelineError("every sweep entry was degenerate");
    return *best;
}

RunResult run(const Dataset& dataset, Strategy strategy, const PipelineParams& params) {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    result.strategy = strategy;
    result.entries = sweep(dataset, params);
    result.chosen = strategy == Strategy::CH ? select_ch(result.entries)
                                             : select_majority_voting(result.entries);
    if (dataset.labeled()) result.ri = rand_index(result.chosen.partition, dataset.labels());
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace ts3c
