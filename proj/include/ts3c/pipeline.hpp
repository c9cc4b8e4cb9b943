#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ts3c/dataset.hpp"
#include "ts3c/hier_clustering.hpp"
#include "ts3c/series_mapping.hpp"
#include "ts3c/validity.hpp"

namespace ts3c {

enum class Strategy { CH, MajorityVoting };

struct SweepEntry {
    double sep_max = 0.0;
    bool skipped = false;
    std::string skip_reason;
    Partition partition;
    IndexReport report;
    std::vector<MappedSeries> mapped;
    double wall_seconds = 0.0;
};

struct RunResult {
    Strategy strategy = Strategy::CH;
    SweepEntry chosen;
    std::optional<double> ri;
    std::vector<SweepEntry> entries;
    double wall_seconds = 0.0;
};

struct PipelineParams {
    std::vector<double> grid = default_grid();
    int num_clusters = 0;  // L; 0 = use dataset.num_classes
    int segment_clusters = 2;
    int degree = 1;
    int jobs = 1;

    static std::vector<double> default_grid();  // {10, 20, ..., 100}
};

// One grid pass: stage one + final Ward clustering + the full index report
// per sep_max, in grid order. Degenerate entries are kept but marked
// skipped instead of aborting the sweep.
std::vector<SweepEntry> sweep(const Dataset& dataset, const PipelineParams& params);

// Entry with the maximal CH; ties pick the smaller sep_max.
const SweepEntry& select_ch(const std::vector<SweepEntry>& entries);

// Each of the 9 internal indices votes for the entry where it attains its
// best value. Most votes wins; ties go to the higher CH, then the smaller
// sep_max.
const SweepEntry& select_majority_voting(const std::vector<SweepEntry>& entries);

std::vector<int> majority_votes(const std::vector<SweepEntry>& entries);

RunResult run(const Dataset& dataset, Strategy strategy, const PipelineParams& params = {});

}  // namespace ts3c
