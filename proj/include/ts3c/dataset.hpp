#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ts3c {

// One labeled univariate series. `id` equals the load order within its
// dataset (train rows first, then test rows).
struct TimeSeries {
    int id = 0;
    std::optional<int> label;
    std::vector<double> values;

    std::size_t length() const { return values.size(); }
};

struct Dataset {
    std::string name;
    std::vector<TimeSeries> series;
    int num_classes = 1;

    std::size_t size() const { return series.size(); }
    bool labeled() const;
    // Dense class ids in series order. Throws ArgumentError if unlabeled.
    std::vector<int> labels() const;
};

// Reads a UCR-archive-format file pair: line-oriented text, each line a
// class label followed by the series values, separated by commas and/or
// whitespace. Train rows come first, test rows (if given) after. Raw label
// values (floats, negatives) are mapped to dense ids by first appearance.
Dataset load_ucr(const std::string& path_train,
                 const std::optional<std::string>& path_test = std::nullopt,
                 const std::string& name = "");

// Writes one series per line as `label,v1,v2,...` with full precision.
// Unlabeled series get label 0.
void save_ucr(const Dataset& dataset, const std::string& path);

// Per-series z-normalization; constant series map to all zeros.
Dataset znormalize(const Dataset& dataset);

// One line of the benchmark output table.
struct ResultRow {
    std::string dataset;
    std::string method;
    std::optional<double> sep_max;
    std::optional<double> rand_index;
    double time_s = 0.0;
};

// CSV with header `dataset,method,sep_max,rand_index,time_s`, rows in input
// order, rand_index with 3 decimals.
void write_results(const std::vector<ResultRow>& rows, const std::string& path);
std::string format_results(const std::vector<ResultRow>& rows);

}  // namespace ts3c
