#include "ts3c/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "ts3c/errors.hpp"

namespace ts3c {

bool Dataset::labeled() const {
    return !series.empty() && series.front().label.has_value();
}

std::vector<int> Dataset::labels() const {
    if (!labeled()) throw ArgumentError("dataset has no ground-truth labels");
    std::vector<int> out;
    out.reserve(series.size());
    for (const auto& s : series) out.push_back(*s.label);
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : line) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

double parse_number(const std::string& token, std::size_t line_number) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("non-numeric token '" + token + "'", line_number);
    if (!std::isfinite(value))
        throw ParseError("non-finite value '" + token + "'", line_number);
    return value;
}

struct RawRow {
    double label;
    std::vector<double> values;
};

void read_rows(const std::string& path, std::vector<RawRow>& rows) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2)
            throw FormatError("'" + path + "' line " + std::to_string(line_number) +
                              ": expected a label followed by at least one value");
        RawRow row;
        row.label = parse_number(tokens[0], line_number);
        row.values.reserve(tokens.size() - 1);
        for (std::size_t i = 1; i < tokens.size(); ++i)
            row.values.push_back(parse_number(tokens[i], line_number));
        if (!rows.empty() && row.values.size() != rows.front().values.size())
            throw FormatError("'" + path + "' line " + std::to_string(line_number) +
                              ": row has " + std::to_string(row.values.size()) +
                              " values, expected " + std::to_string(rows.front().values.size()));
        rows.push_back(std::move(row));
    }
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
    // Strip the conventional split suffix so Coffee_TRAIN loads as Coffee.
    for (const char* suffix : {"_TRAIN", "_TEST"}) {
        if (base.size() > std::strlen(suffix) &&
            base.compare(base.size() - std::strlen(suffix), std::string::npos, suffix) == 0) {
            base = base.substr(0, base.size() - std::strlen(suffix));
            break;
        }
    }
    return base;
}

}  // namespace

Dataset load_ucr(const std::string& path_train, const std::optional<std::string>& path_test,
                 const std::string& name) {
    std::vector<RawRow> rows;
    read_rows(path_train, rows);
    if (path_test) {
        std::vector<RawRow> test_rows;
        read_rows(*path_test, test_rows);
        if (!rows.empty() && !test_rows.empty() &&
            rows.front().values.size() != test_rows.front().values.size())
            throw FormatError("train/test series lengths differ between '" + path_train +
                              "' and '" + *path_test + "'");
        rows.insert(rows.end(), std::make_move_iterator(test_rows.begin()),
                    std::make_move_iterator(test_rows.end()));
    }
    if (rows.empty()) throw FormatError("'" + path_train + "' contains no series");

    Dataset dataset;
    dataset.name = name.empty() ? stem_of(path_train) : name;
    std::map<double, int> class_ids;  // raw label -> dense id, first-appearance order
    dataset.series.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto [it, inserted] =
            class_ids.emplace(rows[i].label, static_cast<int>(class_ids.size()));
        (void)inserted;
        TimeSeries series;
        series.id = static_cast<int>(i);
        series.label = it->second;
        series.values = std::move(rows[i].values);
        dataset.series.push_back(std::move(series));
    }
    dataset.num_classes = static_cast<int>(class_ids.size());
    return dataset;
}

Dataset znormalize(const Dataset& dataset) {
    Dataset out = dataset;
    for (auto& s : out.series) {
        const std::size_t n = s.values.size();
        double mean = 0.0;
        for (double v : s.values) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : s.values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);
        const double sd = std::sqrt(var);
        for (double& v : s.values) v = sd > 0.0 ? (v - mean) / sd : 0.0;
    }
    return out;
}

void save_ucr(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    char buffer[64];
    for (const auto& s : dataset.series) {
        out << (s.label ? *s.label : 0);
        for (double v : s.values) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", v);
            out << ',' << buffer;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

std::string format_compact(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

}  // namespace

std::string format_results(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    out << "dataset,method,sep_max,rand_index,time_s\n";
    char ri[32];
    for (const auto& row : rows) {
        out << row.dataset << ',' << row.method << ',';
        if (row.sep_max) out << format_compact(*row.sep_max);
        out << ',';
        if (row.rand_index) {
            std::snprintf(ri, sizeof(ri), "%.3f", *row.rand_index);
            out << ri;
        }
        out << ',' << format_compact(row.time_s) << '\n';
    }
    return out.str();
}

void write_results(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << format_results(rows);
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace ts3c
