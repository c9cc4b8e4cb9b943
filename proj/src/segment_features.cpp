#include "ts3c/segment_features.hpp"

#include <cmath>

#include "ts3c/errors.hpp"

namespace ts3c {

namespace {

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

double variance(std::span<const double> values) {
    if (values.empty()) throw ArgumentError("variance of an empty window");
    const double mean = mean_of(values);
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

double skewness(std::span<const double> values) {
    if (values.empty()) throw ArgumentError("skewness of an empty window");
    const double mean = mean_of(values);
    const double var = variance(values);
    if (var == 0.0) return 0.0;
    double m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m3 += d * d * d;
    }
    m3 /= static_cast<double>(values.size());
    return m3 / std::pow(std::sqrt(var), 3);
}

double autocorrelation(std::span<const double> values) {
    if (values.size() < 2) throw ArgumentError("autocorrelation needs at least 2 points");
    const double mean = mean_of(values);
    const double var = variance(values);
    if (var == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        acc += (values[i] - mean) * (values[i + 1] - mean);
    return acc / var;
}

MappedSegment map_segment(const Segment& segment, std::span<const double> series_values,
                          std::size_t segment_index) {
    const auto window = series_values.subspan(static_cast<std::size_t>(segment.start),
                                              static_cast<std::size_t>(segment.point_count()));
    MappedSegment mapped;
    mapped.segment_index = segment_index;
    mapped.mse = segment.mse;
    mapped.features.reserve(segment.coefficients.size() - 1 + 3);
    // Intercept excluded: the level of the segment is not part of its shape.
    for (std::size_t j = 1; j < segment.coefficients.size(); ++j)
        mapped.features.push_back(segment.coefficients[j]);
    mapped.features.push_back(variance(window));
    mapped.features.push_back(skewness(window));
    mapped.features.push_back(window.size() >= 2 ? autocorrelation(window) : 0.0);
    return mapped;
}

std::vector<MappedSegment> map_segments(const Segmentation& segmentation,
                                        std::span<const double> series_values) {
    std::vector<MappedSegment> out;
    out.reserve(segmentation.segments.size());
    for (std::size_t s = 0; s < segmentation.segments.size(); ++s)
        out.push_back(map_segment(segmentation.segments[s], series_values, s));
    return out;
}

}  // namespace ts3c
