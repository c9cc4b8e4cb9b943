#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ts3c/segmentation.hpp"

namespace ts3c {

// Population variance (divide by n).
double variance(std::span<const double> values);

// Mean cubed deviation over sigma^3 (population sigma); 0 when sigma == 0.
double skewness(std::span<const double> values);

// Lag-1 autocovariance sum divided by the population variance. The sum runs
// to the penultimate index so y_{i+1} stays inside the window; not divided
// by n, so the magnitude grows with window length. 0 when the variance is 0.
double autocorrelation(std::span<const double> values);

// Feature vector of one segment: [fit coefficients without the intercept,
// ascending by power | variance | skewness | autocorrelation]. Length is
// degree + 3 for every segment, which is what makes the segments of one
// series clusterable together.
struct MappedSegment {
    std::vector<double> features;
    std::size_t segment_index = 0;  // position within the source Segmentation
    double mse = 0.0;               // fit MSE of the source segment

    double variance_entry(int degree) const { return features[degree]; }
};

MappedSegment map_segment(const Segment& segment, std::span<const double> series_values,
                          std::size_t segment_index);

std::vector<MappedSegment> map_segments(const Segmentation& segmentation,
                                        std::span<const double> series_values);

}  // namespace ts3c
