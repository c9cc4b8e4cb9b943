#pragma once

#include <cstddef>
#include <vector>

#include "ts3c/dataset.hpp"
#include "ts3c/hier_clustering.hpp"
#include "ts3c/segment_features.hpp"

namespace ts3c {

// Per-cluster description used to build the fixed-length series vector:
// the cluster centroid and the member with the highest variance entry.
struct ClusterSummary {
    Point centroid;
    Point extreme;
};

struct SeriesSummary {
    std::vector<ClusterSummary> clusters;  // exactly k entries
    double md = 0.0;                       // MSE(farthest member) - MSE(closest member)
    std::size_t segment_count = 0;
};

// Fixed-length vector for one series: [cluster summaries in matched order |
// MD | segment count]. Length is 2*(degree+3)*k + 2.
struct MappedSeries {
    std::vector<double> vector;
    int series_id = 0;
};

// Ward-clusters the mapped segments into min(k, m) groups and summarizes
// each. When a series has fewer segments than k, the last summary is
// duplicated to keep the output width fixed. MD differences the fit MSE of
// the segment farthest from its own cluster centroid (Euclidean, feature
// space) and the one closest, measured over all segments of the series.
SeriesSummary summarize_series(const std::vector<MappedSegment>& segments, int k);

// Greedy matching by ascending centroid distance: repeatedly pairs the
// globally closest unmatched (reference, other) centroids. Returns the
// permutation p such that other[p[i]] lines up with reference[i].
std::vector<std::size_t> match_centroids(const std::vector<ClusterSummary>& reference,
                                         const std::vector<ClusterSummary>& other);

std::vector<double> flatten_summary(const SeriesSummary& summary,
                                    const std::vector<std::size_t>& order);

// Stage one over a whole dataset: segment, map, summarize and align every
// series against the reference series (dataset index 0).
std::vector<MappedSeries> build_mapped_dataset(const Dataset& dataset, double sep_max,
                                               int degree = 1, int k = 2);

}  // namespace ts3c
