#include "ts3c/series_mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ts3c/errors.hpp"
#include "ts3c/segmentation.hpp"

namespace ts3c {

SeriesSummary summarize_series(const std::vector<MappedSegment>& segments, int k) {
    if (segments.empty()) throw ArgumentError("cannot summarize a series with no segments");
    if (k < 1) throw ArgumentError("segment cluster count must be >= 1");

    const std::size_t m = segments.size();
    std::vector<Point> features;
    features.reserve(m);
    for (const auto& seg : segments) features.push_back(seg.features);

    const int groups = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(k), m));
    Partition partition = ward_cluster(features, groups);

    SeriesSummary summary;
    summary.segment_count = m;
    const std::size_t variance_slot = features.front().size() - 3;

    for (const auto& group : partition.members()) {
        ClusterSummary cs;
        cs.centroid = partition.centroids[static_cast<std::size_t>(
            partition.assignment[group.front()])];
        std::size_t extreme = group.front();
        for (std::size_t idx : group)
            if (features[idx][variance_slot] > features[extreme][variance_slot]) extreme = idx;
        cs.extreme = features[extreme];
        summary.clusters.push_back(std::move(cs));
    }
    // Fewer segments than k: repeat the last summary to keep the width fixed.
    while (summary.clusters.size() < static_cast<std::size_t>(k))
        summary.clusters.push_back(summary.clusters.back());

    // MD: fit-error gap between the segment farthest from its own centroid
    // and the one closest, across all segments of the series.
    std::size_t farthest = 0, closest = 0;
    double max_dist = -1.0, min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& centroid =
            partition.centroids[static_cast<std::size_t>(partition.assignment[i])];
        const double dist = euclidean_distance(features[i], centroid);
        if (dist > max_dist) {
            max_dist = dist;
            farthest = i;
        }
        if (dist < min_dist) {
            min_dist = dist;
            closest = i;
        }
    }
    summary.md = segments[farthest].mse - segments[closest].mse;
    return summary;
}

std::vector<std::size_t> match_centroids(const std::vector<ClusterSummary>& reference,
                                         const std::vector<ClusterSummary>& other) {
    if (reference.size() != other.size())
        throw ArgumentError("centroid matching needs summaries of equal length");
    const std::size_t k = reference.size();

    std::vector<std::size_t> perm(k, k);
    std::vector<bool> ref_used(k, false), other_used(k, false);
    for (std::size_t round = 0; round < k; ++round) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_r = k, best_o = k;
        for (std::size_t r = 0; r < k; ++r) {
            if (ref_used[r]) continue;
            for (std::size_t o = 0; o < k; ++o) {
                if (other_used[o]) continue;
                const double dist =
                    euclidean_distance(reference[r].centroid, other[o].centroid);
                if (dist < best) {
                    best = dist;
                    best_r = r;
                    best_o = o;
                }
            }
        }
        ref_used[best_r] = true;
        other_used[best_o] = true;
        perm[best_r] = best_o;
    }
    return perm;
}

std::vector<double> flatten_summary(const SeriesSummary& summary,
                                    const std::vector<std::size_t>& order) {
    std::vector<double> out;
    const std::size_t l = summary.clusters.front().centroid.size();
    out.reserve(2 * l * order.size() + 2);
    for (std::size_t slot : order) {
        const auto& cs = summary.clusters[slot];
        out.insert(out.end(), cs.centroid.begin(), cs.centroid.end());
        out.insert(out.end(), cs.extreme.begin(), cs.extreme.end());
    }
    out.push_back(summary.md);
    out.push_back(static_cast<double>(summary.segment_count));
    return out;
}

std::vector<MappedSeries> build_mapped_dataset(const Dataset& dataset, double sep_max,
                                               int degree, int k) {
    if (dataset.series.empty()) throw ArgumentError("empty dataset");

    std::vector<SeriesSummary> summaries;
    summaries.reserve(dataset.size());
    for (const auto& series : dataset.series) {
        const Segmentation segmentation = segment_series(series, sep_max, degree);
        const auto mapped = map_segments(segmentation, series.values);
        summaries.push_back(summarize_series(mapped, k));
    }

    std::vector<std::size_t> identity(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;

    std::vector<MappedSeries> out;
    out.reserve(dataset.size());
    const auto& reference = summaries.front().clusters;
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        MappedSeries ms;
        ms.series_id = dataset.series[i].id;
        const auto order =
            i == 0 ? identity : match_centroids(reference, summaries[i].clusters);
        ms.vector = flatten_summary(summaries[i], order);
        out.push_back(std::move(ms));
    }
    return out;
}

}  // namespace ts3c
