#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ts3c/dataset.hpp"
#include "ts3c/hier_clustering.hpp"

namespace ts3c {

double euclidean(std::span<const double> x, std::span<const double> y);

// Classic dynamic-programming DTW: minimum over monotone, contiguous,
// endpoint-anchored warping paths of the summed squared differences,
// square-rooted at the end. `band` is a Sakoe-Chiba half-width restricting
// |i - j| <= band.
double dtw(std::span<const double> x, std::span<const double> y,
           std::optional<int> band = std::nullopt);

// d_i = ((x_i - x_{i-1}) + (x_{i+1} - x_{i-1}) / 2) / 2 for interior
// points; endpoints copy their nearest interior derivative.
std::vector<double> derivative_series(std::span<const double> x);

// (1 - alpha) * DTW(x, y) + alpha * DTW(x', y') on the derivative series.
double dd_dtw(std::span<const double> x, std::span<const double> y, double alpha);

enum class BaselineMetric { DdDtw, EuclideanOnly };

DistanceMatrix distance_matrix(const Dataset& dataset, BaselineMetric metric,
                               double alpha = 0.0, int jobs = 1);

struct BaselineResult {
    Partition partition;
    double alpha = 0.0;
    double intergroup_variance = 0.0;
};

// Average-linkage agglomerative clustering on the DD_DTW matrix, repeated
// over the alpha grid. Each candidate is scored by the medoid-based
// intergroup variance V = sum_l T_l * d(medoid_l, global medoid)^2 and the
// largest V wins; ties go to the smallest alpha.
BaselineResult dddtw_hc(const Dataset& dataset, int num_clusters,
                        const std::vector<double>& alpha_grid, int jobs = 1);

// Same protocol with the plain Euclidean distance matrix (no alpha sweep).
BaselineResult ed_hc(const Dataset& dataset, int num_clusters, int jobs = 1);

}  // namespace ts3c
