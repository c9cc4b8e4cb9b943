#include "ts3c/distances.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "ts3c/errors.hpp"

namespace ts3c {

double euclidean(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ArgumentError("euclidean distance needs equal-length series");
    double acc = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        const double diff = x[t] - y[t];
        acc += diff * diff;
    }
    return std::sqrt(acc);
}

double dtw(std::span<const double> x, std::span<const double> y, std::optional<int> band) {
    const std::size_t n = x.size(), m = y.size();
    if (n == 0 || m == 0) throw ArgumentError("dtw of an empty series");
    if (band) {
        if (*band < 0) throw ArgumentError("dtw band must be >= 0");
        if (static_cast<std::size_t>(*band) <
            (n > m ? n - m : m - n))
            throw ArgumentError("dtw band admits no warping path");
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(m + 1, kInf), curr(m + 1, kInf);
    prev[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(curr.begin(), curr.end(), kInf);
        std::size_t lo = 1, hi = m;
        if (band) {
            const long long b = *band;
            const long long ii = static_cast<long long>(i);
            lo = static_cast<std::size_t>(std::max<long long>(1, ii - b));
            hi = static_cast<std::size_t>(std::min<long long>(static_cast<long long>(m), ii + b));
        }
        for (std::size_t j = lo; j <= hi; ++j) {
            const double diff = x[i - 1] - y[j - 1];
            const double best = std::min({prev[j], curr[j - 1], prev[j - 1]});
            curr[j] = diff * diff + best;
        }
        std::swap(prev, curr);
    }
    return std::sqrt(prev[m]);
}

std::vector<double> derivative_series(std::span<const double> x) {
    if (x.size() < 3) throw ArgumentError("derivative series needs at least 3 points");
    std::vector<double> d(x.size());
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        d[i] = ((x[i] - x[i - 1]) + (x[i + 1] - x[i - 1]) / 2.0) / 2.0;
    d.front() = d[1];
    d.back() = d[x.size() - 2];
    return d;
}

double dd_dtw(std::span<const double> x, std::span<const double> y, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw ArgumentError("alpha must lie in [0, 1]");
    const double base = alpha < 1.0 ? dtw(x, y) : 0.0;
    const double derived =
        alpha > 0.0 ? dtw(derivative_series(x), derivative_series(y)) : 0.0;
    return (1.0 - alpha) * base + alpha * derived;
}

namespace {

template <typename Cell>
DistanceMatrix fill_matrix(std::size_t count, int jobs, Cell&& cell) {
    DistanceMatrix matrix(count);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(count * (count - 1) / 2);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);

    const int workers = std::max(1, jobs);
    if (workers == 1 || pairs.size() < 64) {
        for (const auto& [i, j] : pairs) matrix.set(i, j, cell(i, j));
        return matrix;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            for (;;) {
                const std::size_t idx = next.fetch_add(64);
                if (idx >= pairs.size()) return;
                const std::size_t stop = std::min(idx + 64, pairs.size());
                for (std::size_t p = idx; p < stop; ++p)
                    matrix.set(pairs[p].first, pairs[p].second,
                               cell(pairs[p].first, pairs[p].second));
            }
        });
    }
    for (auto& t : threads) t.join();
    return matrix;
}

std::size_t matrix_medoid(const DistanceMatrix& m, const std::vector<std::size_t>& items) {
    std::size_t best = items.front();
    double best_sum = std::numeric_limits<double>::infinity();
    for (std::size_t candidate : items) {
        double sum = 0.0;
        for (std::size_t other : items) sum += m(candidate, other);
        if (sum < best_sum) {
            best_sum = sum;
            best = candidate;
        }
    }
    return best;
}

// Medoid-based intergroup variance: weighted squared distances from the
// cluster medoids to the global medoid.
double intergroup_variance(const DistanceMatrix& m, const Partition& partition) {
    std::vector<std::size_t> all(partition.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t global = matrix_medoid(m, all);
    double v = 0.0;
    for (const auto& group : partition.members()) {
        const std::size_t medoid = matrix_medoid(m, group);
        const double d = m(medoid, global);
        v += static_cast<double>(group.size()) * d * d;
    }
    return v;
}

Partition cluster_matrix(const DistanceMatrix& m, int num_clusters) {
    return cut_dendrogram(linkage_cluster(m, Linkage::Average), num_clusters);
}

}  // namespace

DistanceMatrix distance_matrix(const Dataset& dataset, BaselineMetric metric, double alpha,
                               int jobs) {
    const auto& series = dataset.series;
    if (metric == BaselineMetric::EuclideanOnly)
        return fill_matrix(series.size(), jobs, [&](std::size_t i, std::size_t j) {
            return euclidean(series[i].values, series[j].values);
        });
    return fill_matrix(series.size(), jobs, [&](std::size_t i, std::size_t j) {
        return dd_dtw(series[i].values, series[j].values, alpha);
    });
}

BaselineResult dddtw_hc(const Dataset& dataset, int num_clusters,
                        const std::vector<double>& alpha_grid, int jobs) {
    if (alpha_grid.empty()) throw ArgumentError("alpha grid is empty");
    if (num_clusters < 2) throw ArgumentError("baseline clustering needs >= 2 clusters");
    const auto& series = dataset.series;
    if (series.size() < static_cast<std::size_t>(num_clusters))
        throw ArgumentError("fewer series than clusters");

    bool need_base = false, need_derived = false;
    for (double alpha : alpha_grid) {
        if (alpha < 0.0 || alpha > 1.0) throw ArgumentError("alpha must lie in [0, 1]");
        need_base |= alpha < 1.0;
        need_derived |= alpha > 0.0;
    }

    // Both component matrices are alpha-independent; compute each once and
    // blend per grid value.
    DistanceMatrix base, derived;
    if (need_base)
        base = fill_matrix(series.size(), jobs, [&](std::size_t i, std::size_t j) {
            return dtw(series[i].values, series[j].values);
        });
    if (need_derived) {
        std::vector<std::vector<double>> slopes(series.size());
        for (std::size_t i = 0; i < series.size(); ++i)
            slopes[i] = derivative_series(series[i].values);
        derived = fill_matrix(series.size(), jobs, [&](std::size_t i, std::size_t j) {
            return dtw(slopes[i], slopes[j]);
        });
    }

    BaselineResult best;
    bool first = true;
    for (double alpha : alpha_grid) {
        DistanceMatrix blended(series.size());
        for (std::size_t i = 0; i < series.size(); ++i)
            for (std::size_t j = i + 1; j < series.size(); ++j) {
                const double b = need_base ? base(i, j) : 0.0;
                const double d = need_derived ? derived(i, j) : 0.0;
                blended.set(i, j, (1.0 - alpha) * b + alpha * d);
            }
        Partition partition = cluster_matrix(blended, num_clusters);
        const double v = intergroup_variance(blended, partition);
        if (first || v > best.intergroup_variance) {
            best.partition = std::move(partition);
            best.alpha = alpha;
            best.intergroup_variance = v;
            first = false;
        }
    }
    return best;
}

BaselineResult ed_hc(const Dataset& dataset, int num_clusters, int jobs) {
    if (num_clusters < 2) throw ArgumentError("baseline clustering needs >= 2 clusters");
    if (dataset.series.size() < static_cast<std::size_t>(num_clusters))
        throw ArgumentError("fewer series than clusters");
    const DistanceMatrix matrix =
        distance_matrix(dataset, BaselineMetric::EuclideanOnly, 0.0, jobs);
    BaselineResult result;
    result.partition = cluster_matrix(matrix, num_clusters);
    result.alpha = 0.0;
    result.intergroup_variance = intergroup_variance(matrix, result.partition);
    return result;
}

}  // namespace ts3c
