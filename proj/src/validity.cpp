#include "ts3c/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ts3c/errors.hpp"

namespace ts3c {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_partition(const std::vector<Point>& points, const Partition& partition,
                     int min_k) {
    if (points.size() != partition.assignment.size())
        throw ArgumentError("partition does not match the point count");
    if (partition.k < min_k)
        throw DegeneratePartitionError(
            "index undefined for k=" + std::to_string(partition.k), "single-cluster");
    if (partition.centroids.size() != static_cast<std::size_t>(partition.k))
        throw ArgumentError("partition is missing centroids");
}

void check_distinct_centroids(const Partition& partition) {
    for (std::size_t i = 0; i < partition.centroids.size(); ++i)
        for (std::size_t j = i + 1; j < partition.centroids.size(); ++j)
            if (euclidean_distance(partition.centroids[i], partition.centroids[j]) == 0.0)
                throw DegeneratePartitionError("coincident centroids", "coincident-centroids");
}

Point grand_mean(const std::vector<Point>& points) {
    Point mean(points.front().size(), 0.0);
    for (const auto& p : points)
        for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += p[d];
    for (double& v : mean) v /= static_cast<double>(points.size());
    return mean;
}

}  // namespace

double sse_index(const std::vector<Point>& points, const Partition& partition) {
    check_partition(points, partition, 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        acc += squared_euclidean(
            points[i], partition.centroids[static_cast<std::size_t>(partition.assignment[i])]);
    return acc / static_cast<double>(points.size());
}

double nsse_index(const std::vector<Point>& points, const Partition& partition,
                  bool literal_denominator) {
    check_partition(points, partition, 2);
    const double numerator = sse_index(points, partition);
    const std::size_t k = static_cast<std::size_t>(partition.k);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            sum += euclidean_distance(partition.centroids[i], partition.centroids[j]);
    double denominator;
    if (literal_denominator) {
        denominator = std::tgamma(static_cast<double>(points.size())) * sum;
    } else {
        denominator = sum / (static_cast<double>(k * (k - 1)) / 2.0);
    }
    if (denominator == 0.0)
        throw DegeneratePartitionError("coincident centroids", "coincident-centroids");
    return numerator / denominator;
}

double calinski_harabasz(const std::vector<Point>& points, const Partition& partition) {
    check_partition(points, partition, 2);
    const Point mean = grand_mean(points);
    double between = 0.0, within = 0.0;
    std::vector<std::size_t> counts(static_cast<std::size_t>(partition.k), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto c = static_cast<std::size_t>(partition.assignment[i]);
        within += squared_euclidean(points[i], partition.centroids[c]);
        ++counts[c];
    }
    for (std::size_t c = 0; c < counts.size(); ++c)
        between += static_cast<double>(counts[c]) *
                   squared_euclidean(partition.centroids[c], mean);
    if (within == 0.0) return kInf;
    const double t = static_cast<double>(points.size());
    const double k = static_cast<double>(partition.k);
    return (between * (t - k)) / (within * (k - 1.0));
}

double silhouette(const std::vector<Point>& points, const Partition& partition) {
    check_partition(points, partition, 2);
    const auto members = partition.members();
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const int own = partition.assignment[i];
        double a = 0.0;
        double b = kInf;
        for (int c = 0; c < partition.k; ++c) {
            const auto& group = members[static_cast<std::size_t>(c)];
            double mean_dist = 0.0;
            for (std::size_t j : group) mean_dist += euclidean_distance(points[i], points[j]);
            mean_dist /= static_cast<double>(group.size());
            if (c == own)
                a = mean_dist;  // self term included, contributes 0
            else
                b = std::min(b, mean_dist);
        }
        const double denom = std::max(a, b);
        total += denom == 0.0 ? 0.0 : (b - a) / denom;
    }
    return total / static_cast<double>(points.size());
}

double davies_bouldin(const std::vector<Point>& points, const Partition& partition) {
    check_partition(points, partition, 2);
    check_distinct_centroids(partition);
    const auto members = partition.members();
    const std::size_t k = static_cast<std::size_t>(partition.k);
    std::vector<double> alpha(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i : members[c])
            alpha[c] += euclidean_distance(points[i], partition.centroids[c]);
        alpha[c] /= static_cast<double>(members[c].size());
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            worst = std::max(worst, (alpha[i] + alpha[j]) /
                                        euclidean_distance(partition.centroids[i],
                                                           partition.centroids[j]));
        }
        acc += worst;
    }
    return acc / static_cast<double>(k);
}

namespace {

// Point-symmetry distance: reflect x through the centroid and take the
// distance to the reflection's nearest cluster member.
double point_symmetry_distance(const Point& x, const std::vector<std::size_t>& group,
                               const std::vector<Point>& points, const Point& centroid) {
    Point reflected(centroid.size());
    for (std::size_t d = 0; d < centroid.size(); ++d)
        reflected[d] = 2.0 * centroid[d] - x[d];
    double best = kInf;
    for (std::size_t j : group)
        best = std::min(best, euclidean_distance(reflected, points[j]));
    return best;
}

}  // namespace

double dunn(const std::vector<Point>& points, const Partition& partition,
            DunnVariant variant) {
    check_partition(points, partition, 2);
    const auto members = partition.members();
    const std::size_t k = static_cast<std::size_t>(partition.k);

    double max_diam = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
        const auto& group = members[c];
        double diam = 0.0;
        if (variant == DunnVariant::GD53) {
            for (std::size_t i : group)
                diam += point_symmetry_distance(points[i], group, points,
                                                partition.centroids[c]);
            diam *= 2.0 / static_cast<double>(group.size());
        } else {
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b)
                    diam = std::max(diam,
                                    euclidean_distance(points[group[a]], points[group[b]]));
        }
        max_diam = std::max(max_diam, diam);
    }
    if (max_diam == 0.0) return kInf;

    double best = kInf;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            double delta = 0.0;
            switch (variant) {
                case DunnVariant::GD33:
                    for (std::size_t a : members[i])
                        for (std::size_t b : members[j])
                            delta += euclidean_distance(points[a], points[b]);
                    delta /= static_cast<double>(members[i].size() * members[j].size());
                    break;
                case DunnVariant::GD43:
                    delta = euclidean_distance(partition.centroids[i], partition.centroids[j]);
                    break;
                case DunnVariant::GD53: {
                    double spread = 0.0;
                    for (std::size_t a : members[i])
                        spread += euclidean_distance(points[a], partition.centroids[i]);
                    for (std::size_t b : members[j])
                        spread += euclidean_distance(points[b], partition.centroids[j]);
                    delta = spread /
                            static_cast<double>(members[i].size() + members[j].size());
                    break;
                }
            }
            best = std::min(best, delta / max_diam);
        }
    }
    return best;
}

double cop_index(const std::vector<Point>& points, const Partition& partition) {
    check_partition(points, partition, 2);
    const auto members = partition.members();
    double acc = 0.0;
    for (int c = 0; c < partition.k; ++c) {
        const auto& group = members[static_cast<std::size_t>(c)];
        double cohesion = 0.0;
        for (std::size_t i : group)
            cohesion +=
                euclidean_distance(points[i], partition.centroids[static_cast<std::size_t>(c)]);
        // Furthest-neighbour separation: the outside point whose farthest
        // cluster member is nearest.
        double separation = kInf;
        for (std::size_t x = 0; x < points.size(); ++x) {
            if (partition.assignment[x] == c) continue;
            double farthest = 0.0;
            for (std::size_t i : group)
                farthest = std::max(farthest, euclidean_distance(points[x], points[i]));
            separation = std::min(separation, farthest);
        }
        if (separation == 0.0)
            throw DegeneratePartitionError("zero furthest-neighbour distance",
                                           "coincident-points");
        acc += cohesion / (static_cast<double>(group.size()) * separation);
    }
    return acc / static_cast<double>(points.size());
}

IndexReport compute_report(const std::vector<Point>& points, const Partition& partition) {
    IndexReport report;
    report.sse = sse_index(points, partition);
    report.nsse = nsse_index(points, partition);
    report.ch = calinski_harabasz(points, partition);
    report.si = silhouette(points, partition);
    report.db = davies_bouldin(points, partition);
    report.du_gd33 = dunn(points, partition, DunnVariant::GD33);
    report.du_gd43 = dunn(points, partition, DunnVariant::GD43);
    report.du_gd53 = dunn(points, partition, DunnVariant::GD53);
    report.cop = cop_index(points, partition);
    return report;
}

double rand_index(const std::vector<int>& predicted, const std::vector<int>& truth) {
    if (predicted.size() != truth.size())
        throw ArgumentError("prediction and ground truth differ in length");
    const std::size_t t = predicted.size();
    if (t < 2) throw ArgumentError("rand index needs at least 2 items");

    // Pair counts via the contingency table.
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> by_cluster, by_class;
    for (std::size_t i = 0; i < t; ++i) {
        joint[{predicted[i], truth[i]}] += 1.0;
        by_cluster[predicted[i]] += 1.0;
        by_class[truth[i]] += 1.0;
    }
    auto pairs = [](double n) { return n * (n - 1.0) / 2.0; };
    double agree_same = 0.0;
    for (const auto& [key, count] : joint) agree_same += pairs(count);
    double same_cluster = 0.0, same_class = 0.0;
    for (const auto& [key, count] : by_cluster) same_cluster += pairs(count);
    for (const auto& [key, count] : by_class) same_class += pairs(count);

    const double total = pairs(static_cast<double>(t));
    const double mixed_cluster = same_cluster - agree_same;  // same cluster, class differs
    const double mixed_class = same_class - agree_same;      // same class, cluster differs
    const double agree_diff = total - agree_same - mixed_cluster - mixed_class;
    return (agree_same + agree_diff) / total;
}

double rand_index(const Partition& predicted, const std::vector<int>& truth) {
    return rand_index(predicted.assignment, truth);
}

}  // namespace ts3c
