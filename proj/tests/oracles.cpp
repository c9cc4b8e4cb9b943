#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace oracle {

namespace {

using ts3c::Point;

double dist(const Point& a, const Point& b) {
    double acc = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) acc += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(acc);
}

std::vector<std::vector<std::size_t>> group_members(const std::vector<int>& assignment) {
    const int k = *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assignment.size(); ++i)
        groups[static_cast<std::size_t>(assignment[i])].push_back(i);
    return groups;
}

Point centroid_of(const std::vector<Point>& points, const std::vector<std::size_t>& members) {
    Point c(points.front().size(), 0.0);
    for (std::size_t i : members)
        for (std::size_t d = 0; d < c.size(); ++d) c[d] += points[i][d];
    for (double& v : c) v /= static_cast<double>(members.size());
    return c;
}

}  // namespace

PolyFit batch_polyfit(const std::vector<double>& values, int degree) {
    const std::size_t n = values.size();
    const std::size_t cols = static_cast<std::size_t>(degree) + 1;

    // Vandermonde with x = 0..n-1, factored QR by modified Gram-Schmidt.
    std::vector<std::vector<double>> a(cols, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            a[j][i] = p;
            p *= static_cast<double>(i);
        }
    }
    std::vector<std::vector<double>> q(cols, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> r(cols, std::vector<double>(cols, 0.0));
    for (std::size_t j = 0; j < cols; ++j) {
        q[j] = a[j];
        for (std::size_t i = 0; i < j; ++i) {
            double proj = 0.0;
            for (std::size_t t = 0; t < n; ++t) proj += q[i][t] * q[j][t];
            r[i][j] = proj;
            for (std::size_t t = 0; t < n; ++t) q[j][t] -= proj * q[i][t];
        }
        double norm = 0.0;
        for (double v : q[j]) norm += v * v;
        norm = std::sqrt(norm);
        r[j][j] = norm;
        if (norm > 1e-12)
            for (double& v : q[j]) v /= norm;
        else
            std::fill(q[j].begin(), q[j].end(), 0.0);
    }
    // beta = R^-1 Q^T y (rank-deficient columns get 0)
    std::vector<double> qty(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t t = 0; t < n; ++t) qty[j] += q[j][t] * values[t];
    PolyFit fit;
    fit.coefficients.assign(cols, 0.0);
    for (std::size_t j = cols; j-- > 0;) {
        if (r[j][j] <= 1e-12) continue;
        double acc = qty[j];
        for (std::size_t c = j + 1; c < cols; ++c) acc -= r[j][c] * fit.coefficients[c];
        fit.coefficients[j] = acc / r[j][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        double yhat = 0.0, p = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            yhat += fit.coefficients[j] * p;
            p *= static_cast<double>(i);
        }
        fit.sse += (values[i] - yhat) * (values[i] - yhat);
    }
    return fit;
}

std::vector<std::vector<int>> naive_ward_levels(const std::vector<Point>& points) {
    const std::size_t n = points.size();
    struct Cluster {
        int id;
        std::vector<std::size_t> members;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters.push_back({static_cast<int>(i), {i}});

    auto snapshot = [&] {
        std::vector<int> assignment(n, -1);
        // Relabel by first member appearance.
        std::vector<int> owner(n, -1);
        for (std::size_t c = 0; c < clusters.size(); ++c)
            for (std::size_t i : clusters[c].members) owner[i] = static_cast<int>(c);
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < n; ++i) {
            auto [it, inserted] = relabel.emplace(owner[i], static_cast<int>(relabel.size()));
            assignment[i] = it->second;
        }
        return assignment;
    };

    std::vector<std::vector<int>> levels(n);
    levels[n - 1] = snapshot();
    int next_id = static_cast<int>(n);
    while (clusters.size() > 1) {
        double best_cost = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{0, 0};
        std::size_t best_a = 0, best_b = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const Point ca = centroid_of(points, clusters[a].members);
                const Point cb = centroid_of(points, clusters[b].members);
                const double na = static_cast<double>(clusters[a].members.size());
                const double nb = static_cast<double>(clusters[b].members.size());
                double gap = 0.0;
                for (std::size_t d = 0; d < ca.size(); ++d)
                    gap += (ca[d] - cb[d]) * (ca[d] - cb[d]);
                const double cost = na * nb / (na + nb) * gap;
                const std::pair<int, int> key =
                    std::minmax(clusters[a].id, clusters[b].id);
                if (cost < best_cost || (cost == best_cost && key < best_key)) {
                    best_cost = cost;
                    best_key = key;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        auto& into = clusters[best_a];
        into.members.insert(into.members.end(), clusters[best_b].members.begin(),
                            clusters[best_b].members.end());
        std::sort(into.members.begin(), into.members.end());
        into.id = next_id++;
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
        levels[clusters.size() - 1] = snapshot();
    }
    return levels;
}

namespace {

double dtw_paths(const std::vector<double>& x, const std::vector<double>& y, std::size_t i,
                 std::size_t j) {
    const double cell = (x[i] - y[j]) * (x[i] - y[j]);
    if (i + 1 == x.size() && j + 1 == y.size()) return cell;
    double best = std::numeric_limits<double>::infinity();
    if (i + 1 < x.size()) best = std::min(best, dtw_paths(x, y, i + 1, j));
    if (j + 1 < y.size()) best = std::min(best, dtw_paths(x, y, i, j + 1));
    if (i + 1 < x.size() && j + 1 < y.size()) best = std::min(best, dtw_paths(x, y, i + 1, j + 1));
    return cell + best;
}

}  // namespace

double dtw_bruteforce(const std::vector<double>& x, const std::vector<double>& y) {
    return std::sqrt(dtw_paths(x, y, 0, 0));
}

double sse(const std::vector<Point>& points, const std::vector<int>& assignment) {
    const auto groups = group_members(assignment);
    double acc = 0.0;
    for (const auto& g : groups) {
        const Point c = centroid_of(points, g);
        for (std::size_t i : g) acc += dist(points[i], c) * dist(points[i], c);
    }
    return acc / static_cast<double>(points.size());
}

double nsse(const std::vector<Point>& points, const std::vector<int>& assignment,
            bool literal_denominator) {
    const auto groups = group_members(assignment);
    const std::size_t k = groups.size();
    std::vector<Point> centroids;
    for (const auto& g : groups) centroids.push_back(centroid_of(points, g));
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) sum += dist(centroids[i], centroids[j]);
    double denom;
    if (literal_denominator) {
        double factorial = 1.0;
        for (std::size_t t = 2; t < points.size(); ++t) factorial *= static_cast<double>(t);
        denom = factorial * sum;
    } else {
        denom = sum * 2.0 / static_cast<double>(k * (k - 1));
    }
    return sse(points, assignment) / denom;
}

double calinski_harabasz(const std::vector<Point>& points, const std::vector<int>& assignment) {
    const auto groups = group_members(assignment);
    std::vector<std::size_t> everything(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) everything[i] = i;
    const Point grand = centroid_of(points, everything);
    double tr_b = 0.0, tr_w = 0.0;
    for (const auto& g : groups) {
        const Point c = centroid_of(points, g);
        tr_b += static_cast<double>(g.size()) * dist(c, grand) * dist(c, grand);
        for (std::size_t i : g) tr_w += dist(points[i], c) * dist(points[i], c);
    }
    if (tr_w == 0.0) return std::numeric_limits<double>::infinity();
    const double t = static_cast<double>(points.size());
    const double k = static_cast<double>(groups.size());
    return tr_b * (t - k) / (tr_w * (k - 1.0));
}

double silhouette(const std::vector<Point>& points, const std::vector<int>& assignment) {
    const auto groups = group_members(assignment);
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double a = 0.0;
        for (std::size_t j : groups[static_cast<std::size_t>(assignment[i])])
            a += dist(points[i], points[j]);
        a /= static_cast<double>(groups[static_cast<std::size_t>(assignment[i])].size());
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (static_cast<int>(g) == assignment[i]) continue;
            double mean = 0.0;
            for (std::size_t j : groups[g]) mean += dist(points[i], points[j]);
            b = std::min(b, mean / static_cast<double>(groups[g].size()));
        }
        const double denom = std::max(a, b);
        total += denom == 0.0 ? 0.0 : (b - a) / denom;
    }
    return total / static_cast<double>(points.size());
}

double davies_bouldin(const std::vector<Point>& points, const std::vector<int>& assignment) {
    const auto groups = group_members(assignment);
    std::vector<Point> centroids;
    std::vector<double> alpha;
    for (const auto& g : groups) {
        const Point c = centroid_of(points, g);
        double mean = 0.0;
        for (std::size_t i : g) mean += dist(points[i], c);
        alpha.push_back(mean / static_cast<double>(g.size()));
        centroids.push_back(c);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < groups.size(); ++j)
            if (j != i)
                worst = std::max(worst, (alpha[i] + alpha[j]) / dist(centroids[i], centroids[j]));
        acc += worst;
    }
    return acc / static_cast<double>(groups.size());
}

double dunn(const std::vector<Point>& points, const std::vector<int>& assignment,
            ts3c::DunnVariant variant) {
    const auto groups = group_members(assignment);
    std::vector<Point> centroids;
    for (const auto& g : groups) centroids.push_back(centroid_of(points, g));

    double max_diam = 0.0;
    for (std::size_t m = 0; m < groups.size(); ++m) {
        double diam = 0.0;
        if (variant == ts3c::DunnVariant::GD53) {
            for (std::size_t i : groups[m]) {
                Point reflected(points[i].size());
                for (std::size_t d = 0; d < reflected.size(); ++d)
                    reflected[d] = 2.0 * centroids[m][d] - points[i][d];
                double nearest = std::numeric_limits<double>::infinity();
                for (std::size_t j : groups[m]) nearest = std::min(nearest, dist(reflected, points[j]));
                diam += nearest;
            }
            diam *= 2.0 / static_cast<double>(groups[m].size());
        } else {
            for (std::size_t a : groups[m])
                for (std::size_t b : groups[m]) diam = std::max(diam, dist(points[a], points[b]));
        }
        max_diam = std::max(max_diam, diam);
    }
    if (max_diam == 0.0) return std::numeric_limits<double>::infinity();

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            double delta = 0.0;
            if (variant == ts3c::DunnVariant::GD33) {
                for (std::size_t a : groups[i])
                    for (std::size_t b : groups[j]) delta += dist(points[a], points[b]);
                delta /= static_cast<double>(groups[i].size() * groups[j].size());
            } else if (variant == ts3c::DunnVariant::GD43) {
                delta = dist(centroids[i], centroids[j]);
            } else {
                for (std::size_t a : groups[i]) delta += dist(points[a], centroids[i]);
                for (std::size_t b : groups[j]) delta += dist(points[b], centroids[j]);
                delta /= static_cast<double>(groups[i].size() + groups[j].size());
            }
            best = std::min(best, delta / max_diam);
        }
    }
    return best;
}

double cop(const std::vector<Point>& points, const std::vector<int>& assignment) {
    const auto groups = group_members(assignment);
    double acc = 0.0;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        const Point centroid = centroid_of(points, groups[c]);
        double numerator = 0.0;
        for (std::size_t i : groups[c]) numerator += dist(points[i], centroid);
        double separation = std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < points.size(); ++x) {
            if (assignment[x] == static_cast<int>(c)) continue;
            double farthest = 0.0;
            for (std::size_t i : groups[c]) farthest = std::max(farthest, dist(points[x], points[i]));
            separation = std::min(separation, farthest);
        }
        acc += numerator / (static_cast<double>(groups[c].size()) * separation);
    }
    return acc / static_cast<double>(points.size());
}

double rand_index(const std::vector<int>& predicted, const std::vector<int>& truth) {
    double agree = 0.0, total = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        for (std::size_t j = i + 1; j < predicted.size(); ++j) {
            const bool same_cluster = predicted[i] == predicted[j];
            const bool same_class = truth[i] == truth[j];
            if (same_cluster == same_class) agree += 1.0;
            total += 1.0;
        }
    }
    return agree / total;
}

}  // namespace oracle
