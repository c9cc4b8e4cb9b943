#include "ts3c/hier_clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "ts3c/errors.hpp"

namespace ts3c {

double squared_euclidean(const Point& a, const Point& b) {
    double acc = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        acc += diff * diff;
    }
    return acc;
}

double euclidean_distance(const Point& a, const Point& b) {
    return std::sqrt(squared_euclidean(a, b));
}

std::vector<std::vector<std::size_t>> Partition::members() const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assignment.size(); ++i)
        out[static_cast<std::size_t>(assignment[i])].push_back(i);
    return out;
}

namespace {

// Generic stored-matrix agglomeration with per-row nearest-neighbour
// caching. Cluster identity for tie-breaking is the current id: leaves are
// 0..n-1 and the t-th merge creates id n+t, so ties always resolve to the
// lexicographically smallest (a, b) id pair.
class LinkageEngine {
public:
    LinkageEngine(const DistanceMatrix& distances, Linkage linkage)
        : n_(distances.size()), linkage_(linkage), cells_(n_ * n_, 0.0),
          size_(n_, 1), id_(n_), active_(n_, true), nn_cost_(n_), nn_slot_(n_) {
        for (std::size_t i = 0; i < n_; ++i) id_[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                at(i, j) = at(j, i) = distances(i, j);
    }

    Dendrogram run() {
        Dendrogram tree;
        tree.leaf_count = n_;
        if (n_ < 2) return tree;
        tree.merges.reserve(n_ - 1);
        for (std::size_t i = 0; i < n_; ++i) rescan_row(i);
        for (std::size_t step = 0; step + 1 < n_; ++step) {
            const std::size_t host = pick_best();
            const std::size_t gone = nn_slot_[host];
            tree.merges.push_back(make_merge(host, gone));
            merge(host, gone, static_cast<int>(n_ + step));
        }
        return tree;
    }

private:
    double& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
    double get(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

    std::pair<int, int> id_pair(std::size_t i, std::size_t j) const {
        return std::minmax(id_[i], id_[j]);
    }

    bool better(double cost_a, std::pair<int, int> key_a, double cost_b,
                std::pair<int, int> key_b) const {
        if (cost_a != cost_b) return cost_a < cost_b;
        return key_a < key_b;
    }

    void rescan_row(std::size_t i) {
        double best_cost = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{std::numeric_limits<int>::max(),
                                     std::numeric_limits<int>::max()};
        std::size_t best_slot = i;
        for (std::size_t j = 0; j < n_; ++j) {
            if (j == i || !active_[j]) continue;
            if (better(get(i, j), id_pair(i, j), best_cost, best_key)) {
                best_cost = get(i, j);
                best_key = id_pair(i, j);
                best_slot = j;
            }
        }
        nn_cost_[i] = best_cost;
        nn_slot_[i] = best_slot;
    }

    std::size_t pick_best() const {
        double best_cost = std::numeric_limits<double>::infinity();
        std::pair<int, int> best_key{std::numeric_limits<int>::max(),
                                     std::numeric_limits<int>::max()};
        std::size_t best = n_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!active_[i] || nn_slot_[i] == i) continue;
            const auto key = id_pair(i, nn_slot_[i]);
            if (better(nn_cost_[i], key, best_cost, best_key)) {
                best_cost = nn_cost_[i];
                best_key = key;
                best = i;
            }
        }
        return best;
    }

    Dendrogram::Merge make_merge(std::size_t host, std::size_t gone) const {
        const auto [a, b] = id_pair(host, gone);
        const double raw = get(host, gone);
        // Ward kept 2x the squared-error increase in the matrix.
        return {a, b, linkage_ == Linkage::Ward ? raw / 2.0 : raw};
    }

    void merge(std::size_t host, std::size_t gone, int new_id) {
        const double d_ab = get(host, gone);
        const double size_a = static_cast<double>(size_[host]);
        const double size_b = static_cast<double>(size_[gone]);
        for (std::size_t j = 0; j < n_; ++j) {
            if (!active_[j] || j == host || j == gone) continue;
            const double size_c = static_cast<double>(size_[j]);
            double updated = 0.0;
            switch (linkage_) {
                case Linkage::Ward:
                    updated = ((size_a + size_c) * get(host, j) +
                               (size_b + size_c) * get(gone, j) - size_c * d_ab) /
                              (size_a + size_b + size_c);
                    break;
                case Linkage::Average:
                    updated = (size_a * get(host, j) + size_b * get(gone, j)) /
                              (size_a + size_b);
                    break;
            }
            at(host, j) = at(j, host) = updated;
        }
        active_[gone] = false;
        size_[host] += size_[gone];
        id_[host] = new_id;

        rescan_row(host);
        for (std::size_t j = 0; j < n_; ++j) {
            if (!active_[j] || j == host) continue;
            if (nn_slot_[j] == gone || nn_slot_[j] == host) {
                rescan_row(j);
            } else if (better(get(j, host), id_pair(j, host), nn_cost_[j],
                              id_pair(j, nn_slot_[j]))) {
                nn_cost_[j] = get(j, host);
                nn_slot_[j] = host;
            }
        }
    }

    std::size_t n_;
    Linkage linkage_;
    std::vector<double> cells_;
    std::vector<int> size_;
    std::vector<int> id_;
    std::vector<char> active_;
    std::vector<double> nn_cost_;
    std::vector<std::size_t> nn_slot_;
};

}  // namespace

Dendrogram linkage_cluster(const DistanceMatrix& distances, Linkage linkage) {
    if (distances.size() == 0) throw ArgumentError("cannot cluster zero items");
    return LinkageEngine(distances, linkage).run();
}

Partition cut_dendrogram(const Dendrogram& dendrogram, int k) {
    const std::size_t n = dendrogram.leaf_count;
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ArgumentError("cut level k=" + std::to_string(k) + " out of range for n=" +
                            std::to_string(n));

    // Replay all but the last k-1 merges through a union-find over ids.
    std::vector<int> parent(n + dendrogram.merges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const std::size_t applied = n - static_cast<std::size_t>(k);
    for (std::size_t t = 0; t < applied; ++t) {
        const auto& m = dendrogram.merges[t];
        const int target = static_cast<int>(n + t);
        parent[find(m.a)] = target;
        parent[find(m.b)] = target;
    }

    Partition partition;
    partition.k = k;
    partition.assignment.resize(n);
    std::vector<int> label_of(parent.size(), -1);
    int next_label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int root = find(static_cast<int>(i));
        if (label_of[root] < 0) label_of[root] = next_label++;
        partition.assignment[i] = label_of[root];
    }
    return partition;
}

Dendrogram ward_linkage(const std::vector<Point>& points) {
    if (points.empty()) throw ArgumentError("cannot cluster zero points");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim) throw ArgumentError("points must share one dimension");
    DistanceMatrix distances(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            distances.set(i, j, squared_euclidean(points[i], points[j]));
    return linkage_cluster(distances, Linkage::Ward);
}

void fill_centroids(Partition& partition, const std::vector<Point>& points) {
    const std::size_t dim = points.empty() ? 0 : points.front().size();
    partition.centroids.assign(static_cast<std::size_t>(partition.k), Point(dim, 0.0));
    std::vector<std::size_t> counts(static_cast<std::size_t>(partition.k), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& centroid = partition.centroids[static_cast<std::size_t>(partition.assignment[i])];
        for (std::size_t d = 0; d < dim; ++d) centroid[d] += points[i][d];
        ++counts[static_cast<std::size_t>(partition.assignment[i])];
    }
    for (int c = 0; c < partition.k; ++c)
        for (std::size_t d = 0; d < dim; ++d)
            partition.centroids[static_cast<std::size_t>(c)][d] /=
                static_cast<double>(counts[static_cast<std::size_t>(c)]);
}

Partition ward_cluster(const std::vector<Point>& points, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > points.size())
        throw ArgumentError("k=" + std::to_string(k) + " out of range for " +
                            std::to_string(points.size()) + " points");
    Partition partition = cut_dendrogram(ward_linkage(points), k);
    fill_centroids(partition, points);
    return partition;
}

}  // namespace ts3c
